"""Parser for the front text format.

A front is a whitespace-separated event word, optionally followed by a
``;`` and one orientation flag per component::

    B1 B2 X3 X3 X3 D2 D1
    B1 B1 X2 X2 D1 D1 ; + -

"+" keeps a component's default orientation, "-" reverses it. Lines
starting with ``#`` are comments.
"""

import re
from pathlib import Path

from ..exceptions import FrontFileNotFoundError, FrontParseError
from .models import EventKind, FrontDiagram, FrontEvent

_TOKEN = re.compile(r"^([BXD])([1-9]\d*)$")

_KIND_MAP: dict[str, EventKind] = {kind.value: kind for kind in EventKind}


class FrontParser:
    """Parser for front event words."""

    def parse_file(self, path: str | Path) -> FrontDiagram:
        """Parse a front file.

        Args:
            path: Path to the front file.

        Returns:
            Parsed FrontDiagram.

        Raises:
            FrontFileNotFoundError: If the file does not exist.
            FrontParseError: If the file contains an invalid token.
        """
        path = Path(path)
        if not path.exists():
            raise FrontFileNotFoundError(str(path))

        content = path.read_text(encoding="utf-8")
        return self.parse_string(content)

    def parse_string(self, content: str) -> FrontDiagram:
        """Parse a front from a string.

        Args:
            content: Front text.

        Returns:
            Parsed FrontDiagram. Blank content yields the empty front.

        Raises:
            FrontParseError: If an event token or orientation flag is invalid.
        """
        lines = [
            line for line in content.splitlines() if not line.lstrip().startswith("#")
        ]
        text = " ".join(lines)

        word, sep, flags = text.partition(";")
        events = tuple(
            self._parse_event(token, index)
            for index, token in enumerate(word.split(), start=1)
        )

        reversed_components: tuple[bool, ...] = ()
        if sep:
            reversed_components = tuple(
                self._parse_flag(token, index)
                for index, token in enumerate(flags.split(), start=1)
            )

        return FrontDiagram(events, reversed_components)

    def _parse_event(self, token: str, index: int) -> FrontEvent:
        match = _TOKEN.match(token)
        if match is None:
            raise FrontParseError("malformed front event", token, index)
        return FrontEvent(_KIND_MAP[match.group(1)], int(match.group(2)))

    def _parse_flag(self, token: str, index: int) -> bool:
        if token not in ("+", "-"):
            raise FrontParseError("orientation flags must be + or -", token, index)
        return token == "-"


def parse_front(path: str | Path) -> FrontDiagram:
    """Parse a front file.

    Convenience function that creates a FrontParser and parses the file.

    Args:
        path: Path to the front file.

    Returns:
        Parsed FrontDiagram.
    """
    return FrontParser().parse_file(path)


def parse_front_text(text: str) -> FrontDiagram:
    """Parse front text given inline (for example on the command line)."""
    return FrontParser().parse_string(text)
