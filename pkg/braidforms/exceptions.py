"""Exceptions raised by braidforms.

Every error derives from BraidformsError so callers (the CLI in
particular) can separate computation failures from usage mistakes.
"""


class BraidformsError(Exception):
    """Base class for all braidforms errors."""


def _location(label: str, value: object | None) -> str:
    if value is None:
        return ""
    return f" ({label} {value!r})"


# Polynomials


class PolynomialError(BraidformsError):
    """Invalid polynomial operation (varname mismatch, non-unit inverse)."""


class PolynomialParseError(PolynomialError):
    """Error parsing the canonical polynomial text format.

    Attributes:
        message: The error message.
        text: The term that failed to parse.
        position: Index of the offending term (0-indexed).
    """

    def __init__(
        self,
        message: str,
        text: str | None = None,
        position: int | None = None,
    ) -> None:
        self.message = message
        self.text = text
        self.position = position

        location = _location("term", text)
        if position is not None:
            location = f"{location} at term {position}"

        super().__init__(f"{message}{location}")


# Braids and permutations


class BraidError(BraidformsError):
    """Invalid braid word or permutation."""


class BraidParseError(BraidError):
    """Error parsing a braid word or a permutation.

    Attributes:
        message: The error message.
        token: The offending token, if any.
        index: Position of the token in the input (1-indexed).
    """

    def __init__(
        self,
        message: str,
        token: str | None = None,
        index: int | None = None,
    ) -> None:
        self.message = message
        self.token = token
        self.index = index

        location = ""
        if token is not None:
            location = f": {token!r}"
            if index is not None:
                location = f": {token!r} at token {index}"

        super().__init__(f"{message}{location}")


# Algebra


class HeckeError(BraidformsError):
    """Invalid Hecke algebra operation (strand mismatch, bad generator)."""


class TraceError(BraidformsError):
    """The trace or a value derived from it broke a structural guarantee."""


class MFWViolationError(TraceError):
    """A framed Homfly polynomial left the Morton-Franks-Williams window.

    Attributes:
        n: Strand count of the braid.
        exponent: The offending v-exponent.
        reason: "window" or "parity".
    """

    def __init__(self, n: int, exponent: int, reason: str) -> None:
        self.n = n
        self.exponent = exponent
        self.reason = reason
        super().__init__(
            f"v-exponent {exponent} violates the MFW {reason} for n={n}"
        )


class InnerProductError(BraidformsError):
    """Invalid inner product evaluation."""


class PathMismatchError(InnerProductError):
    """Trace substitution and coefficient extraction disagree.

    Attributes:
        side: "L" or "R".
        shortcut: Rendered value from the trace substitution.
        extracted: Rendered value from coefficient extraction.
    """

    def __init__(self, side: str, shortcut: str, extracted: str) -> None:
        self.side = side
        self.shortcut = shortcut
        self.extracted = extracted
        super().__init__(
            f"{side} inner product paths disagree: "
            f"substitution gives {shortcut}, extraction gives {extracted}"
        )


class BoundExceededError(BraidformsError):
    """Strand count above the configured bound for n!-sized work.

    Attributes:
        n: Requested strand count.
        bound: Configured maximum (BRAIDFORMS_MAX_N).
    """

    def __init__(self, n: int, bound: int) -> None:
        self.n = n
        self.bound = bound
        super().__init__(f"n={n} exceeds the configured bound {bound}")


# Fronts


class FrontError(BraidformsError):
    """Invalid front diagram."""


class FrontParseError(FrontError):
    """Error parsing the front text format.

    Attributes:
        message: The error message.
        token: The offending token, if any.
        index: Position of the token in the input (1-indexed).
    """

    def __init__(
        self,
        message: str,
        token: str | None = None,
        index: int | None = None,
    ) -> None:
        self.message = message
        self.token = token
        self.index = index

        location = ""
        if token is not None:
            location = f": {token!r}"
            if index is not None:
                location = f": {token!r} at token {index}"

        super().__init__(f"{message}{location}")


class FrontFileNotFoundError(FrontError):
    """Front file not found at the specified path.

    Attributes:
        path: The path that was not found.
    """

    def __init__(self, path: str) -> None:
        self.path = path
        super().__init__(f"Front file not found: {path}")


class FrontStructureError(FrontError):
    """An event is illegal for the current strand count, or the front is open.

    Attributes:
        message: The error message.
        event_index: Index of the offending event (1-indexed), if any.
    """

    def __init__(self, message: str, event_index: int | None = None) -> None:
        self.message = message
        self.event_index = event_index

        location = ""
        if event_index is not None:
            location = f" at event {event_index}"

        super().__init__(f"{message}{location}")


class FrontOrientationError(FrontError):
    """Orientations cannot be propagated consistently along a component."""


# Skein oracle


class SkeinError(BraidformsError):
    """The skein recursion broke one of its termination guarantees."""


class SkeinResourceError(SkeinError):
    """Diagram too large for the skein oracle.

    Attributes:
        crossings: Crossing count of the diagram.
        cap: Configured crossing cap.
    """

    def __init__(self, crossings: int, cap: int) -> None:
        self.crossings = crossings
        self.cap = cap
        super().__init__(
            f"diagram has {crossings} crossings, above the skein oracle cap {cap}"
        )


# Selfcheck


class SelfcheckFailure(BraidformsError):
    """A theorem check found a counterexample.

    Attributes:
        suite: Name of the failing suite.
        case: Description of the counterexample.
    """

    def __init__(self, suite: str, case: str) -> None:
        self.suite = suite
        self.case = case
        super().__init__(f"{suite}: counterexample {case}")
