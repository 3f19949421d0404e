"""Data models for Legendrian front diagrams and their rulings."""

from dataclasses import dataclass
from enum import Enum

from ..algebra.polynomial import LaurentPoly


class EventKind(Enum):
    """What happens at one step of the left-to-right sweep."""

    BIRTH = "B"  # left cusp, inserts positions i, i+1
    CROSS = "X"  # crossing, swaps positions i, i+1
    DEATH = "D"  # right cusp, removes positions i, i+1


@dataclass(frozen=True)
class FrontEvent:
    """A single event; positions are 1-based, top to bottom."""

    kind: EventKind
    position: int

    def __str__(self) -> str:
        return f"{self.kind.value}{self.position}"

    def mirrored(self) -> "FrontEvent":
        """The event seen after a 180° rotation that keeps vertical positions."""
        swap = {
            EventKind.BIRTH: EventKind.DEATH,
            EventKind.DEATH: EventKind.BIRTH,
            EventKind.CROSS: EventKind.CROSS,
        }
        return FrontEvent(swap[self.kind], self.position)


def B(i: int) -> FrontEvent:
    return FrontEvent(EventKind.BIRTH, i)


def X(i: int) -> FrontEvent:
    return FrontEvent(EventKind.CROSS, i)


def D(i: int) -> FrontEvent:
    return FrontEvent(EventKind.DEATH, i)


@dataclass(frozen=True)
class FrontDiagram:
    """A front as an event word.

    Attributes:
        events: The sweep, left to right.
        reversed_components: Optional per-component override, in order of
            first birth; True reverses the default orientation. Empty means
            every component keeps its default.
    """

    events: tuple[FrontEvent, ...]
    reversed_components: tuple[bool, ...] = ()

    def __str__(self) -> str:
        text = " ".join(map(str, self.events))
        if self.reversed_components:
            flags = " ".join("-" if r else "+" for r in self.reversed_components)
            text = f"{text} ; {flags}"
        return text

    def __add__(self, other: "FrontDiagram") -> "FrontDiagram":
        return FrontDiagram(self.events + other.events)

    @property
    def births(self) -> int:
        return sum(1 for e in self.events if e.kind is EventKind.BIRTH)

    @property
    def crossings(self) -> int:
        return sum(1 for e in self.events if e.kind is EventKind.CROSS)


@dataclass(frozen=True)
class FrontStats:
    """Cusp count, writhe and Thurston-Bennequin number of a front."""

    C: int
    w: int
    tb: int
    crossing_signs: tuple[int, ...]
    components: int


@dataclass(frozen=True)
class Ruling:
    """An oriented ruling: the switched crossings (0-based crossing indices)."""

    switches: tuple[int, ...]
    theta: int


@dataclass(frozen=True)
class RulingSet:
    """All oriented rulings of a front and their generating polynomial."""

    rulings: tuple[Ruling, ...]
    polynomial: LaurentPoly  # Σ z^{1-θ}
