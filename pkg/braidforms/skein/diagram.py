"""Oriented link diagrams for the skein oracle.

A diagram is a list of crossings over integer edge labels plus a count of
crossingless circles. Every edge enters exactly one crossing and leaves
exactly one crossing, so following in -> out through each crossing
traverses the components.
"""

from dataclasses import dataclass

from ..algebra.braid import BraidWord


@dataclass(frozen=True, order=True)
class Crossing:
    """One crossing: its sign and the four incident edges by role."""

    sign: int
    in_over: int
    out_over: int
    in_under: int
    out_under: int

    def is_bad(self) -> bool:
        """Reached on the under-strand before the over-strand."""
        return self.in_under < self.in_over

    def switched(self) -> "Crossing":
        """Exchange over and under, which flips the sign."""
        return Crossing(
            -self.sign, self.in_under, self.out_under, self.in_over, self.out_over
        )

    def relabel(self, mapping: dict[int, int]) -> "Crossing":
        return Crossing(
            self.sign,
            mapping[self.in_over],
            mapping[self.out_over],
            mapping[self.in_under],
            mapping[self.out_under],
        )

    def pd(self) -> tuple[int, int, int, int]:
        """Rotation-order 4-tuple starting at the incoming under-edge."""
        if self.sign > 0:
            return (self.in_under, self.out_over, self.out_under, self.in_over)
        return (self.in_under, self.in_over, self.out_under, self.out_over)


@dataclass(frozen=True)
class PlanarDiagram:
    """Crossings over edge labels, plus free (crossingless) circles."""

    crossings: tuple[Crossing, ...]
    free_loops: int = 0

    def _successor(self) -> dict[int, int]:
        succ: dict[int, int] = {}
        for c in self.crossings:
            succ[c.in_over] = c.out_over
            succ[c.in_under] = c.out_under
        return succ

    def traversal(self) -> list[list[int]]:
        """Edge cycles of the components, each from its smallest edge."""
        succ = self._successor()
        seen: set[int] = set()
        cycles = []
        for start in sorted(succ):
            if start in seen:
                continue
            cycle = []
            e = start
            while e not in seen:
                seen.add(e)
                cycle.append(e)
                e = succ[e]
            cycles.append(cycle)
        return cycles

    @property
    def components(self) -> int:
        return len(self.traversal()) + self.free_loops

    def normalized(self) -> "PlanarDiagram":
        """Relabel edges 0, 1, ... in based traversal order; sort crossings."""
        mapping: dict[int, int] = {}
        for cycle in self.traversal():
            for e in cycle:
                mapping[e] = len(mapping)
        return PlanarDiagram(
            tuple(sorted(c.relabel(mapping) for c in self.crossings)),
            self.free_loops,
        )

    def reversed(self) -> "PlanarDiagram":
        """Reverse the orientation of every component."""
        return PlanarDiagram(
            tuple(
                Crossing(c.sign, c.out_over, c.in_over, c.out_under, c.in_under)
                for c in self.crossings
            ),
            self.free_loops,
        ).normalized()

    def pd_code(self) -> list[tuple[int, int, int, int]]:
        return [c.pd() for c in self.crossings]

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)


def braid_closure_pd(w: BraidWord) -> PlanarDiagram:
    """Closure diagram of a braid, one crossing per letter.

    Positions count from 1; at σ_k the strand at position k moves to k+1.
    A positive letter puts that strand over, a negative letter puts the
    other one over. Final edges are glued back to the starting ones.
    """
    current = list(range(w.n))
    next_edge = w.n
    crossings: list[Crossing] = []
    for letter in w.letters:
        k = abs(letter) - 1
        top, bottom = current[k], current[k + 1]
        to_lower, to_upper = next_edge, next_edge + 1
        next_edge += 2
        if letter > 0:
            crossings.append(Crossing(1, top, to_lower, bottom, to_upper))
        else:
            crossings.append(Crossing(-1, bottom, to_upper, top, to_lower))
        current[k], current[k + 1] = to_upper, to_lower

    glue = {final: start for start, final in enumerate(current)}
    mapping = {e: glue.get(e, e) for e in range(next_edge)}
    free = sum(1 for start, final in enumerate(current) if final == start)
    return PlanarDiagram(
        tuple(c.relabel(mapping) for c in crossings), free
    ).normalized()
