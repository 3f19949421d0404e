"""Orientation, crossing signs and oriented rulings of fronts.

Strands are the arcs between a left cusp and a right cusp; each one
travels in a single horizontal direction, and cusps reverse it. A crossing
is positive exactly when its two strands travel the same way.
"""

import logging
from collections import deque
from dataclasses import dataclass

from ..algebra.polynomial import Z, LaurentPoly
from ..exceptions import FrontOrientationError, FrontStructureError
from .models import EventKind, FrontDiagram, FrontStats, Ruling, RulingSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FrontAnalysis:
    """Strand-level bookkeeping of one sweep.

    Attributes:
        live: Strand ids by position after each event (index 0 is the
            empty start, index t+1 follows event t).
        crossing_strands: (upper, lower) strand ids entering each crossing.
        direction: +1 (rightward) or -1 (leftward) per strand id.
        component: Component index per strand id, ordered by first birth.
        signs: Sign of each crossing, in sweep order.
    """

    live: tuple[tuple[int, ...], ...]
    crossing_strands: tuple[tuple[int, int], ...]
    direction: tuple[int, ...]
    component: tuple[int, ...]
    signs: tuple[int, ...]

    @property
    def components(self) -> int:
        return len(set(self.component))


class _UnionFind:
    def __init__(self) -> None:
        self.parent: list[int] = []

    def add(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        self.parent[self.find(a)] = self.find(b)


def analyze(f: FrontDiagram) -> FrontAnalysis:
    """Sweep the front, checking event legality and orienting every strand.

    Raises:
        FrontStructureError: If an event position is illegal or strands
            remain at the end.
        FrontOrientationError: If the orientation cannot be propagated or
            the override does not match the component count.
    """
    live: list[int] = []
    snapshots: list[tuple[int, ...]] = [()]
    uf = _UnionFind()
    cusp_pairs: list[tuple[int, int]] = []
    first_births: list[int] = []
    crossing_strands: list[tuple[int, int]] = []

    for index, event in enumerate(f.events, start=1):
        k = event.position - 1
        if event.kind is EventKind.BIRTH:
            if not 0 <= k <= len(live):
                raise FrontStructureError(
                    f"birth at {event.position} with {len(live)} live strands", index
                )
            upper, lower = uf.add(), uf.add()
            uf.union(upper, lower)
            cusp_pairs.append((upper, lower))
            first_births.append(lower)
            live[k:k] = [upper, lower]
        else:
            if not 0 <= k < len(live) - 1:
                raise FrontStructureError(
                    f"{event.kind.name.lower()} at {event.position} "
                    f"with {len(live)} live strands",
                    index,
                )
            if event.kind is EventKind.CROSS:
                crossing_strands.append((live[k], live[k + 1]))
                live[k], live[k + 1] = live[k + 1], live[k]
            else:
                uf.union(live[k], live[k + 1])
                cusp_pairs.append((live[k], live[k + 1]))
                del live[k : k + 2]
        snapshots.append(tuple(live))

    if live:
        raise FrontStructureError(f"front is not closed: {len(live)} strands remain")

    strand_count = len(uf.parent)
    roots: dict[int, int] = {}
    for strand in first_births:
        roots.setdefault(uf.find(strand), len(roots))
    component = tuple(roots[uf.find(s)] for s in range(strand_count))

    direction = _orient(strand_count, cusp_pairs, first_births, uf)

    override = f.reversed_components
    if override:
        if len(override) != len(roots):
            raise FrontOrientationError(
                f"{len(override)} orientation flags for {len(roots)} components"
            )
        direction = [
            -d if override[component[s]] else d for s, d in enumerate(direction)
        ]

    signs = tuple(
        1 if direction[a] == direction[b] else -1 for a, b in crossing_strands
    )
    return FrontAnalysis(
        live=tuple(snapshots),
        crossing_strands=tuple(crossing_strands),
        direction=tuple(direction),
        component=component,
        signs=signs,
    )


def _orient(
    strand_count: int,
    cusp_pairs: list[tuple[int, int]],
    first_births: list[int],
    uf: _UnionFind,
) -> list[int]:
    """The lower strand of each component's first birth points rightward."""
    neighbours: list[list[int]] = [[] for _ in range(strand_count)]
    for a, b in cusp_pairs:
        neighbours[a].append(b)
        neighbours[b].append(a)

    direction = [0] * strand_count
    seen_roots: set[int] = set()
    for start in first_births:
        root = uf.find(start)
        if root in seen_roots:
            continue
        seen_roots.add(root)
        direction[start] = 1
        queue = deque([start])
        while queue:
            s = queue.popleft()
            for t in neighbours[s]:
                if direction[t] == 0:
                    direction[t] = -direction[s]
                    queue.append(t)
                elif direction[t] == direction[s]:
                    raise FrontOrientationError(
                        f"strands {s} and {t} meet at a cusp with the same direction"
                    )
    return direction


def validate_and_orient(f: FrontDiagram) -> FrontStats:
    """Cusp count, writhe and tb = w - C of a closed front."""
    analysis = analyze(f)
    C = f.births
    w = sum(analysis.signs)
    return FrontStats(
        C=C,
        w=w,
        tb=w - C,
        crossing_signs=analysis.signs,
        components=analysis.components,
    )


def _birth(p: tuple[int, ...], k: int) -> tuple[int, ...]:
    def shift(x: int) -> int:
        return x if x < k else x + 2

    return (
        tuple(shift(x) for x in p[:k])
        + (k + 1, k)
        + tuple(shift(x) for x in p[k:])
    )


def _death(p: tuple[int, ...], k: int) -> tuple[int, ...]:
    def shift(x: int) -> int:
        return x if x < k else x - 2

    return tuple(shift(x) for x in p[:k] + p[k + 2 :])


def _cross(p: tuple[int, ...], k: int) -> tuple[int, ...]:
    def t(x: int) -> int:
        return k + 1 if x == k else k if x == k + 1 else x

    return tuple(t(p[t(j)]) for j in range(len(p)))


def _normal_switch(p: tuple[int, ...], k: int) -> bool:
    """Companion intervals of the two crossing strands are disjoint or nested."""
    a0, a1 = sorted((k, p[k]))
    b0, b1 = sorted((k + 1, p[k + 1]))
    disjoint = a1 < b0 or b1 < a0
    nested = (a0 < b0 and b1 < a1) or (b0 < a0 and a1 < b1)
    return disjoint or nested


def enumerate_rulings(f: FrontDiagram) -> RulingSet:
    """Depth-first enumeration of the oriented rulings of a closed front.

    The sweep state is a fixed-point-free involution on live positions
    pairing each strand with its companion in the current eye.

    The empty front is rejected: it has no eye to carry a ruling.

    Raises:
        FrontStructureError: If the front is not closed or illegal.
        FrontOrientationError: If the front cannot be oriented.
    """
    if not f.events:
        raise FrontStructureError("the empty front has no rulings")
    analysis = analyze(f)
    C = f.births
    crossing_index: list[int] = []
    count = 0
    for event in f.events:
        crossing_index.append(count)
        if event.kind is EventKind.CROSS:
            count += 1

    found: list[Ruling] = []
    stack: list[tuple[int, tuple[int, ...], tuple[int, ...]]] = [(0, (), ())]
    while stack:
        t, p, switches = stack.pop()
        if t == len(f.events):
            found.append(Ruling(switches, C - len(switches)))
            continue
        event = f.events[t]
        k = event.position - 1
        if event.kind is EventKind.BIRTH:
            stack.append((t + 1, _birth(p, k), switches))
        elif event.kind is EventKind.DEATH:
            if p[k] == k + 1:
                stack.append((t + 1, _death(p, k), switches))
        else:
            if p[k] == k + 1:
                continue
            c = crossing_index[t]
            stack.append((t + 1, _cross(p, k), switches))
            if analysis.signs[c] > 0 and _normal_switch(p, k):
                stack.append((t + 1, p, switches + (c,)))

    rulings = tuple(sorted(found, key=lambda r: r.switches))
    for ruling in rulings:
        if any(analysis.signs[c] < 0 for c in ruling.switches):
            raise FrontStructureError(
                f"ruling {ruling.switches} switches a negative crossing"
            )

    polynomial = LaurentPoly.from_dict(Z, {})
    for ruling in rulings:
        polynomial = polynomial + LaurentPoly.var("z", Z, 1 - ruling.theta)
    logger.debug("front with %d events has %d rulings", len(f.events), len(rulings))
    return RulingSet(rulings, polynomial)


def ruling_polynomial(f: FrontDiagram) -> LaurentPoly:
    """Σ z^{1-θ} over the oriented rulings of f."""
    return enumerate_rulings(f).polynomial
