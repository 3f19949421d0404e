"""Homfly polynomial by skein resolution towards descending diagrams.

Independent of the Hecke/trace pipeline: it only shares the polynomial
type. The skein relation v^{-1} P₊ - v P₋ = z P₀ gives

    P₊ = v² P₋ + v z P₀
    P₋ = v^{-2} P₊ - v^{-1} z P₀

and a descending diagram with c components is the unlink, with value
((v^{-1} - v) / z)^{c-1}.
"""

import logging

from ..algebra.polynomial import VZ, LaurentPoly
from ..config import get_settings
from ..exceptions import SkeinError, SkeinResourceError
from .diagram import Crossing, PlanarDiagram

logger = logging.getLogger(__name__)

_V = LaurentPoly.var("v", VZ)
_VZ = _V * LaurentPoly.var("z", VZ)
_V2 = _V**2
_V_INV = _V**-1
_V_INV2 = _V**-2
_V_INV_Z = _V_INV * LaurentPoly.var("z", VZ)
_DELTA = (_V_INV - _V) * LaurentPoly.var("z", VZ, -1)


def unlink(components: int) -> LaurentPoly:
    """((v^{-1} - v) / z)^{c-1}."""
    return _DELTA ** (components - 1)


def _smooth(d: PlanarDiagram, index: int) -> PlanarDiagram:
    """Oriented smoothing: in_over joins out_under, in_under joins out_over."""
    c = d.crossings[index]
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    loops = d.free_loops
    for a, b in ((c.in_over, c.out_under), (c.in_under, c.out_over)):
        ra, rb = find(a), find(b)
        if ra == rb:
            loops += 1
        else:
            parent[ra] = rb

    rest = d.crossings[:index] + d.crossings[index + 1 :]
    edges = {e for x in rest for e in (x.in_over, x.out_over, x.in_under, x.out_under)}
    mapping = {e: find(e) for e in edges}
    return PlanarDiagram(tuple(x.relabel(mapping) for x in rest), loops).normalized()


def _switch(d: PlanarDiagram, index: int) -> PlanarDiagram:
    crossings = list(d.crossings)
    crossings[index] = crossings[index].switched()
    return PlanarDiagram(tuple(crossings), d.free_loops).normalized()


def _rank(d: PlanarDiagram) -> tuple[int, int]:
    return len(d.crossings), sum(1 for c in d.crossings if c.is_bad())


class SkeinEvaluator:
    """Memoized skein recursion on normalized diagrams.

    Args:
        max_crossings: Crossing cap; defaults to the configured
            BRAIDFORMS_SKEIN_MAX_CROSSINGS.
    """

    def __init__(self, max_crossings: int | None = None) -> None:
        if max_crossings is None:
            max_crossings = get_settings().skein_max_crossings
        self.max_crossings = max_crossings
        self._memo: dict[PlanarDiagram, LaurentPoly] = {}

    def evaluate(self, d: PlanarDiagram) -> LaurentPoly:
        """Homfly polynomial of the diagram.

        Raises:
            SkeinResourceError: If the diagram has more crossings than the cap.
            SkeinError: If a recursion step fails to reduce the diagram.
        """
        if len(d.crossings) > self.max_crossings:
            raise SkeinResourceError(len(d.crossings), self.max_crossings)
        result = self._evaluate(d.normalized())
        logger.debug("skein memo holds %d diagrams", len(self._memo))
        return result

    def _evaluate(self, d: PlanarDiagram) -> LaurentPoly:
        cached = self._memo.get(d)
        if cached is not None:
            return cached

        bad = [i for i, c in enumerate(d.crossings) if c.is_bad()]
        if not bad:
            result = unlink(d.components)
        else:
            index = min(bad, key=lambda i: d.crossings[i].in_under)
            crossing: Crossing = d.crossings[index]
            switched, smoothed = _switch(d, index), _smooth(d, index)
            rank = _rank(d)
            if not (_rank(switched) < rank and _rank(smoothed) < rank):
                raise SkeinError(
                    f"skein step at {crossing} does not reduce the diagram"
                )
            if crossing.sign > 0:
                result = _V2 * self._evaluate(switched) + _VZ * self._evaluate(smoothed)
            else:
                result = _V_INV2 * self._evaluate(switched) - _V_INV_Z * self._evaluate(
                    smoothed
                )

        self._memo[d] = result
        return result


def skein_homfly(d: PlanarDiagram, max_crossings: int | None = None) -> LaurentPoly:
    """Homfly polynomial of d by skein resolution."""
    return SkeinEvaluator(max_crossings).evaluate(d)
