"""Ocneanu trace, framed and oriented Homfly polynomials, MFW columns."""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cache

from ..exceptions import MFWViolationError, TraceError
from .braid import BraidWord, Permutation
from .hecke import HeckeElement, braid_to_hecke, mul_gen, pos_perm_elt
from .polynomial import VZ, Z, ZT, LaurentPoly

logger = logging.getLogger(__name__)


class Side(Enum):
    """Which extremal v-column of the framed Homfly polynomial."""

    LOWER = "lower"  # v^{1-n}, left inner product
    UPPER = "upper"  # v^{n-1}, right inner product

    @classmethod
    def parse(cls, text: str) -> "Side":
        key = text.strip().lower()
        aliases = {
            "l": cls.LOWER,
            "lower": cls.LOWER,
            "r": cls.UPPER,
            "upper": cls.UPPER,
        }
        if key not in aliases:
            raise ValueError(f"unknown side {text!r}; expected L/R or lower/upper")
        return aliases[key]


@dataclass(frozen=True)
class TracePoly:
    """Value of the trace, a polynomial in (z, T) of T-degree at most n-1."""

    n: int
    value: LaurentPoly

    def __post_init__(self) -> None:
        if self.value.varnames != ZT:
            raise TraceError(f"trace values live in Z[z,T], got {self.value.varnames}")
        if not self.value.is_polynomial():
            raise TraceError(f"trace value {self.value} has negative exponents")
        degree = self.value.degree("T")
        if degree is not None and degree > self.n - 1:
            raise TraceError(f"T-degree {degree} exceeds n-1 = {self.n - 1}")

    def t_coefficients(self) -> list[LaurentPoly]:
        """[f_0, ..., f_{n-1}] with Tr = Σ T^k f_k(z)."""
        return [self.value.coeff_of("T", k) for k in range(self.n)]

    def at_t_equals_z(self) -> LaurentPoly:
        return self.value.substitute("T", LaurentPoly.var("z", Z))

    def at_t_equals_zero(self) -> LaurentPoly:
        return self.value.coeff_of("T", 0)


@dataclass(frozen=True)
class FramedHomfly:
    """H_β in (v, z); v-exponents lie in [1-n, n-1] with parity n-1."""

    n: int
    value: LaurentPoly


def assert_mfw(H: FramedHomfly) -> FramedHomfly:
    """Return H unchanged, or raise if it leaves the MFW window or parity.

    Raises:
        MFWViolationError: On the first offending v-exponent.
    """
    lo, hi = 1 - H.n, H.n - 1
    for exponent in H.value.exponents_of("v"):
        if not lo <= exponent <= hi:
            raise MFWViolationError(H.n, exponent, "window")
        if (exponent - hi) % 2:
            raise MFWViolationError(H.n, exponent, "parity")
    return H


@cache
def _trace_of_basis(image: tuple[int, ...]) -> LaurentPoly:
    """Tr(ω_π) by stripping fixed last points and one Markov step at a time."""
    while image and image[-1] == len(image):
        image = image[:-1]
    n = len(image)
    if n == 0:
        return LaurentPoly.one(ZT)
    j = image[-1]
    rho = Permutation(tuple(x if x < j else x - 1 for x in image[:-1]))
    h = pos_perm_elt(rho)
    for i in range(n - 2, j - 1, -1):
        h = mul_gen(h, i, 1)
    inner = LaurentPoly.zero(ZT)
    for sigma, c in h.terms:
        inner = inner + c.embed(ZT) * _trace_of_basis(sigma.image)
    return inner.shift("T", 1)


def ocneanu_trace(h: HeckeElement) -> TracePoly:
    """Z[z]-linear trace with Tr(1) = 1 and Tr(xσ_{n-1}y) = T·Tr(xy)."""
    total = LaurentPoly.zero(ZT)
    for pi, c in h.terms:
        total = total + c.embed(ZT) * _trace_of_basis(pi.image)
    return TracePoly(h.n, total)


def trace_of_braid(w: BraidWord) -> TracePoly:
    return ocneanu_trace(braid_to_hecke(w))


def framed_homfly_of_trace(tr: TracePoly) -> FramedHomfly:
    """Σ_k v^{1-n} (1-v²)^{n-1-k} z^{k-n+1} f_k(z), the T = z/(1-v²) substitution."""
    n = tr.n
    one_minus_v2 = LaurentPoly.one(VZ) - LaurentPoly.var("v", VZ, 2)
    total = LaurentPoly.zero(VZ)
    for k, f_k in enumerate(tr.t_coefficients()):
        if f_k.is_zero():
            continue
        term = f_k.embed(VZ) * one_minus_v2 ** (n - 1 - k)
        total = total + term.shift("v", 1 - n).shift("z", k - n + 1)
    return assert_mfw(FramedHomfly(n, total))


def framed_homfly_of_element(h: HeckeElement) -> FramedHomfly:
    return framed_homfly_of_trace(ocneanu_trace(h))


def framed_homfly(w: BraidWord) -> FramedHomfly:
    return framed_homfly_of_element(braid_to_hecke(w))


def homfly_P(w: BraidWord) -> LaurentPoly:
    """Oriented Homfly polynomial P = v^{exponent sum} · H."""
    return framed_homfly(w).value.shift("v", w.exponent_sum)


def column_of(H: FramedHomfly, side: Side) -> LaurentPoly:
    """Rescaled extremal v-coefficient of H, a polynomial in z.

    Raises:
        TraceError: If the rescaled column has a negative z-exponent.
    """
    n = H.n
    if side is Side.LOWER:
        column = H.value.coeff_of("v", 1 - n).shift("z", n - 1)
    else:
        column = H.value.coeff_of("v", n - 1).shift("z", n - 1) * (-1) ** (n - 1)
    if not column.is_polynomial():
        raise TraceError(f"{side.value} column {column} is not in Z[z]")
    return column


def extremal_column(w: BraidWord, side: Side) -> LaurentPoly:
    return column_of(framed_homfly(w), side)


def mfw_window_check(H: FramedHomfly) -> bool:
    """True iff every v-exponent of H lies in [1-n, n-1]."""
    return all(1 - H.n <= e <= H.n - 1 for e in H.value.exponents_of("v"))


@dataclass(frozen=True)
class MFWReport:
    """Extremal columns of H and the braid-index lower bound from span_v P."""

    n: int
    writhe: int
    v_min: int | None
    v_max: int | None
    lower: LaurentPoly
    upper: LaurentPoly
    braid_index_bound: int

    @property
    def lower_sharp(self) -> bool:
        return not self.lower.is_zero()

    @property
    def upper_sharp(self) -> bool:
        return not self.upper.is_zero()


def mfw_report(w: BraidWord) -> MFWReport:
    """Columns, v-range of P and the bound span_v(P)/2 + 1 ≤ braid index."""
    H = framed_homfly(w)
    P = H.value.shift("v", w.exponent_sum)
    report = MFWReport(
        n=w.n,
        writhe=w.exponent_sum,
        v_min=P.low_degree("v"),
        v_max=P.degree("v"),
        lower=column_of(H, Side.LOWER),
        upper=column_of(H, Side.UPPER),
        braid_index_bound=P.span("v") // 2 + 1,
    )
    logger.debug("mfw report for %s: %s", w, report)
    return report
