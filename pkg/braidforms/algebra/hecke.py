"""The Hecke algebra H_n(z) on the basis of positive permutation braids.

Elements are stored only in the Ω basis: a map from permutations π to
coefficients in Z[z] on ω_π. Generators act on the right through the
quadratic relation σ_i - σ_i^{-1} = z.
"""

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from functools import cache, cached_property

from ..exceptions import HeckeError
from .braid import BraidWord, Permutation
from .polynomial import Z, LaurentPoly

logger = logging.getLogger(__name__)

_ZERO = LaurentPoly.zero(Z)
_ONE = LaurentPoly.one(Z)


@dataclass(frozen=True)
class HeckeElement:
    """A Z[z]-linear combination of positive permutation braids.

    Attributes:
        n: Strand count.
        terms: (π, coefficient) pairs sorted by π; coefficients are nonzero
            polynomials in z with no negative exponents.
    """

    n: int
    terms: tuple[tuple[Permutation, LaurentPoly], ...] = ()

    @classmethod
    def from_dict(
        cls, n: int, coeffs: Mapping[Permutation, LaurentPoly]
    ) -> "HeckeElement":
        for pi, c in coeffs.items():
            if pi.n != n:
                raise HeckeError(f"{pi} is not a permutation of {n} points")
            if c.varnames != Z:
                raise HeckeError(f"coefficient {c} is not a polynomial in z")
        kept = sorted((p, c) for p, c in coeffs.items() if not c.is_zero())
        return cls(n, tuple(kept))

    @cached_property
    def coeffs(self) -> dict[Permutation, LaurentPoly]:
        return dict(self.terms)

    def coeff(self, pi: Permutation) -> LaurentPoly:
        return self.coeffs.get(pi, _ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "HeckeElement") -> None:
        if other.n != self.n:
            raise HeckeError(f"strand mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        acc = dict(self.coeffs)
        for pi, c in other.terms:
            acc[pi] = acc.get(pi, _ZERO) + c
        return HeckeElement.from_dict(self.n, acc)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.n, tuple((p, -c) for p, c in self.terms))

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> "HeckeElement":
        """Multiply every coefficient by a scalar in Z[z]."""
        if isinstance(c, int):
            c = LaurentPoly.constant(c, Z)
        return HeckeElement.from_dict(self.n, {p: x * c for p, x in self.terms})

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        return hecke_mul(self, other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*w{p}" for p, c in self.terms)


def _sum(n: int, parts: Iterable[tuple[Permutation, LaurentPoly]]) -> HeckeElement:
    acc: dict[Permutation, LaurentPoly] = {}
    for pi, c in parts:
        acc[pi] = acc.get(pi, _ZERO) + c
    return HeckeElement.from_dict(n, acc)


def unit(n: int) -> HeckeElement:
    """The identity ω_id."""
    if n < 1:
        raise HeckeError(f"strand count must be positive, got {n}")
    return HeckeElement(n, ((Permutation.identity(n), _ONE),))


def _length_increases(pi: Permutation, i: int) -> bool:
    """ℓ(s_i ∘ π) > ℓ(π) iff the value i sits left of i+1."""
    img = pi.image
    return img.index(i) < img.index(i + 1)


def mul_gen(h: HeckeElement, i: int, sign: int = 1) -> HeckeElement:
    """Right multiplication by σ_i^{sign}.

    Raises:
        HeckeError: If i is not a generator index of H_n or sign is not ±1.
    """
    if not 1 <= i <= h.n - 1:
        raise HeckeError(f"generator {i} out of range for {h.n} strands")
    if sign not in (1, -1):
        raise HeckeError(f"sign must be ±1, got {sign}")
    parts: list[tuple[Permutation, LaurentPoly]] = []
    for pi, c in h.terms:
        swapped = pi.swap_values(i)
        parts.append((swapped, c))
        if _length_increases(pi, i):
            if sign < 0:
                parts.append((pi, -c.shift("z", 1)))
        elif sign > 0:
            parts.append((pi, c.shift("z", 1)))
    return _sum(h.n, parts)


def _fold(h: HeckeElement, letters: Iterable[int]) -> HeckeElement:
    for letter in letters:
        h = mul_gen(h, abs(letter), 1 if letter > 0 else -1)
    return h


def braid_to_hecke(w: BraidWord) -> HeckeElement:
    """The image of a braid word in H_n(z)."""
    return _fold(unit(w.n), w.letters)


def hecke_mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Bilinear product, expanding each key of b through its reduced word."""
    if a.n != b.n:
        raise HeckeError(f"strand mismatch: {a.n} vs {b.n}")
    result = HeckeElement(a.n)
    for kappa, c in b.terms:
        result = result + _fold(a, kappa.reduced_word()).scale(c)
    return result


def pos_perm_elt(pi: Permutation) -> HeckeElement:
    """The basis element ω_π."""
    return HeckeElement(pi.n, ((pi, _ONE),))


@cache
def neg_perm_elt(pi: Permutation) -> HeckeElement:
    """The image of ν_π: the reduced word of π with every letter negated."""
    return _fold(unit(pi.n), (-i for i in pi.reduced_word()))


def star_elt(h: HeckeElement) -> HeckeElement:
    """Word-reversal anti-automorphism: ω_π ↦ ω_{π^{-1}}."""
    return HeckeElement.from_dict(h.n, {p.inverse(): c for p, c in h.terms})


def as_element(x: "HeckeElement | BraidWord") -> HeckeElement:
    """Accept either an element or a braid word."""
    if isinstance(x, BraidWord):
        return braid_to_hecke(x)
    return x


def solve_in_neg_basis(h: HeckeElement) -> dict[Permutation, LaurentPoly]:
    """Coordinates of h in the basis {ν_π} by back-substitution.

    ν_π is ω_π plus strictly shorter terms, so peeling off the longest
    remaining key always terminates and never divides.
    """
    remainder = h
    coords: dict[Permutation, LaurentPoly] = {}
    while not remainder.is_zero():
        pi, c = max(remainder.terms, key=lambda t: (t[0].inversions(), t[0]))
        coords[pi] = c
        remainder = remainder - neg_perm_elt(pi).scale(c)
    logger.debug("solved %d-strand element in %d neg-basis terms", h.n, len(coords))
    return dict(sorted(coords.items()))


def reconstruct(coords: Mapping[Permutation, LaurentPoly], n: int) -> HeckeElement:
    """Σ c_π ν_π."""
    result = HeckeElement(n)
    for pi, c in coords.items():
        result = result + neg_perm_elt(pi).scale(c)
    return result
