"""Left and right inner products, Gram matrices and basis expansion.

⟨a, b⟩ is the rescaled extremal v-column of the framed Homfly polynomial
of a·b*, lower for the left form and upper for the right form. Writing
Tr(a·b*) = Σ T^k f_k(z), the lower column equals Tr at T = z and the upper
column equals f_0 = Tr at T = 0; every evaluation computes both and
insists they agree.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from functools import cache

import sympy

from ..config import get_settings
from ..exceptions import BoundExceededError, InnerProductError, PathMismatchError
from .braid import BraidWord, Permutation
from .hecke import (
    HeckeElement,
    as_element,
    hecke_mul,
    neg_perm_elt,
    pos_perm_elt,
    star_elt,
    unit,
)
from .polynomial import Z, LaurentPoly
from .trace import (
    Side,
    column_of,
    extremal_column,
    framed_homfly_of_trace,
    ocneanu_trace,
)

logger = logging.getLogger(__name__)

_ZERO = LaurentPoly.zero(Z)
Matrix = Sequence[Sequence[LaurentPoly]]


class Basis(Enum):
    """Distinguished bases of H_n(z)."""

    POS = "pos"  # positive permutation braids ω_π
    NEG = "neg"  # negative permutation braids ν_π


def _side(side: Side | str) -> Side:
    return side if isinstance(side, Side) else Side.parse(side)


def _check_bound(n: int, max_n: int | None) -> None:
    if n < 1:
        raise InnerProductError(f"strand count must be positive, got {n}")
    bound = get_settings().max_n if max_n is None else max_n
    if n > bound:
        raise BoundExceededError(n, bound)


def inner(
    a: HeckeElement | BraidWord,
    b: HeckeElement | BraidWord,
    side: Side | str,
) -> LaurentPoly:
    """⟨a, b⟩ on the chosen side, a polynomial in z.

    Raises:
        InnerProductError: If a and b live on different strand counts.
        PathMismatchError: If trace substitution and coefficient extraction
            disagree.
    """
    side = _side(side)
    x, y = as_element(a), as_element(b)
    if x.n != y.n:
        raise InnerProductError(f"strand mismatch: {x.n} vs {y.n}")
    tr = ocneanu_trace(hecke_mul(x, star_elt(y)))
    shortcut = tr.at_t_equals_z() if side is Side.LOWER else tr.at_t_equals_zero()
    extracted = column_of(framed_homfly_of_trace(tr), side)
    if shortcut != extracted:
        raise PathMismatchError(
            "L" if side is Side.LOWER else "R", shortcut.render(), extracted.render()
        )
    return extracted


@cache
def _omega_gram(n: int, side: Side) -> tuple[tuple[LaurentPoly, ...], ...]:
    """⟨ω_a, ω_b⟩ for a, b in lexicographic order."""
    perms = Permutation.all(n)
    rows = tuple(
        tuple(inner(pos_perm_elt(a), pos_perm_elt(b), side) for b in perms)
        for a in perms
    )
    logger.debug("filled omega gram n=%d side=%s", n, side.value)
    return rows


@cache
def _neg_change_of_basis(n: int) -> tuple[tuple[LaurentPoly, ...], ...]:
    """C[p][a]: coefficient of ω_a in ν_p."""
    perms = Permutation.all(n)
    return tuple(tuple(neg_perm_elt(p).coeff(a) for a in perms) for p in perms)


def _matmul(left: Matrix, right: Matrix) -> list[list[LaurentPoly]]:
    size = len(right[0])
    out = []
    for row in left:
        acc = [_ZERO] * size
        for k, x in enumerate(row):
            if x.is_zero():
                continue
            for j, y in enumerate(right[k]):
                if not y.is_zero():
                    acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def _transpose(m: Matrix) -> list[list[LaurentPoly]]:
    return [list(col) for col in zip(*m)]


@cache
def _neg_dual(n: int) -> tuple[tuple[LaurentPoly, ...], ...]:
    """D[p][a] = ⟨ω_a, ν_p⟩_L, so ⟨h, ν_p⟩_L = Σ_a h_a D[p][a]."""
    G = _omega_gram(n, Side.LOWER)
    C = _neg_change_of_basis(n)
    return tuple(tuple(row) for row in _matmul(C, _transpose(G)))


@dataclass(frozen=True)
class GramMatrix:
    """Gram matrix of a distinguished basis, rows in lexicographic order."""

    n: int
    basis: Basis
    side: Side
    perms: tuple[Permutation, ...]
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def is_identity(self) -> bool:
        one = LaurentPoly.one(Z)
        return all(
            x == (one if i == j else _ZERO)
            for i, row in enumerate(self.entries)
            for j, x in enumerate(row)
        )


def gram(
    n: int,
    basis: Basis | str,
    side: Side | str,
    max_n: int | None = None,
) -> GramMatrix:
    """n!×n! matrix of inner products of basis elements.

    Args:
        n: Strand count.
        basis: "pos" (Ω) or "neg" (N).
        side: L/lower or R/upper.
        max_n: Override for the configured bound on n.

    Raises:
        BoundExceededError: If n is above the bound.
        InnerProductError: If n is not positive.
    """
    _check_bound(n, max_n)
    basis = basis if isinstance(basis, Basis) else Basis(basis)
    side = _side(side)
    G = _omega_gram(n, side)
    if basis is Basis.POS:
        entries = G
    else:
        C = _neg_change_of_basis(n)
        entries = tuple(tuple(r) for r in _matmul(_matmul(C, G), _transpose(C)))
    return GramMatrix(n, basis, side, tuple(Permutation.all(n)), entries)


def bilinear_inner(
    a: HeckeElement | BraidWord,
    b: HeckeElement | BraidWord,
    side: Side | str,
) -> LaurentPoly:
    """⟨a, b⟩ through the cached Ω-basis Gram matrix."""
    side = _side(side)
    x, y = as_element(a), as_element(b)
    if x.n != y.n:
        raise InnerProductError(f"strand mismatch: {x.n} vs {y.n}")
    perms = Permutation.all(x.n)
    index = {p: i for i, p in enumerate(perms)}
    G = _omega_gram(x.n, side)
    total = _ZERO
    for p, c in x.terms:
        for q, d in y.terms:
            total = total + c * d * G[index[p]][index[q]]
    return total


def expand_in_neg_basis(
    h: HeckeElement | BraidWord, max_n: int | None = None
) -> dict[Permutation, LaurentPoly]:
    """Coefficients ⟨h, ν_π⟩_L of h in the negative permutation-braid basis.

    Only nonzero coefficients are returned, keyed in lexicographic order.
    """
    x = as_element(h)
    _check_bound(x.n, max_n)
    perms = Permutation.all(x.n)
    index = {p: i for i, p in enumerate(perms)}
    D = _neg_dual(x.n)
    coeffs: dict[Permutation, LaurentPoly] = {}
    for k, p in enumerate(perms):
        c = _ZERO
        for a, coeff in x.terms:
            c = c + coeff * D[k][index[a]]
        if not c.is_zero():
            coeffs[p] = c
    return coeffs


def mfw_sharp(w: BraidWord, side: Side | str) -> bool:
    """True iff the extremal column on this side is nonzero.

    The column is read directly from the framed Homfly polynomial and,
    independently, as ⟨w, 1⟩ through the trace substitution; both must
    agree on whether it vanishes.

    Raises:
        InnerProductError: If the two evaluations disagree.
    """
    side = _side(side)
    direct = not extremal_column(w, side).is_zero()
    via_unit = not inner(w, unit(w.n), side).is_zero()
    if direct != via_unit:
        raise InnerProductError(
            f"sharpness of {w} on the {side.value} side differs between paths"
        )
    return direct


def to_sympy(p: LaurentPoly) -> sympy.Expr:
    symbols = sympy.symbols(p.varnames)
    expr = sympy.Integer(0)
    for exps, c in p.terms:
        term = sympy.Integer(c)
        for s, e in zip(symbols, exps):
            term *= s**e
        expr += term
    return expr


def from_sympy_z(expr: sympy.Expr) -> LaurentPoly:
    """Convert a sympy polynomial in z back to a LaurentPoly."""
    z = sympy.Symbol("z")
    poly = sympy.Poly(sympy.expand(expr), z)
    return LaurentPoly.from_dict(
        Z, {(m[0],): int(c) for m, c in zip(poly.monoms(), poly.coeffs())}
    )


def gram_determinant(g: GramMatrix) -> LaurentPoly:
    """Determinant of a Gram matrix over Z[z]."""
    matrix = sympy.Matrix([[to_sympy(x) for x in row] for row in g.entries])
    return from_sympy_z(matrix.det(method="berkowitz"))
