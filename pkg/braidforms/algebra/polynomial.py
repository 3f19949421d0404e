"""Sparse exact Laurent polynomials in up to two named variables.

A LaurentPoly is an immutable value: a tuple of variable names and a
canonical, sorted tuple of (exponent tuple, nonzero integer coefficient)
pairs. Canonical storage makes structural equality coincide with
mathematical equality, so polynomials can be compared, hashed and used as
cache keys directly.

The canonical text format joins terms with " + " / " - "; each term is
"c", "c*x^a" or "c*x^a*y^b", an exponent of 1 is written as the bare
variable and a coefficient of 1 is elided except on the constant term::

    2*v^2 + v^2*z^2 - v^4
    v^-1*z^-1 - v*z^-1
"""

import logging
import re
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

from ..exceptions import PolynomialError, PolynomialParseError

logger = logging.getLogger(__name__)

Exponents = tuple[int, ...]

_TERM_SPLIT = re.compile(r"\s+([+-])\s+")
_FACTOR = re.compile(r"^([A-Za-z]\w*)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class LaurentPoly:
    """Exact Laurent polynomial with integer coefficients.

    Attributes:
        varnames: Ordered variable names (at most two).
        terms: Sorted (exponents, coefficient) pairs; no zero coefficients.
    """

    varnames: tuple[str, ...]
    terms: tuple[tuple[Exponents, int], ...] = ()

    def __post_init__(self) -> None:
        if len(self.varnames) > 2:
            raise PolynomialError(
                f"at most two variables are supported, got {self.varnames}"
            )
        if len(set(self.varnames)) != len(self.varnames):
            raise PolynomialError(f"duplicate variable names {self.varnames}")

    # Construction

    @classmethod
    def from_dict(
        cls, varnames: Sequence[str], terms: Mapping[Exponents, int]
    ) -> "LaurentPoly":
        """Build the canonical polynomial from an exponent -> coefficient map."""
        width = len(varnames)
        for exps in terms:
            if len(exps) != width:
                raise PolynomialError(
                    f"exponent tuple {exps} does not match variables {tuple(varnames)}"
                )
        canonical = tuple(sorted((e, c) for e, c in terms.items() if c != 0))
        return cls(tuple(varnames), canonical)

    @classmethod
    def zero(cls, varnames: Sequence[str]) -> "LaurentPoly":
        return cls(tuple(varnames))

    @classmethod
    def constant(cls, value: int, varnames: Sequence[str]) -> "LaurentPoly":
        return cls.from_dict(varnames, {(0,) * len(varnames): value})

    @classmethod
    def one(cls, varnames: Sequence[str]) -> "LaurentPoly":
        return cls.constant(1, varnames)

    @classmethod
    def monomial(
        cls, varnames: Sequence[str], exponents: Exponents, coeff: int = 1
    ) -> "LaurentPoly":
        return cls.from_dict(varnames, {tuple(exponents): coeff})

    @classmethod
    def var(
        cls, name: str, varnames: Sequence[str], power: int = 1
    ) -> "LaurentPoly":
        """The monomial name^power inside the polynomial ring over varnames."""
        if name not in varnames:
            raise PolynomialError(f"{name!r} is not one of {tuple(varnames)}")
        exps = tuple(power if v == name else 0 for v in varnames)
        return cls.monomial(varnames, exps)

    # Views

    @cached_property
    def as_dict(self) -> dict[Exponents, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_polynomial(self) -> bool:
        """True iff no exponent is negative."""
        return all(x >= 0 for e, _ in self.terms for x in e)

    def _index(self, var: str) -> int:
        try:
            return self.varnames.index(var)
        except ValueError:
            raise PolynomialError(
                f"{var!r} is not one of {self.varnames}"
            ) from None

    def exponents_of(self, var: str) -> list[int]:
        """Sorted distinct exponents of var occurring in the polynomial."""
        idx = self._index(var)
        return sorted({e[idx] for e, _ in self.terms})

    def degree(self, var: str) -> int | None:
        exps = self.exponents_of(var)
        return exps[-1] if exps else None

    def low_degree(self, var: str) -> int | None:
        exps = self.exponents_of(var)
        return exps[0] if exps else None

    def span(self, var: str) -> int:
        """Difference between highest and lowest exponent of var (0 if zero)."""
        exps = self.exponents_of(var)
        return exps[-1] - exps[0] if exps else 0

    # Arithmetic

    def _check(self, other: "LaurentPoly") -> None:
        if self.varnames != other.varnames:
            raise PolynomialError(
                f"variable mismatch: {self.varnames} vs {other.varnames}"
            )

    def _coerce(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.varnames)
        self._check(other)
        return other

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = self._coerce(other)
        acc = dict(self.as_dict)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly.from_dict(self.varnames, acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.varnames, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "LaurentPoly":
        return self._coerce(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero(self.varnames)
            return LaurentPoly(
                self.varnames, tuple((e, c * other) for e, c in self.terms)
            )
        self._check(other)
        acc: dict[Exponents, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                key = tuple(a + b for a, b in zip(e1, e2))
                acc[key] = acc.get(key, 0) + c1 * c2
        return LaurentPoly.from_dict(self.varnames, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        """Integer power; negative powers only exist for unit monomials."""
        if k < 0:
            if len(self.terms) != 1 or abs(self.terms[0][1]) != 1:
                raise PolynomialError(
                    f"{self.render()} is not a unit; cannot raise to power {k}"
                )
            (e, c), = self.terms
            return LaurentPoly.monomial(
                self.varnames, tuple(x * k for x in e), c ** (-k)
            )
        result = LaurentPoly.one(self.varnames)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, var: str, k: int) -> "LaurentPoly":
        """Multiply by var^k."""
        idx = self._index(var)
        return LaurentPoly(
            self.varnames,
            tuple(
                (tuple(x + k if i == idx else x for i, x in enumerate(e)), c)
                for e, c in self.terms
            ),
        )

    def reflect(self, var: str) -> "LaurentPoly":
        """Substitute var -> -var."""
        idx = self._index(var)
        return LaurentPoly(
            self.varnames,
            tuple((e, -c if e[idx] % 2 else c) for e, c in self.terms),
        )

    # Coefficients and change of ring

    def coeff_of(self, var: str, k: int) -> "LaurentPoly":
        """Coefficient of var^k as a polynomial in the remaining variable(s)."""
        idx = self._index(var)
        rest = tuple(v for v in self.varnames if v != var)
        acc = {
            e[:idx] + e[idx + 1 :]: c for e, c in self.terms if e[idx] == k
        }
        return LaurentPoly.from_dict(rest, acc)

    def substitute(self, var: str, value: "LaurentPoly") -> "LaurentPoly":
        """Replace var by a polynomial in the remaining variable(s)."""
        rest = tuple(v for v in self.varnames if v != var)
        if value.varnames != rest:
            raise PolynomialError(
                f"substituting {var!r} needs a polynomial in {rest}, "
                f"got one in {value.varnames}"
            )
        result = LaurentPoly.zero(rest)
        for k in self.exponents_of(var):
            result = result + self.coeff_of(var, k) * value**k
        return result

    def embed(self, varnames: Sequence[str]) -> "LaurentPoly":
        """Re-express the polynomial over a superset of its variables."""
        target = tuple(varnames)
        missing = [v for v in self.varnames if v not in target]
        if missing:
            raise PolynomialError(f"cannot embed {self.varnames} into {target}")
        positions = [
            self.varnames.index(v) if v in self.varnames else None for v in target
        ]
        acc = {
            tuple(0 if p is None else e[p] for p in positions): c
            for e, c in self.terms
        }
        return LaurentPoly.from_dict(target, acc)

    # Text and JSON

    def render(self) -> str:
        """Canonical text form, ascending by exponent tuple."""
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for i, (e, c) in enumerate(self.terms):
            factors = []
            for name, x in zip(self.varnames, e):
                if x == 1:
                    factors.append(name)
                elif x != 0:
                    factors.append(f"{name}^{x}")
            magnitude = abs(c)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(magnitude), *factors])
            if i == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()

    @classmethod
    def parse(cls, text: str, varnames: Sequence[str]) -> "LaurentPoly":
        """Parse the canonical text format.

        Args:
            text: Polynomial text such as "2*v^2 + v^2*z^2 - v^4".
            varnames: Variables of the target ring.

        Returns:
            The parsed polynomial.

        Raises:
            PolynomialParseError: If a term is malformed or names an
                unknown variable.
        """
        varnames = tuple(varnames)
        stripped = text.strip()
        if not stripped:
            raise PolynomialParseError("empty polynomial text")
        parts = _TERM_SPLIT.split(stripped)
        signs = ["+", *parts[1::2]]
        acc: dict[Exponents, int] = {}
        for position, (sign, term) in enumerate(zip(signs, parts[0::2])):
            exps, coeff = _parse_term(term, varnames, position)
            if sign == "-":
                coeff = -coeff
            acc[exps] = acc.get(exps, 0) + coeff
        return cls.from_dict(varnames, acc)

    def to_json(self) -> dict[str, object]:
        return {
            "varnames": list(self.varnames),
            "terms": [[*e, c] for e, c in self.terms],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, object]) -> "LaurentPoly":
        varnames = tuple(data["varnames"])  # type: ignore[arg-type]
        rows: Iterable[Sequence[int]] = data["terms"]  # type: ignore[assignment]
        return cls.from_dict(varnames, {tuple(r[:-1]): r[-1] for r in rows})


def _parse_term(
    term: str, varnames: tuple[str, ...], position: int
) -> tuple[Exponents, int]:
    body = term.strip()
    negative = body.startswith("-")
    if negative:
        body = body[1:]
    if not body:
        raise PolynomialParseError("empty term", term, position)
    coeff = 1
    exps = [0] * len(varnames)
    for k, factor in enumerate(body.split("*")):
        if k == 0 and factor.isdigit():
            coeff = int(factor)
            continue
        match = _FACTOR.match(factor)
        if match is None:
            raise PolynomialParseError("malformed factor", term, position)
        name, power = match.group(1), match.group(2)
        if name not in varnames:
            raise PolynomialParseError(f"unknown variable {name!r}", term, position)
        exps[varnames.index(name)] += int(power) if power is not None else 1
    return tuple(exps), -coeff if negative else coeff


# Function forms of the core operations


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def coeff_of(p: LaurentPoly, var: str, k: int) -> LaurentPoly:
    return p.coeff_of(var, k)


# Rings used throughout the package
Z = ("z",)
ZT = ("z", "T")
VZ = ("v", "z")


def zpoly(coeffs: Mapping[int, int]) -> LaurentPoly:
    """Polynomial in z from an exponent -> coefficient map."""
    return LaurentPoly.from_dict(Z, {(k,): c for k, c in coeffs.items()})
