"""Theorem suites behind `braidforms selfcheck`.

Each suite reproduces one identity exactly on exhaustive small cases and
seeded random samples. The quick level runs in seconds; the full level
runs the acceptance sizes.
"""

import logging
import random
from collections.abc import Callable
from dataclasses import dataclass

from .algebra.braid import BraidWord, Permutation
from .algebra.hecke import (
    braid_to_hecke,
    hecke_mul,
    neg_perm_elt,
    pos_perm_elt,
    reconstruct,
    solve_in_neg_basis,
    star_elt,
    unit,
)
from .algebra.inner import Basis, expand_in_neg_basis, gram, inner, mfw_sharp
from .algebra.polynomial import Z, ZT, LaurentPoly
from .algebra.trace import (
    Side,
    extremal_column,
    framed_homfly,
    homfly_P,
    mfw_window_check,
    ocneanu_trace,
)
from .config import get_settings
from .exceptions import BraidformsError, SelfcheckFailure
from .fronts.construct import (
    closure_pos_braid,
    closure_two_perms,
    represented_word_pos_braid,
    represented_word_two_perms,
)
from .fronts.ruling import ruling_polynomial, validate_and_orient
from .schema import SelfcheckReport, SuiteResult
from .skein.diagram import braid_closure_pd
from .skein.oracle import SkeinEvaluator

logger = logging.getLogger(__name__)

LEVELS = ("quick", "full")


@dataclass(frozen=True)
class CheckContext:
    """Parameters shared by all suites of one run."""

    full: bool
    seed: int
    max_n: int

    def rng(self, suite: str) -> random.Random:
        return random.Random(f"{self.seed}:{suite}")

    def sizes(self, quick: int, full: int) -> int:
        return full if self.full else quick

    def strands(self, quick: int, full: int) -> range:
        return range(2, min(self.sizes(quick, full), self.max_n) + 1)


def _expect(ok: bool, suite: str, case: object) -> None:
    if not ok:
        raise SelfcheckFailure(suite, str(case))


def check_neg_orthonormality(ctx: CheckContext) -> int:
    """{ν_π} is orthonormal for the left form."""
    ns = ctx.strands(3, 4)
    for n in ns:
        g = gram(n, Basis.NEG, Side.LOWER, max_n=ctx.max_n)
        _expect(g.is_identity(), "neg-left", f"n={n}")
    return len(ns)


def check_pos_orthonormality(ctx: CheckContext) -> int:
    """{ω_π} is orthonormal for the right form."""
    ns = ctx.strands(3, 4)
    for n in ns:
        g = gram(n, Basis.POS, Side.UPPER, max_n=ctx.max_n)
        _expect(g.is_identity(), "pos-right", f"n={n}")
    return len(ns)


def check_expansion(ctx: CheckContext) -> int:
    """β = Σ ⟨β, ν_π⟩_L ν_π, cross-checked by back-substitution."""
    rng = ctx.rng("expansion")
    count = ctx.sizes(20, 200)
    choices = [n for n in (3, 4) if n <= ctx.max_n]
    if not choices:
        return 0
    for _ in range(count):
        w = BraidWord.random(rng, rng.choice(choices), 8)
        h = braid_to_hecke(w)
        coeffs = expand_in_neg_basis(h, max_n=ctx.max_n)
        _expect(reconstruct(coeffs, w.n) == h, "expansion", w)
        _expect(coeffs == solve_in_neg_basis(h), "expansion/solve", w)
    return count


def check_symmetry(ctx: CheckContext) -> int:
    """Symmetry of both forms and ⟨α, β⟩_L(z) = ⟨α^{-1}, β^{-1}⟩_R(-z)."""
    rng = ctx.rng("symmetry")
    count = ctx.sizes(20, 200)
    for _ in range(count):
        n = rng.randint(2, 4)
        a, b = BraidWord.random(rng, n, 6), BraidWord.random(rng, n, 6)
        left = inner(a, b, Side.LOWER)
        _expect(left == inner(b, a, Side.LOWER), "symmetry-L", (a, b))
        right = inner(a, b, Side.UPPER)
        _expect(right == inner(b, a, Side.UPPER), "symmetry-R", (a, b))
        mirrored = inner(a.inverse(), b.inverse(), Side.UPPER)
        _expect(left == mirrored.reflect("z"), "L/R", (a, b))
    return count


def check_mfw_window(ctx: CheckContext) -> int:
    """Every framed Homfly lies in the MFW window with parity n-1."""
    rng = ctx.rng("mfw")
    length = ctx.sizes(4, 6)
    cases = 0
    for n in (2, 3):
        for w in BraidWord.all_words(n, length):
            _expect(mfw_window_check(framed_homfly(w)), "mfw", w)
            cases += 1
    for n in (4, 5):
        for _ in range(ctx.sizes(10, 50)):
            w = BraidWord.random(rng, n, 8)
            _expect(mfw_window_check(framed_homfly(w)), "mfw", w)
            cases += 1
    return cases


def check_sharpness(ctx: CheckContext) -> int:
    """MFW is sharp on a side iff ⟨β, 1⟩ on that side is nonzero."""
    inverse_generator = BraidWord(2, (-1,))
    _expect(not mfw_sharp(inverse_generator, Side.LOWER), "sharpness", "σ1^-1 lower")
    _expect(mfw_sharp(inverse_generator, Side.UPPER), "sharpness", "σ1^-1 upper")
    rng = ctx.rng("sharpness")
    count = ctx.sizes(20, 100)
    for _ in range(count):
        w = BraidWord.random(rng, rng.randint(2, 4), 8)
        for side in Side:
            column = extremal_column(w, side)
            _expect(
                (not column.is_zero()) == (not inner(w, unit(w.n), side).is_zero()),
                "sharpness",
                (w, side.value),
            )
            mfw_sharp(w, side)
    return count + 2


def check_oracle(ctx: CheckContext) -> int:
    """Skein resolution agrees with the trace pipeline."""
    rng = ctx.rng("oracle")
    evaluator = SkeinEvaluator()
    length = ctx.sizes(3, 5)
    cases = 0
    for n in (2, 3):
        for w in BraidWord.all_words(n, length):
            _expect(evaluator.evaluate(braid_closure_pd(w)) == homfly_P(w), "oracle", w)
            cases += 1
    for _ in range(ctx.sizes(10, 100)):
        w = BraidWord.random(rng, 4, 7)
        _expect(evaluator.evaluate(braid_closure_pd(w)) == homfly_P(w), "oracle", w)
        cases += 1
    return cases


def check_markov(ctx: CheckContext) -> int:
    """Homfly is invariant under stabilization and conjugation."""
    rng = ctx.rng("markov")
    count = ctx.sizes(10, 50)
    for _ in range(count):
        n = rng.randint(1, 4)
        w = BraidWord.random(rng, n, 6)
        p = homfly_P(w)
        sign = rng.choice((1, -1))
        _expect(homfly_P(w.stabilize(sign)) == p, "stabilization", (w, sign))
        u = BraidWord.random(rng, n, 4)
        _expect(homfly_P(w.conjugate(u)) == p, "conjugation", (w, u))
    return 2 * count


def check_two_perm_fronts(ctx: CheckContext) -> int:
    """Ruling polynomial of the closure of ν_π ν_κ* is z^{1-n} δ_πκ."""
    cases = 0
    for n in range(1, min(ctx.sizes(3, 4), ctx.max_n) + 1):
        diagonal = LaurentPoly.var("z", Z, 1 - n)
        for pi in Permutation.all(n):
            for kappa in Permutation.all(n):
                f = closure_two_perms(pi, kappa)
                stats = validate_and_orient(f)
                crossings = pi.inversions() + kappa.inversions()
                case = (pi, kappa)
                _expect(stats.C == n, "front-cusps", case)
                _expect(len(stats.crossing_signs) == crossings, "front-crossings", case)
                _expect(all(s == -1 for s in stats.crossing_signs), "front-signs", case)
                _expect(stats.tb == -crossings - n, "front-tb", case)
                _expect(
                    stats.components == kappa.inverse().compose(pi).cycles(),
                    "front-components",
                    case,
                )
                expected = diagonal if pi == kappa else LaurentPoly.zero(Z)
                _expect(ruling_polynomial(f) == expected, "front-ruling", case)
                cases += 1
    return cases


def check_rutherford(ctx: CheckContext) -> int:
    """Ruling polynomials match ⟨β, ν_π⟩_L and the v^{tb+1} Homfly coefficient."""
    cases = 0
    length = ctx.sizes(3, 6)
    for n in (2, 3):
        perms = Permutation.all(n)
        for beta in BraidWord.all_words(n, length, positive=True):
            for pi in perms:
                f = closure_pos_braid(beta, pi)
                ruling = ruling_polynomial(f)
                case = (beta, pi)
                pairing = inner(beta, neg_perm_elt(pi), Side.LOWER)
                _expect(
                    ruling.shift("z", n - 1) == pairing,
                    "ruling-inner-link",
                    case,
                )
                tb = validate_and_orient(f).tb
                word = represented_word_pos_braid(beta, pi)
                coefficient = homfly_P(word).coeff_of("v", tb + 1)
                _expect(ruling == coefficient, "rutherford", case)
                cases += 1
        for pi in perms:
            for kappa in perms:
                f = closure_two_perms(pi, kappa)
                tb = validate_and_orient(f).tb
                word = represented_word_two_perms(pi, kappa)
                _expect(
                    ruling_polynomial(f) == homfly_P(word).coeff_of("v", tb + 1),
                    "rutherford",
                    (pi, kappa),
                )
                cases += 1
    return cases


def check_trace_axioms(ctx: CheckContext) -> int:
    """Tr(1) = 1, Tr(ab) = Tr(ba), Markov, star invariance, deg_T ≤ n-1."""
    T = LaurentPoly.var("T", ZT)
    cases = 0
    for n in range(1, min(ctx.sizes(3, 4), ctx.max_n) + 1):
        _expect(ocneanu_trace(unit(n)).value == LaurentPoly.one(ZT), "Tr(1)", n)
        basis = [pos_perm_elt(p) for p in Permutation.all(n)]
        for a in basis:
            for b in basis:
                ab = ocneanu_trace(hecke_mul(a, b))
                _expect(ab == ocneanu_trace(hecke_mul(b, a)), "Tr(ab)=Tr(ba)", (a, b))
                degree = ab.value.degree("T")
                _expect(degree is None or degree <= n - 1, "deg_T", (a, b))
                cases += 1
        if n >= 2:
            generator = braid_to_hecke(BraidWord(n, (n - 1,)))
            smaller = [
                pos_perm_elt(Permutation(p.image + (n,)))
                for p in Permutation.all(n - 1)
            ]
            for x in smaller:
                for y in smaller:
                    lhs = ocneanu_trace(hecke_mul(hecke_mul(x, generator), y)).value
                    rhs = T * ocneanu_trace(hecke_mul(x, y)).value
                    _expect(lhs == rhs, "markov-trace", (x, y))
                    cases += 1

    rng = ctx.rng("trace")
    for _ in range(ctx.sizes(20, 100)):
        n = rng.randint(2, 4)
        a = braid_to_hecke(BraidWord.random(rng, n, 6))
        b = braid_to_hecke(BraidWord.random(rng, n, 6))
        _expect(
            ocneanu_trace(hecke_mul(a, b)) == ocneanu_trace(hecke_mul(b, a)),
            "Tr(ab)=Tr(ba)",
            (a, b),
        )
        _expect(ocneanu_trace(star_elt(a)) == ocneanu_trace(a), "star", a)
        cases += 1
    return cases


SUITES: dict[str, tuple[str, Callable[[CheckContext], int]]] = {
    "nu-orthonormal-left": ("ν basis orthonormal (left)", check_neg_orthonormality),
    "omega-pos-right": ("ω basis orthonormal (right)", check_pos_orthonormality),
    "nu-expansion": ("expansion in the ν basis", check_expansion),
    "form-symmetry": ("symmetry and L/R identity", check_symmetry),
    "mfw-window": ("MFW window and parity", check_mfw_window),
    "mfw-sharpness": ("MFW sharpness vs unit", check_sharpness),
    "oracle-agreement": ("skein oracle agreement", check_oracle),
    "markov-invariance": ("Markov and conjugation invariance", check_markov),
    "two-perm-fronts": ("two-permutation fronts", check_two_perm_fronts),
    "rutherford-rulings": ("Rutherford and ruling inner products", check_rutherford),
    "trace-axioms": ("trace axioms", check_trace_axioms),
}


def run_suite(name: str, ctx: CheckContext) -> SuiteResult:
    """Run one suite, turning a counterexample or error into a failed result."""
    description, check = SUITES[name]
    try:
        cases = check(ctx)
    except BraidformsError as e:
        logger.debug("suite %s failed: %s", name, e)
        return SuiteResult(name=name, passed=False, cases=0, detail=str(e))
    return SuiteResult(name=name, passed=True, cases=cases, detail=description)


def run_selfcheck(
    level: str = "quick",
    seed: int = 0,
    max_n: int | None = None,
    suites: list[str] | None = None,
) -> SelfcheckReport:
    """Run the theorem suites and collect a report.

    Args:
        level: "quick" or "full".
        seed: Seed for every randomized suite.
        max_n: Override for the configured strand bound.
        suites: Names to run; all by default.

    Raises:
        ValueError: If the level or a suite name is unknown.
    """
    if level not in LEVELS:
        raise ValueError(f"unknown level {level!r}; expected one of {LEVELS}")
    names = list(SUITES) if suites is None else suites
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    ctx = CheckContext(
        full=level == "full",
        seed=seed,
        max_n=get_settings().max_n if max_n is None else max_n,
    )
    results = [run_suite(name, ctx) for name in names]
    return SelfcheckReport(
        level=level,
        seed=seed,
        passed=all(r.passed for r in results),
        suites=results,
    )
