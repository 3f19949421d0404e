"""End-to-end theorem reproduction at acceptance sizes."""

import random

import pytest

from braidforms.algebra import (
    Basis,
    BraidWord,
    Permutation,
    Side,
    braid_to_hecke,
    expand_in_neg_basis,
    gram,
    homfly_P,
    inner,
    neg_perm_elt,
    perm_of,
    reduced_word,
    reconstruct,
)
from braidforms.algebra.polynomial import Z, LaurentPoly
from braidforms.fronts import (
    closure_pos_braid,
    closure_two_perms,
    represented_word_pos_braid,
    ruling_polynomial,
    validate_and_orient,
)
from braidforms.selfcheck import SUITES, CheckContext
from braidforms.skein import braid_closure_pd, skein_homfly

FULL = CheckContext(full=True, seed=0, max_n=6)


class TestReducedWords:
    """Reduced words realize every permutation with minimal length."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_exhaustive(self, n: int) -> None:
        """perm_of(reduced_word(π)) = π and the length is inv(π)."""
        for pi in Permutation.all(n):
            letters = reduced_word(pi)

            assert perm_of(BraidWord(n, letters)) == pi
            assert len(letters) == pi.inversions()


class TestOrthonormality:
    """N is orthonormal on the left, Ω on the right."""

    @pytest.mark.parametrize("n", [2, 3])
    def test_small(self, n: int) -> None:
        """Exact identity matrices for n = 2, 3."""
        assert gram(n, Basis.NEG, Side.LOWER).is_identity()
        assert gram(n, Basis.POS, Side.UPPER).is_identity()

    @pytest.mark.slow
    def test_four_strands(self) -> None:
        """Exact 24×24 identity matrices."""
        assert gram(4, Basis.NEG, Side.LOWER).is_identity()
        assert gram(4, Basis.POS, Side.UPPER).is_identity()


class TestExpansion:
    """Every braid expands in N with inner-product coefficients."""

    def test_seeded_braids(self) -> None:
        """Σ ⟨β, ν_π⟩_L ν_π = β on seeded B₃ braids."""
        rng = random.Random(3)
        for _ in range(25):
            w = BraidWord.random(rng, 3, 8)

            assert reconstruct(expand_in_neg_basis(w), 3) == braid_to_hecke(w)


class TestOracleEquivalence:
    """Trace pipeline and skein oracle agree."""

    def test_all_short_words(self) -> None:
        """Every word of length ≤ 3 in B₂ and B₃."""
        for n in (2, 3):
            for w in BraidWord.all_words(n, 3):
                assert skein_homfly(braid_closure_pd(w)) == homfly_P(w)


class TestTwoPermutationFronts:
    """Ruling polynomials of ν_π ν_κ* closures are z^{1-n} δ_πκ."""

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_exhaustive(self, n: int) -> None:
        """All pairs, with C = n, negative crossings and tb = -(inv π + inv κ) - n."""
        for pi in Permutation.all(n):
            for kappa in Permutation.all(n):
                f = closure_two_perms(pi, kappa)
                stats = validate_and_orient(f)
                diagonal = LaurentPoly.var("z", Z, 1 - n)
                expected = diagonal if pi == kappa else LaurentPoly.zero(Z)

                assert ruling_polynomial(f) == expected
                assert stats.C == n
                assert all(s == -1 for s in stats.crossing_signs)
                assert stats.tb == -(pi.inversions() + kappa.inversions()) - n


class TestRutherford:
    """Ruling polynomials of positive-braid fronts."""

    def test_ruling_inner_product_and_homfly_coefficient(self) -> None:
        """z^{n-1} R = ⟨β, ν_π⟩_L and R = [v^{tb+1}] P on short B₂, B₃ braids."""
        for n in (2, 3):
            for beta in BraidWord.all_words(n, 3, positive=True):
                for pi in Permutation.all(n):
                    f = closure_pos_braid(beta, pi)
                    ruling = ruling_polynomial(f)
                    tb = validate_and_orient(f).tb
                    word = represented_word_pos_braid(beta, pi)

                    assert ruling.shift("z", n - 1) == inner(
                        beta, neg_perm_elt(pi), Side.LOWER
                    )
                    assert ruling == homfly_P(word).coeff_of("v", tb + 1)


@pytest.mark.slow
class TestFullSuites:
    """Every theorem suite at its full acceptance size."""

    @pytest.mark.parametrize("name", list(SUITES))
    def test_suite(self, name: str) -> None:
        """No counterexample at the full size."""
        _, check = SUITES[name]

        assert check(FULL) > 0
