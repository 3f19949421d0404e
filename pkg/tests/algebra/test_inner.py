"""Tests for the left/right inner products and their Gram matrices."""

import random

import pytest

from braidforms.algebra.braid import BraidWord, Permutation
from braidforms.algebra.hecke import braid_to_hecke, neg_perm_elt, pos_perm_elt, unit
from braidforms.algebra.inner import (
    Basis,
    bilinear_inner,
    expand_in_neg_basis,
    gram,
    gram_determinant,
    inner,
    mfw_sharp,
)
from braidforms.algebra.polynomial import Z, LaurentPoly, zpoly
from braidforms.algebra.trace import Side
from braidforms.exceptions import BoundExceededError, InnerProductError

ONE = LaurentPoly.one(Z)
SIGMA = BraidWord(2, (1,))


def P(*image: int) -> Permutation:
    return Permutation(image)


class TestInner:
    """Test single inner product evaluations."""

    def test_neg_basis_diagonal(self) -> None:
        """⟨ν_[2,1], ν_[2,1]⟩_L = 1."""
        nu = neg_perm_elt(P(2, 1))

        assert inner(nu, nu, Side.LOWER) == ONE

    def test_neg_basis_off_diagonal(self) -> None:
        """⟨ν_[2,1], ν_[1,2]⟩_L = 0."""
        assert inner(neg_perm_elt(P(2, 1)), neg_perm_elt(P(1, 2)), "L").is_zero()

    def test_generator_with_itself(self) -> None:
        """⟨σ₁, σ₁⟩_L = 1 + z²."""
        assert inner(SIGMA, SIGMA, Side.LOWER) == zpoly({0: 1, 2: 1})

    def test_generator_with_unit(self) -> None:
        """⟨σ₁, 1⟩_L = z."""
        assert inner(SIGMA, BraidWord(2), Side.LOWER) == zpoly({1: 1})

    def test_pos_basis_right(self) -> None:
        """⟨ω_[2,1], ω_[2,1]⟩_R = 1."""
        omega = pos_perm_elt(P(2, 1))

        assert inner(omega, omega, Side.UPPER) == ONE

    def test_symmetry(self, rng: random.Random) -> None:
        """Both forms are symmetric, and ⟨α, β⟩_L(z) = ⟨α^-1, β^-1⟩_R(-z)."""
        for _ in range(10):
            n = rng.randint(2, 3)
            a, b = BraidWord.random(rng, n, 5), BraidWord.random(rng, n, 5)
            left = inner(a, b, Side.LOWER)

            assert left == inner(b, a, Side.LOWER)
            assert inner(a, b, Side.UPPER) == inner(b, a, Side.UPPER)
            assert left == inner(a.inverse(), b.inverse(), Side.UPPER).reflect("z")

    def test_left_right_identity_flips_z(self) -> None:
        """⟨σ₁, 1⟩_L = z while ⟨σ₁^-1, 1⟩_R = -z."""
        generator = BraidWord(2, (1,))
        left = inner(generator, BraidWord(2), Side.LOWER)
        right = inner(generator.inverse(), BraidWord(2), Side.UPPER)

        assert left == zpoly({1: 1})
        assert right == zpoly({1: -1})
        assert left == right.reflect("z")

    def test_bilinear_agrees(self, rng: random.Random) -> None:
        """The Gram-matrix evaluation agrees with the direct one."""
        for _ in range(5):
            a, b = BraidWord.random(rng, 3, 5), BraidWord.random(rng, 3, 5)
            for side in Side:
                assert bilinear_inner(a, b, side) == inner(a, b, side)

    def test_strand_mismatch(self) -> None:
        """Elements of different algebras have no inner product."""
        with pytest.raises(InnerProductError):
            inner(unit(2), unit(3), Side.LOWER)


class TestGram:
    """Test Gram matrices of the two distinguished bases."""

    def test_neg_left_two_strands(self) -> None:
        """N is orthonormal for the left form on two strands."""
        assert gram(2, Basis.NEG, Side.LOWER).is_identity()

    def test_neg_left_three_strands(self) -> None:
        """N is orthonormal for the left form on three strands."""
        assert gram(3, "neg", "L").is_identity()

    def test_pos_right_three_strands(self) -> None:
        """Ω is orthonormal for the right form on three strands."""
        g = gram(3, Basis.POS, Side.UPPER)

        assert g.is_identity()
        assert len(g.entries) == 6

    def test_pos_left_two_strands(self) -> None:
        """Ω under the left form is [[1, z], [z, 1 + z²]]."""
        g = gram(2, Basis.POS, Side.LOWER)

        assert g.perms == (P(1, 2), P(2, 1))
        assert g.entries == (
            (ONE, zpoly({1: 1})),
            (zpoly({1: 1}), zpoly({0: 1, 2: 1})),
        )
        assert not g.is_identity()

    def test_bound(self) -> None:
        """Strand counts above the bound are refused."""
        with pytest.raises(BoundExceededError) as exc_info:
            gram(4, Basis.POS, Side.LOWER, max_n=3)

        assert exc_info.value.bound == 3

    @pytest.mark.parametrize("n", [0, -1])
    def test_non_positive_strands(self, n: int) -> None:
        """There is no Gram matrix on fewer than one strand."""
        with pytest.raises(InnerProductError, match="positive"):
            gram(n, Basis.POS, Side.LOWER)

    def test_bound_from_environment(
        self, monkeypatch: pytest.MonkeyPatch, fresh_settings: None
    ) -> None:
        """BRAIDFORMS_MAX_N sets the default bound."""
        monkeypatch.setenv("BRAIDFORMS_MAX_N", "2")

        with pytest.raises(BoundExceededError):
            gram(3, Basis.POS, Side.UPPER)

    def test_determinants(self) -> None:
        """Orthonormal bases have determinant 1; Ω under L has determinant 1."""
        assert gram_determinant(gram(3, Basis.NEG, Side.LOWER)) == ONE
        assert gram_determinant(gram(2, Basis.POS, Side.LOWER)) == ONE


class TestExpansion:
    """Test expansion in the negative permutation-braid basis."""

    def test_unit(self) -> None:
        """1 = ν_id."""
        assert expand_in_neg_basis(unit(2)) == {P(1, 2): ONE}

    def test_generator(self) -> None:
        """σ₁ = ν_[2,1] + z·ν_id."""
        assert expand_in_neg_basis(SIGMA) == {P(1, 2): zpoly({1: 1}), P(2, 1): ONE}

    def test_basis_vector(self) -> None:
        """ν_[3,1,2] has a single coefficient."""
        assert expand_in_neg_basis(neg_perm_elt(P(3, 1, 2))) == {P(3, 1, 2): ONE}

    def test_reconstructs(self, rng: random.Random) -> None:
        """Σ ⟨β, ν_π⟩_L ν_π = β."""
        for _ in range(5):
            w = BraidWord.random(rng, 3, 6)
            coeffs = expand_in_neg_basis(w)
            total = unit(3).scale(0)
            for pi, c in coeffs.items():
                total = total + neg_perm_elt(pi).scale(c)

            assert total == braid_to_hecke(w)


class TestSharpness:
    """Test the MFW sharpness predicate."""

    def test_inverse_generator_lower(self) -> None:
        """σ₁^-1 is not sharp on the lower side."""
        assert not mfw_sharp(BraidWord(2, (-1,)), Side.LOWER)

    def test_inverse_generator_upper(self) -> None:
        """σ₁^-1 is sharp on the upper side."""
        assert mfw_sharp(BraidWord(2, (-1,)), "upper")

    def test_unit_braid(self) -> None:
        """The trivial three-strand braid is sharp on the lower side."""
        assert mfw_sharp(BraidWord(3), Side.LOWER)
