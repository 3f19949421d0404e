"""Tests for the Hecke algebra on the positive permutation-braid basis."""

import random

import pytest

from braidforms.algebra.braid import BraidWord, Permutation
from braidforms.algebra.hecke import (
    HeckeElement,
    braid_to_hecke,
    hecke_mul,
    mul_gen,
    neg_perm_elt,
    pos_perm_elt,
    reconstruct,
    solve_in_neg_basis,
    star_elt,
    unit,
)
from braidforms.algebra.polynomial import Z, LaurentPoly, zpoly
from braidforms.exceptions import HeckeError


def P(*image: int) -> Permutation:
    return Permutation(image)


def element(n: int, coeffs: dict[Permutation, dict[int, int]]) -> HeckeElement:
    return HeckeElement.from_dict(n, {pi: zpoly(c) for pi, c in coeffs.items()})


class TestUnit:
    """Test the identity element."""

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_unit_is_identity_permutation(self, n: int) -> None:
        """unit(n) = ω_id with coefficient 1."""
        assert unit(n).coeffs == {Permutation.identity(n): LaurentPoly.one(Z)}

    def test_non_positive_strands(self) -> None:
        """There is no H_0."""
        with pytest.raises(HeckeError):
            unit(0)


class TestGeneratorMultiplication:
    """Test right multiplication by σ_i^{±1}."""

    def test_length_increasing(self) -> None:
        """ω_[1,2]·σ₁ = ω_[2,1]."""
        assert mul_gen(unit(2), 1) == pos_perm_elt(P(2, 1))

    def test_quadratic_relation(self) -> None:
        """ω_[2,1]·σ₁ = ω_[1,2] + z·ω_[2,1]."""
        expected = element(2, {P(1, 2): {0: 1}, P(2, 1): {1: 1}})

        assert mul_gen(pos_perm_elt(P(2, 1)), 1) == expected

    def test_inverse_generator_cancels(self) -> None:
        """ω_[2,1]·σ₁^-1 = ω_[1,2]."""
        assert mul_gen(pos_perm_elt(P(2, 1)), 1, -1) == unit(2)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_quadratic_relation_on_every_basis_element(self, n: int) -> None:
        """x·σ_i² = x + z·x·σ_i for every ω_π and every i."""
        z = LaurentPoly.var("z", Z)
        for pi in Permutation.all(n):
            omega = pos_perm_elt(pi)
            for i in range(1, n):
                once = mul_gen(omega, i)

                assert mul_gen(once, i) == omega + once.scale(z)

    def test_far_commutation(self) -> None:
        """σ₁σ₃ = σ₃σ₁ acting on every basis element of H₄."""
        for pi in Permutation.all(4):
            omega = pos_perm_elt(pi)

            assert mul_gen(mul_gen(omega, 1), 3) == mul_gen(mul_gen(omega, 3), 1)

    def test_generator_out_of_range(self) -> None:
        """σ₂ does not act on H₂."""
        with pytest.raises(HeckeError):
            mul_gen(unit(2), 2)


class TestBraidToHecke:
    """Test images of braid words."""

    def test_empty_word(self) -> None:
        """The empty word maps to the unit."""
        assert braid_to_hecke(BraidWord(2)) == unit(2)

    def test_square(self) -> None:
        """σ₁² = 1 + zσ₁."""
        expected = element(2, {P(1, 2): {0: 1}, P(2, 1): {1: 1}})

        assert braid_to_hecke(BraidWord(2, (1, 1))) == expected

    def test_inverse_generator(self) -> None:
        """σ₁^-1 = σ₁ - z."""
        expected = element(2, {P(2, 1): {0: 1}, P(1, 2): {1: -1}})

        assert braid_to_hecke(BraidWord(2, (-1,))) == expected

    def test_braid_relation(self) -> None:
        """σ₁σ₂σ₁ and σ₂σ₁σ₂ have the same image."""
        assert braid_to_hecke(BraidWord(3, (1, 2, 1))) == braid_to_hecke(
            BraidWord(3, (2, 1, 2))
        )

    def test_word_times_inverse_is_unit(self, rng: random.Random) -> None:
        """w·w^-1 maps to the unit."""
        for _ in range(10):
            w = BraidWord.random(rng, 4, 6)

            assert braid_to_hecke(w + w.inverse()) == unit(4)

    def test_product_with_inverse_image_is_unit(self, rng: random.Random) -> None:
        """The image of w times the image of w^-1 is the unit."""
        for _ in range(100):
            n = rng.randint(2, 4)
            w = BraidWord.random(rng, n, 6)
            product = hecke_mul(braid_to_hecke(w), braid_to_hecke(w.inverse()))

            assert product == unit(n)


class TestProduct:
    """Test the full product."""

    def test_basis_square(self) -> None:
        """ω_[2,1]·ω_[2,1] = 1 + zσ₁."""
        sigma = pos_perm_elt(P(2, 1))
        expected = element(2, {P(1, 2): {0: 1}, P(2, 1): {1: 1}})

        assert hecke_mul(sigma, sigma) == expected

    def test_product_matches_concatenation(self, rng: random.Random) -> None:
        """braid_to_hecke is multiplicative."""
        for _ in range(10):
            a, b = BraidWord.random(rng, 3, 5), BraidWord.random(rng, 3, 5)

            assert braid_to_hecke(a) * braid_to_hecke(b) == braid_to_hecke(a + b)

    def test_associative(self, rng: random.Random) -> None:
        """(ab)c = a(bc)."""
        a, b, c = (braid_to_hecke(BraidWord.random(rng, 3, 4)) for _ in range(3))

        assert (a * b) * c == a * (b * c)

    def test_strand_mismatch(self) -> None:
        """Elements of different algebras do not multiply."""
        with pytest.raises(HeckeError):
            hecke_mul(unit(2), unit(3))


class TestBases:
    """Test the Ω and N basis constructors."""

    def test_pos_identity_is_unit(self) -> None:
        """ω_id = 1."""
        assert pos_perm_elt(P(1, 2)) == unit(2)

    def test_pos_is_well_defined(self) -> None:
        """Any reduced word of [3,1,2] maps to ω_[3,1,2]."""
        assert braid_to_hecke(BraidWord(3, (1, 2))) == pos_perm_elt(P(3, 1, 2))

    def test_neg_identity_is_unit(self) -> None:
        """ν_id = 1."""
        assert neg_perm_elt(P(1, 2)) == unit(2)

    def test_neg_transposition(self) -> None:
        """ν_[2,1] = ω_[2,1] - z."""
        expected = element(2, {P(2, 1): {0: 1}, P(1, 2): {1: -1}})

        assert neg_perm_elt(P(2, 1)) == expected

    def test_neg_three_cycle(self) -> None:
        """ν_[2,3,1] = (σ₂ - z)(σ₁ - z) expanded in Ω."""
        expected = element(
            3,
            {
                P(2, 3, 1): {0: 1},
                P(2, 1, 3): {1: -1},
                P(1, 3, 2): {1: -1},
                P(1, 2, 3): {2: 1},
            },
        )

        assert neg_perm_elt(P(2, 3, 1)) == expected

    def test_neg_is_unitriangular(self) -> None:
        """ν_π = ω_π plus terms of strictly smaller length."""
        for pi in Permutation.all(4):
            nu = neg_perm_elt(pi)

            assert nu.coeff(pi) == LaurentPoly.one(Z)
            lower = [sigma for sigma, _ in nu.terms if sigma != pi]
            assert all(sigma.inversions() < pi.inversions() for sigma in lower)


class TestStar:
    """Test the anti-automorphism."""

    def test_star_of_unit(self) -> None:
        """unit* = unit."""
        assert star_elt(unit(3)) == unit(3)

    def test_star_inverts_permutation(self) -> None:
        """ω_[3,1,2]* = ω_[2,3,1]."""
        assert star_elt(pos_perm_elt(P(3, 1, 2))) == pos_perm_elt(P(2, 3, 1))

    def test_star_matches_word_reversal(self, rng: random.Random) -> None:
        """star_elt(image of w) = image of w*."""
        for _ in range(10):
            w = BraidWord.random(rng, 4, 6)

            assert star_elt(braid_to_hecke(w)) == braid_to_hecke(w.star())

    def test_star_reverses_products(self, rng: random.Random) -> None:
        """(ab)* = b*a*."""
        a = braid_to_hecke(BraidWord.random(rng, 3, 5))
        b = braid_to_hecke(BraidWord.random(rng, 3, 5))

        assert star_elt(a * b) == star_elt(b) * star_elt(a)


class TestNegativeBasisSolve:
    """Test back-substitution into the N basis."""

    def test_generator(self) -> None:
        """σ₁ = ν_[2,1] + z·ν_[1,2]."""
        coords = solve_in_neg_basis(braid_to_hecke(BraidWord(2, (1,))))

        assert coords == {P(1, 2): zpoly({1: 1}), P(2, 1): zpoly({0: 1})}

    def test_reconstruct_round_trip(self, rng: random.Random) -> None:
        """Σ c_π ν_π gives the element back."""
        for _ in range(5):
            h = braid_to_hecke(BraidWord.random(rng, 3, 6))

            assert reconstruct(solve_in_neg_basis(h), 3) == h
