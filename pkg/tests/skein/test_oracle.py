"""Tests for closure diagrams and the skein oracle."""

import random

import pytest

from braidforms.algebra.braid import BraidWord
from braidforms.algebra.polynomial import VZ, LaurentPoly
from braidforms.algebra.trace import homfly_P
from braidforms.exceptions import SkeinResourceError
from braidforms.skein import (
    Crossing,
    PlanarDiagram,
    SkeinEvaluator,
    braid_closure_pd,
    skein_homfly,
    unlink,
)


def vz(text: str) -> LaurentPoly:
    return LaurentPoly.parse(text, VZ)


class TestBraidClosure:
    """Test closure diagrams of braid words."""

    @pytest.mark.parametrize(
        ("letters", "crossings", "components"),
        [((), 0, 2), ((1, 1), 2, 2), ((1, 1, 1), 3, 1), ((1, -1), 2, 2)],
    )
    def test_counts(
        self, letters: tuple[int, ...], crossings: int, components: int
    ) -> None:
        """Crossing and component counts of two-strand closures."""
        d = braid_closure_pd(BraidWord(2, letters))

        assert len(d.crossings) == crossings
        assert d.components == components

    def test_writhe_is_exponent_sum(self, rng: random.Random) -> None:
        """Each letter contributes its sign."""
        for _ in range(10):
            w = BraidWord.random(rng, 4, 8)

            assert braid_closure_pd(w).writhe() == w.exponent_sum

    def test_every_edge_used_twice(self) -> None:
        """Each edge enters one crossing and leaves one crossing."""
        d = braid_closure_pd(BraidWord(3, (1, -2, 1, 2)))
        ins = sorted(e for c in d.crossings for e in (c.in_over, c.in_under))
        outs = sorted(e for c in d.crossings for e in (c.out_over, c.out_under))

        assert ins == outs == list(range(8))

    def test_reversed_keeps_components(self) -> None:
        """Reversing orientation keeps the crossing and component counts."""
        d = braid_closure_pd(BraidWord(3, (1, 2, 1)))
        r = d.reversed()

        assert len(r.crossings) == 3
        assert r.components == d.components

    def test_pd_code_shape(self) -> None:
        """One 4-tuple per crossing, starting at the incoming under-edge."""
        d = braid_closure_pd(BraidWord(2, (1, 1, 1)))

        assert [code[0] for code in d.pd_code()] == [c.in_under for c in d.crossings]


class TestCrossing:
    """Test crossing helpers."""

    def test_switch_flips_sign_and_badness(self) -> None:
        """Switching a bad crossing makes it good."""
        c = Crossing(1, in_over=3, out_over=4, in_under=1, out_under=2)

        assert c.is_bad()
        assert not c.switched().is_bad()
        assert c.switched().sign == -1


class TestSkeinHomfly:
    """Test the skein recursion."""

    def test_unknot(self) -> None:
        """A crossingless circle is 1."""
        assert skein_homfly(PlanarDiagram((), free_loops=1)) == LaurentPoly.one(VZ)

    def test_unlink_value(self) -> None:
        """Two circles give (v^-1 - v)/z."""
        assert unlink(2) == vz("v^-1*z^-1 - v*z^-1")

    def test_hopf(self) -> None:
        """Closure of σ₁² is vz + (v - v³)z^-1."""
        d = braid_closure_pd(BraidWord(2, (1, 1)))

        assert skein_homfly(d) == vz("v*z^-1 + v*z - v^3*z^-1")

    def test_trefoil(self) -> None:
        """Closure of σ₁³ is 2v² + v²z² - v⁴."""
        d = braid_closure_pd(BraidWord(2, (1, 1, 1)))

        assert skein_homfly(d) == vz("2*v^2 + v^2*z^2 - v^4")

    def test_kinks_are_unknots(self) -> None:
        """σ₁ and σ₁^-1 close to unknots."""
        for letter in (1, -1):
            assert skein_homfly(braid_closure_pd(BraidWord(2, (letter,)))) == (
                LaurentPoly.one(VZ)
            )

    def test_agrees_with_trace_pipeline(self, rng: random.Random) -> None:
        """The oracle and the Hecke/trace pipeline agree."""
        evaluator = SkeinEvaluator()
        for _ in range(15):
            w = BraidWord.random(rng, rng.randint(1, 4), 6)

            assert evaluator.evaluate(braid_closure_pd(w)) == homfly_P(w)

    def test_orientation_reversal(self) -> None:
        """Reversing every component leaves P unchanged."""
        d = braid_closure_pd(BraidWord(3, (1, -2, 1, 1, -2)))

        assert skein_homfly(d.reversed()) == skein_homfly(d)

    def test_crossing_cap(self) -> None:
        """Diagrams above the cap are refused."""
        d = braid_closure_pd(BraidWord(2, (1, 1, 1)))

        with pytest.raises(SkeinResourceError) as exc_info:
            skein_homfly(d, max_crossings=2)

        assert exc_info.value.crossings == 3
        assert exc_info.value.cap == 2

    def test_cap_from_environment(
        self, monkeypatch: pytest.MonkeyPatch, fresh_settings: None
    ) -> None:
        """BRAIDFORMS_SKEIN_MAX_CROSSINGS sets the default cap."""
        monkeypatch.setenv("BRAIDFORMS_SKEIN_MAX_CROSSINGS", "1")

        with pytest.raises(SkeinResourceError):
            skein_homfly(braid_closure_pd(BraidWord(2, (1, 1))))
