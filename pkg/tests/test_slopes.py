"""
Test Suite for Cover Slopes
===========================

Slope arithmetic on the boundary torus of the lifted twisting circle.
"""

import pytest

from strandtwist.errors import DegenerateSlope, ZeroTwist
from strandtwist.slopes import (
    LONGITUDE, MERIDIAN, SLOPE_COLUMNS, FillingKind, NugatoryClass,
    SurgeryContext, TorusSlope, crossing_circle_slope, delta,
    filling_classification, lens_orders, nugatory_slope_test, slope_row,
    slope_table, surgery_slope, unit_intersectors,
)

NONZERO = [n for n in range(-6, 7) if n != 0]


class TestTorusSlope:
    """Normalization and intersection numbers."""

    def test_normalization(self):
        assert TorusSlope.of(-2, -3) == TorusSlope(2, 3)
        assert TorusSlope.of(0, -1) == LONGITUDE
        assert TorusSlope.of(-1, 0) == MERIDIAN

    def test_degenerate(self):
        with pytest.raises(DegenerateSlope):
            TorusSlope.of(0, 0)
        with pytest.raises(DegenerateSlope):
            TorusSlope.of(2, 4)

    def test_unnormalized_constructor(self):
        with pytest.raises(AssertionError):
            TorusSlope(-1, 2)

    def test_str(self):
        assert str(TorusSlope.of(1, -3)) == "(1,-3)"

    def test_delta(self):
        assert delta(MERIDIAN, LONGITUDE) == 1
        assert delta(TorusSlope(2, 3), TorusSlope(1, 1)) == 1
        assert delta(TorusSlope(3, 1), TorusSlope(3, 1)) == 0

    def test_delta_symmetric(self):
        a, b = TorusSlope(2, -5), TorusSlope(3, 7)
        assert delta(a, b) == delta(b, a) == 29


class TestSurgerySlope:
    """The lifted surgery slope of an n-twist."""

    @pytest.mark.parametrize("n", NONZERO)
    def test_distance_from_meridian(self, n):
        assert delta(MERIDIAN, surgery_slope(n)) == abs(n)

    def test_zero(self):
        with pytest.raises(ZeroTwist):
            surgery_slope(0)

    def test_context(self):
        ctx = SurgeryContext(-3)
        assert ctx.mu_prime == TorusSlope(1, -3)
        with pytest.raises(AssertionError):
            SurgeryContext(2, MERIDIAN, TorusSlope(1, 2))


class TestUnitIntersectors:
    """Slopes meeting both the meridian and the surgery slope once."""

    @pytest.mark.parametrize("n", NONZERO)
    def test_counts(self, n):
        expected = 2 if abs(n) <= 2 else 1
        assert len(unit_intersectors(surgery_slope(n))) == expected

    @pytest.mark.parametrize("n", NONZERO)
    def test_longitude_always_present(self, n):
        slopes = unit_intersectors(surgery_slope(n))
        assert LONGITUDE in slopes
        for s in slopes:
            assert delta(MERIDIAN, s) == 1
            assert delta(surgery_slope(n), s) == 1

    def test_extra_slopes(self):
        assert unit_intersectors(surgery_slope(2)) == [LONGITUDE, TorusSlope(1, 1)]
        assert unit_intersectors(surgery_slope(-2)) == [LONGITUDE, TorusSlope(1, -1)]
        assert unit_intersectors(surgery_slope(1)) == [LONGITUDE, TorusSlope(2, 1)]
        assert unit_intersectors(surgery_slope(-1)) == [LONGITUDE, TorusSlope(2, -1)]

    def test_meridian(self):
        with pytest.raises(DegenerateSlope):
            unit_intersectors(MERIDIAN)


class TestFillings:
    """Classification of fillings against a disk slope."""

    def test_restores_ambient(self):
        f = filling_classification(surgery_slope(5), LONGITUDE)
        assert f.kind is FillingKind.RESTORES_AMBIENT
        assert str(f) == "RestoresAmbient"

    def test_lens_summand(self):
        f = filling_classification(TorusSlope(3, 1), LONGITUDE)
        assert f.kind is FillingKind.LENS_SUMMAND
        assert f.order == 3
        assert str(f) == "LensSummand(3)"
        assert not f.reducible

    def test_reducible(self):
        f = filling_classification(LONGITUDE, LONGITUDE)
        assert f.reducible

    @pytest.mark.parametrize("n, a", [(2, 1), (3, 2), (-4, 1), (5, 3)])
    def test_lens_orders(self, n, a):
        assert lens_orders(n, a) == (abs(1 - n * a), abs(1 + n * a))

    def test_crossing_circle_slope(self):
        assert crossing_circle_slope(4) == TorusSlope(1, -2)
        assert crossing_circle_slope(-2) == TorusSlope(1, 1)
        with pytest.raises(DegenerateSlope):
            crossing_circle_slope(3)
        with pytest.raises(ZeroTwist):
            crossing_circle_slope(0)


class TestNugatorySlopeTest:
    """Which twist orders force a nugatory circle."""

    @pytest.mark.parametrize("n", NONZERO)
    def test_classes(self, n):
        expected = (NugatoryClass.WEAKLY_NUGATORY_ONLY if abs(n) == 1
                    else NugatoryClass.FORCED_NUGATORY)
        assert nugatory_slope_test(n) is expected

    def test_zero(self):
        with pytest.raises(ZeroTwist):
            nugatory_slope_test(0)


class TestSlopeTable:
    """Rows for the slopes subcommand."""

    def test_columns(self):
        assert tuple(slope_row(3)) == SLOPE_COLUMNS

    def test_row(self):
        row = slope_row(-2)
        assert row["mu_prime"] == "(1,-2)"
        assert row["delta"] == 2
        assert row["unit_intersectors"] == "(0,1) (1,-1)"
        assert row["classification"] == "ForcedNugatory"
        assert row["assumes_unknotted_lift"] is True

    def test_skips_zero(self):
        rows = slope_table(range(-6, 7))
        assert [r["n"] for r in rows] == NONZERO
