from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import single_cycles
from orbitpatterns.digraph import build, primitive_cycle_exists
from orbitpatterns.errors import FlatSegment, OutOfDomain, PeriodBoundTooLarge
from orbitpatterns.pattern import Pattern, parse_pattern, stefan
from orbitpatterns.plinear import (
    PiecewiseLinearMap,
    embed_stefan_witness,
    evaluate,
    find_periods,
    p_linearize,
    realizes_period,
    to_json_dict,
    witness_report,
)
from orbitpatterns.sharkovskii import forces

HALF = Fraction(1, 2)


class TestConstruction:
    def test_p_linearize_breakpoint_values(self):
        f = p_linearize(stefan(3))
        for i, img in enumerate(stefan(3).images, start=1):
            assert evaluate(f, Fraction(i)) == img

    def test_two_orbit_is_reflection(self):
        f = p_linearize(Pattern((2, 1)))
        assert evaluate(f, Fraction(3, 2)) == Fraction(3, 2)
        assert evaluate(f, Fraction(5, 4)) == Fraction(7, 4)

    def test_breakpoints_must_increase(self):
        with pytest.raises(ValueError):
            PiecewiseLinearMap((Fraction(1), Fraction(1)), (Fraction(1), Fraction(1)))

    def test_must_map_into_itself(self):
        with pytest.raises(ValueError):
            PiecewiseLinearMap((Fraction(0), Fraction(1)), (Fraction(0), Fraction(2)))


class TestEvaluate:
    def test_interior_interpolation(self):
        f = p_linearize(stefan(3))
        assert evaluate(f, Fraction(9, 2)) == 4

    def test_loop_fixed_point(self):
        f = p_linearize(stefan(3))
        assert evaluate(f, Fraction(13, 3)) == Fraction(13, 3)

    def test_out_of_domain(self):
        with pytest.raises(OutOfDomain):
            evaluate(p_linearize(Pattern((2, 1))), Fraction(3))


class TestFindPeriods:
    def test_reflection(self):
        assert find_periods(p_linearize(Pattern((2, 1))), 2) == {1, 2}

    def test_stefan3_realizes_its_downset(self):
        assert find_periods(p_linearize(stefan(3)), 7) == {1, 2, 4, 6, 7}

    def test_second_minimal_k4(self):
        periods = find_periods(p_linearize(parse_pattern("9 5 8 7 6 4 3 1 2")), 7)
        assert 7 in periods
        assert 3 not in periods and 5 not in periods

    def test_flat_segment_rejected(self):
        flat = PiecewiseLinearMap(
            (Fraction(0), Fraction(1), Fraction(2)),
            (Fraction(1), Fraction(1), Fraction(2)),
        )
        with pytest.raises(FlatSegment):
            find_periods(flat, 3)

    def test_guard_on_large_bound(self):
        f = p_linearize(Pattern((2, 1)))
        with pytest.raises(PeriodBoundTooLarge):
            find_periods(f, 13)
        assert 13 not in find_periods(f, 13, allow_large=True)

    def test_bad_bound(self):
        with pytest.raises(ValueError):
            find_periods(p_linearize(Pattern((2, 1))), 0)


class TestOracleConsistency:
    @given(single_cycles(7))
    @settings(max_examples=25, deadline=None)
    def test_straffin_and_converse(self, p):
        # odd primitive cycle => realized period; realized period => primitive
        # cycle at n, or n even with one at n/2; and the period set is a
        # forcing down-set
        d = build(p)
        f = p_linearize(p)
        periods = find_periods(f, 7)
        for n in range(3, 8, 2):
            if primitive_cycle_exists(d, n):
                assert n in periods
        for n in periods:
            assert primitive_cycle_exists(d, n) or (
                n % 2 == 0 and primitive_cycle_exists(d, n // 2))
        for n in periods:
            for m in range(1, 8):
                if forces(n, m):
                    assert m in periods


class TestWitness:
    def test_breakpoint_values_preserved(self):
        g = embed_stefan_witness(3)
        for i, img in enumerate(stefan(3).images, start=1):
            assert evaluate(g, Fraction(i)) == img

    def test_k3_has_period5_but_no_period3(self):
        g = embed_stefan_witness(3)
        assert realizes_period(g, 5)
        assert not realizes_period(g, 3)

    def test_report_k3(self):
        report = witness_report(3)
        assert report.ok
        assert report.lower_odd_periods == ()
        assert len(report.embedded_orbit) == 5

    def test_k_too_small(self):
        with pytest.raises(ValueError):
            embed_stefan_witness(2)


class TestJson:
    def test_reduced_fraction_strings(self):
        g = embed_stefan_witness(3)
        payload = to_json_dict(g)
        assert payload["breakpoints"][0] == "1"
        assert any("/" in x for x in payload["breakpoints"])
        assert len(payload["breakpoints"]) == len(payload["values"])
        for text in payload["breakpoints"] + payload["values"]:
            f = Fraction(text)
            assert str(f) == text
