"""Tests for constituent interpolation, evaluation, and asymptotic diagnostics."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from denumerant import (
    Polynomial,
    QuasiPolynomial,
    asymptotic_ratio,
    count,
    count_table,
    eval_quasipoly,
    interpolate_constituents,
    leading_coefficient_expected,
    limit_check,
    make_part_set,
    newton_interpolation,
)
from denumerant.errors import GcdNotOne, NonIntegerValue, ResidualNonZero
from denumerant.quasipoly import fit_constituent

gcd1_sets = (
    st.lists(st.integers(min_value=1, max_value=9), min_size=1, max_size=3, unique=True)
    .map(make_part_set)
    .filter(lambda a: a.gcd_all == 1)
)


class TestPolynomial:
    def test_normalization_and_degree(self):
        p = Polynomial((Fraction(1), Fraction(2), Fraction(0)))
        assert p.coeffs == (Fraction(1), Fraction(2))
        assert p.degree == 1
        assert p.leading_coefficient == 2
        zero = Polynomial((Fraction(0), Fraction(0)))
        assert zero.degree == -1
        assert zero.leading_coefficient == 0

    def test_evaluation(self):
        p = Polynomial((Fraction(1), Fraction(-1, 2), Fraction(3)))
        assert p(0) == 1
        assert p(2) == 1 - 1 + 12
        assert p(Fraction(1, 3)) == 1 - Fraction(1, 6) + Fraction(1, 3)


class TestNewtonInterpolation:
    def test_recovers_known_polynomial(self):
        target = Polynomial((Fraction(5), Fraction(-2), Fraction(0), Fraction(7, 3)))
        xs = [0, 1, 2, 3]
        fitted = newton_interpolation(xs, [target(x) for x in xs])
        assert fitted == target

    def test_constant(self):
        assert newton_interpolation([0], [4]).coeffs == (Fraction(4),)

    def test_rejects_mismatched_points(self):
        with pytest.raises(ValueError):
            newton_interpolation([0, 1], [1])

    @given(
        st.lists(
            st.fractions(
                min_value=-50,
                max_value=50,
                max_denominator=20,
            ),
            min_size=1,
            max_size=5,
        )
    )
    @settings(max_examples=60, deadline=None)
    def test_interpolates_exactly(self, coeffs):
        target = Polynomial(tuple(coeffs))
        xs = list(range(len(coeffs)))
        fitted = newton_interpolation(xs, [target(x) for x in xs])
        for x in range(-3, 8):
            assert fitted(x) == target(x)


class TestInterpolateConstituents:
    def test_two_parts_closed_form(self):
        q = interpolate_constituents(make_part_set([2, 3]), extra_samples=2)
        assert q.period == 6
        assert q.verified_l_range == (0, 3)
        assert q.constituents[0].coeffs == (Fraction(1), Fraction(1))
        assert q.constituents[1].coeffs == (Fraction(0), Fraction(1))
        # Every constituent is l + count(r), per the two-part closed form.
        for r in range(6):
            assert q.constituents[r].coeffs == (
                Fraction(count(make_part_set([2, 3]), r)),
                Fraction(1),
            )

    def test_single_part_one(self):
        q = interpolate_constituents(make_part_set([1]), extra_samples=2)
        assert q.period == 1
        assert q.constituents[0].coeffs == (Fraction(1),)

    def test_three_parts_degree_and_leading(self):
        a = make_part_set([1, 2, 3])
        q = interpolate_constituents(a, extra_samples=3)
        assert q.period == 6
        for poly in q.constituents:
            assert poly.degree == 2
            assert poly.leading_coefficient == 3
        # Cross-check well beyond the fitted range.
        table = count_table(a, 6 * 16)
        for r in range(6):
            for l in range(14):
                assert q.constituents[r](l) == table[6 * l + r]

    def test_rejects_common_divisor(self):
        with pytest.raises(GcdNotOne):
            interpolate_constituents(make_part_set([2, 4]))

    def test_rejects_no_extra_samples(self):
        with pytest.raises(ValueError):
            interpolate_constituents(make_part_set([2, 3]), extra_samples=0)

    def test_residual_error_pinpoints_sample(self):
        # Corrupt one table entry inside the over-verification range.
        a = make_part_set([2, 3])
        table = count_table(a, 6 * 5 - 1)
        bad = list(table)
        bad[6 * 3 + 2] += 1
        with pytest.raises(ResidualNonZero) as excinfo:
            fit_constituent(bad, 6, 2, 2, 4)
        assert excinfo.value.residue == 2
        assert excinfo.value.l == 3

    @given(gcd1_sets)
    @settings(max_examples=25, deadline=None)
    def test_exactness_on_random_sets(self, a):
        q = interpolate_constituents(a, extra_samples=3)
        k, period = a.k, a.period
        expected_lead = leading_coefficient_expected(a)
        table = count_table(a, period * (k + 6) - 1)
        for r in range(period):
            poly = q.constituents[r]
            assert poly.degree == k - 1
            assert poly.leading_coefficient == expected_lead
            for l in range(k + 5):
                assert poly(l) == table[period * l + r]


class TestFourPartSpotChecks:
    def test_3457(self):
        a = make_part_set([3, 4, 5, 7])
        q = interpolate_constituents(a, extra_samples=3)
        expected_lead = Fraction(420**2, 6)
        for poly in q.constituents:
            assert poly.degree == 3
            assert poly.leading_coefficient == expected_lead


class TestEvalQuasipoly:
    def test_frozen_values(self):
        q = interpolate_constituents(make_part_set([2, 3]))
        assert eval_quasipoly(q, 13) == 2
        q1 = interpolate_constituents(make_part_set([1]))
        assert eval_quasipoly(q1, 999) == 1
        q123 = interpolate_constituents(make_part_set([1, 2, 3]))
        assert eval_quasipoly(q123, 6) == 7

    def test_matches_count_on_random_points(self):
        import random

        rng = random.Random(7)
        for raw in ([2, 3], [1, 2, 3], [3, 4, 5]):
            a = make_part_set(raw)
            q = interpolate_constituents(a)
            table = count_table(a, 50 * a.period + a.period)
            for _ in range(200):
                n = rng.randint(0, 50 * a.period)
                assert eval_quasipoly(q, n) == table[n]

    def test_negative_rejected(self):
        q = interpolate_constituents(make_part_set([2, 3]))
        with pytest.raises(ValueError):
            eval_quasipoly(q, -1)

    def test_non_integer_aborts(self):
        a = make_part_set([1])
        bogus = QuasiPolynomial(
            part_set=a,
            period=1,
            constituents=(Polynomial((Fraction(1, 2),)),),
            verified_l_range=(0, 0),
        )
        with pytest.raises(NonIntegerValue):
            eval_quasipoly(bogus, 5)


class TestLeadingCoefficient:
    def test_coprime_pairs_are_one(self):
        for raw in ([2, 3], [3, 4], [5, 12]):
            assert leading_coefficient_expected(make_part_set(raw)) == 1

    def test_frozen_values(self):
        assert leading_coefficient_expected(make_part_set([1, 2, 3])) == 3
        assert leading_coefficient_expected(make_part_set([2, 3, 5])) == 15
        assert leading_coefficient_expected(make_part_set([1])) == 1

    def test_rejects_common_divisor(self):
        with pytest.raises(GcdNotOne):
            leading_coefficient_expected(make_part_set([2, 4]))


class TestAsymptoticRatio:
    def test_single_part_is_exact(self):
        a = make_part_set([1])
        for n in (1, 5, 1000):
            assert asymptotic_ratio(a, n) == 1

    def test_two_parts_at_60000(self):
        ratio = asymptotic_ratio(make_part_set([2, 3]), 60000)
        assert ratio == Fraction(10001, 10000)
        assert Fraction(99, 100) < ratio < Fraction(101, 100)

    def test_three_parts_at_1000(self):
        ratio = asymptotic_ratio(make_part_set([1, 2, 3]), 1000)
        assert abs(ratio - 1) < Fraction(1, 100)

    def test_rejects_bad_inputs(self):
        with pytest.raises(GcdNotOne):
            asymptotic_ratio(make_part_set([2, 4]), 10)
        with pytest.raises(ValueError):
            asymptotic_ratio(make_part_set([2, 3]), 0)

    def test_gap_non_increasing_along_doubling(self):
        # Doubling n within a residue class must not move the ratio away from 1.
        for raw in ([1, 2], [2, 3], [1, 2, 3]):
            a = make_part_set(raw)
            for r in range(a.period):
                gaps = [
                    abs(asymptotic_ratio(a, a.period * 2**j + r) - 1)
                    for j in range(3, 11)
                ]
                assert all(x >= y for x, y in zip(gaps, gaps[1:]))


class TestLimitCheck:
    def test_two_parts_frozen_sequence(self):
        values = limit_check(make_part_set([2, 3]), 0, [1, 10, 100])
        assert values == [Fraction(1, 3), Fraction(11, 60), Fraction(101, 600)]

    def test_single_part_all_ones(self):
        assert limit_check(make_part_set([1]), 0, [1, 4, 9]) == [1, 1, 1]

    def test_one_two_approaches_half(self):
        a = make_part_set([1, 2])
        values = limit_check(a, 1, [1, 10, 100])
        assert values == [Fraction(2, 3), Fraction(11, 21), Fraction(101, 201)]
        limit = Fraction(1, 2)
        gaps = [abs(v - limit) for v in values]
        assert gaps == sorted(gaps, reverse=True)

    def test_converges_to_stated_limit(self):
        import math

        for raw in ([2, 3], [1, 2, 3], [2, 3, 5]):
            a = make_part_set(raw)
            limit = Fraction(1, a.period * math.factorial(a.k - 1))
            for r in (0, a.period - 1):
                values = limit_check(a, r, [2, 8, 32, 128])
                gaps = [abs(v - limit) for v in values]
                assert all(x >= y for x, y in zip(gaps, gaps[1:]))
                assert gaps[-1] < Fraction(1, 50)

    def test_rejects_bad_inputs(self):
        with pytest.raises(GcdNotOne):
            limit_check(make_part_set([2, 4]), 0, [1, 2])
        with pytest.raises(ValueError):
            limit_check(make_part_set([2, 3]), 6, [1, 2])
        with pytest.raises(ValueError):
            limit_check(make_part_set([2, 3]), 0, [2, 2])
