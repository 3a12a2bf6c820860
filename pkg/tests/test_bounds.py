import json
from fractions import Fraction
from itertools import combinations
from math import comb, factorial

import mpmath
import pytest

from degree_ramsey import bounds


class TestSmallFormulas:
    def test_star(self):
        assert bounds.bound_star(3, 2).value == 5
        assert bounds.bound_star(2, 2).value == 3
        r = bounds.bound_star(4, 1)
        assert r.value == 4 and r.flags
        assert r.to_line() == "star\tn=4 s=1\t4\texact\tLemma1"

    def test_spider(self):
        assert bounds.bound_tree_spider(3, 2).value == 5
        assert bounds.bound_tree_spider(5, 3).value == 13
        r = bounds.bound_tree_spider(1, 4)
        assert r.value == 1 and r.flags

    def test_tree_upper(self):
        for s in range(1, 6):
            assert bounds.bound_tree_upper(2, s).value == 2 * s
        assert bounds.bound_tree_upper(1, 3).value == 0
        assert bounds.bound_tree_upper(4, 2).value == 12
        assert bounds.bound_tree_upper(4, 2).side == "upper"

    def test_cycle(self):
        assert bounds.cycle_bounds(2, 3).value == 2
        assert bounds.cycle_bounds(3, 3).value == Fraction(3, 2)
        assert bounds.cycle_bounds(3, 2, 3).extras["pigeonhole"] == 5
        assert bounds.cycle_bounds(4, 2).flags
        assert not bounds.cycle_bounds(5, 2).flags


def factorial_oracle(N, m, n, s):
    choose = lambda a, b: factorial(a) // (factorial(b) * factorial(a - b))  # noqa: E731
    return Fraction(s * choose(N, m + n) * choose(m + n, m), s ** (m * n))


class TestExpected:
    def test_k6(self):
        r = bounds.kmn_expected_upper(6, 2, 2, 2)
        assert r.value == Fraction(45, 4)
        assert r.extras["double_count_factor"] == 2

    def test_vacuous_single_color(self):
        for m, n in [(2, 2), (2, 3), (3, 4)]:
            r = bounds.kmn_expected_upper(m + n, m, n, 1)
            assert r.value >= 1

    def test_against_factorials(self):
        assert bounds.kmn_expected_upper(20, 2, 3, 2).value == factorial_oracle(20, 2, 3, 2)
        for N, m, n, s in [(9, 2, 2, 3), (12, 3, 4, 2), (30, 2, 5, 5)]:
            assert bounds.kmn_expected_upper(N, m, n, s).value == factorial_oracle(N, m, n, s)

    def test_copy_count_by_enumeration(self):
        for N, m, n in [(6, 2, 2), (6, 1, 2), (7, 2, 3), (6, 3, 3)]:
            seen = set()
            for a in combinations(range(N), m):
                rest = [x for x in range(N) if x not in a]
                for b in combinations(rest, n):
                    seen.add(frozenset((min(x, y), max(x, y)) for x in a for y in b))
            assert bounds.kmn_copy_count(N, m, n) == len(seen)
        assert bounds.kmn_expected_count(6, 2, 2, 2) == Fraction(45, 8)

    def test_needs_room(self):
        with pytest.raises(ValueError):
            bounds.kmn_expected_upper(3, 2, 2, 2)


class TestLower:
    def test_small_instance(self):
        r = bounds.kmn_lower_bound(3, 2, 2)
        with mpmath.workdps(60):
            expected = 6 * mpmath.exp(-2)
            assert abs(r.value - expected) < mpmath.mpf(10) ** -48
        assert "asymptotic" in r.flags[0]
        assert mpmath.nstr(r.value, 4) == "0.812"

    def test_single_color(self):
        with mpmath.workdps(60):
            for n in (1, 5, 17):
                assert abs(bounds.kmn_lower_bound(n, 3, 1).value - n * mpmath.exp(-2)) < mpmath.mpf(10) ** -45

    def test_high_precision(self):
        r = bounds.kmn_lower_bound(100, 2, 4)
        with mpmath.workdps(80):
            # exponent (mn - 1)/(m + n) with n = 100, m = 2
            oracle = 100 * mpmath.root(4, 102) ** 199 / mpmath.e ** 2
            assert abs(r.value - oracle) / oracle < mpmath.mpf(10) ** -48


class TestConstant:
    def test_two_two(self):
        r = bounds.kmn_upper_constant(2, 2)
        assert r.value == 5 and r.extras["M"] == 6 and r.extras["within_cap"]
        with mpmath.workdps(60):
            assert abs(r.extras["cap"] - 4 * mpmath.exp(3)) < mpmath.mpf(10) ** -45
        assert mpmath.nstr(r.extras["cap"], 4) == "80.34"
        assert not r.flags

    def test_single_color(self):
        for m in range(2, 7):
            assert bounds.kmn_upper_constant(m, 1).value == 1

    def test_non_integral_flagged(self):
        r = bounds.kmn_upper_constant(4, 2)
        assert r.extras["M"] == 9
        assert any("non-integral" in f for f in r.flags)
        # Gamma-function form of C(9/2, 4)
        with mpmath.workdps(60):
            gen = mpmath.gamma(mpmath.mpf(9) / 2 + 1) / (mpmath.gamma(5) * mpmath.gamma(mpmath.mpf(9) / 2 - 3))
            expected = 126 / gen
            assert abs(mpmath.mpf(r.value.numerator) / r.value.denominator - expected) < mpmath.mpf(10) ** -45
        assert r.value == Fraction(256, 5)

    def test_generalized_binomial_integral_agrees(self):
        for x in range(0, 12):
            for k in range(0, 6):
                assert bounds.generalized_binomial(Fraction(x), k) == comb(x, k)

    def test_host_degree(self):
        r = bounds.kmn_upper_constant(2, 2, n=10)
        assert r.extras["host_degree"] == 50

    def test_sweep_within_cap(self):
        for m in range(2, 9):
            for s in range(1, 6):
                r = bounds.kmn_upper_constant(m, s)
                integral = r.extras["M"] % s == 0
                assert integral != any("non-integral" in f for f in r.flags)
                if integral:
                    assert r.extras["within_cap"]

    def test_json(self):
        d = json.loads(bounds.kmn_upper_constant(4, 2).to_json())
        assert d["value"] == "256/5" and d["flags"]

    def test_rejects_m_one(self):
        with pytest.raises(ValueError):
            bounds.kmn_upper_constant(1, 2)


class TestMonteCarlo:
    def test_k6_mean(self):
        mc = bounds.monte_carlo_kmn(6, 2, 2, 2, 10_000, seed=1)
        assert mc.exact_expected_count == Fraction(45, 8)
        assert mc.labeled_bound == Fraction(45, 4)
        assert mc.within(3.0)
        assert mc.markov_consistent()

    def test_single_color(self):
        mc = bounds.monte_carlo_kmn(5, 2, 2, 1, 20, seed=0)
        assert mc.existence_frequency == 1.0

    def test_deterministic(self):
        a = bounds.monte_carlo_kmn(6, 2, 2, 3, 200, seed=4)
        b = bounds.monte_carlo_kmn(6, 2, 2, 3, 200, seed=4)
        assert a == b

    def test_zero_trials(self):
        with pytest.raises(ValueError):
            bounds.monte_carlo_kmn(6, 2, 2, 2, 0, seed=0)
