"""Exact and oracle-backed checks for the arithmetic bottom layer."""

import math
from fractions import Fraction

import pytest

from _oracles import catalan_constant, euler_gamma
from hurzeta import (
    BernoulliTable,
    bernoulli,
    eulerian_row,
    harmonic_number,
    polylog_nonpos,
)
from hurzeta.errors import (
    CapacityError,
    ConditioningWarning,
    DomainError,
    RangeOverflowError,
)
from hurzeta.special_functions import CATALAN, EULER_GAMMA, PI, PolylogRational


def test_catalan_against_accelerated_series():
    # independent oracle: CVZ-accelerated alternating series
    assert abs(CATALAN - catalan_constant()) < 5e-16


def test_euler_gamma_against_harmonic_asymptotic():
    assert abs(EULER_GAMMA - euler_gamma()) < 5e-15


def test_pi():
    assert PI == math.pi


class TestBernoulli:
    def test_known_values(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(2) == Fraction(1, 6)
        assert bernoulli(4) == Fraction(-1, 30)
        assert bernoulli(12) == Fraction(-691, 2730)

    def test_odd_vanish(self):
        for n in (3, 5, 7, 9, 11, 13, 63):
            assert bernoulli(n, BernoulliTable.build(n)) == 0

    def test_von_staudt_clausen(self):
        # denominator of B_2n is the product of primes p with (p-1) | 2n
        def primes_dividing(n2):
            return [p for p in range(2, n2 + 2)
                    if all(p % d for d in range(2, p)) and n2 % (p - 1) == 0]

        t = BernoulliTable.build(40)
        for n2 in (2, 10, 26, 40):
            assert t[n2].denominator == math.prod(primes_dividing(n2))

    def test_capacity_contract(self):
        t = BernoulliTable.build(10)
        with pytest.raises(CapacityError):
            t[11]
        with pytest.raises(CapacityError):
            bernoulli(70)  # default table stops at 64
        with pytest.raises(DomainError):
            bernoulli(-1)

    def test_float_mirror_saturates_not_raises(self, btable):
        # B_300 exceeds double range; the float view must degrade to inf
        # while the exact entry stays usable.
        assert math.isinf(btable.as_float[300])
        assert btable[300].denominator > 1


class TestEulerian:
    def test_small_rows(self):
        assert eulerian_row(1) == (1,)
        assert eulerian_row(2) == (1, 1)
        assert eulerian_row(3) == (1, 4, 1)
        assert eulerian_row(4) == (1, 11, 11, 1)

    def test_row_sums_are_factorials(self):
        for m in range(1, 12):
            assert sum(eulerian_row(m)) == math.factorial(m)

    def test_symmetry(self):
        for m in range(1, 12):
            row = eulerian_row(m)
            assert row == row[::-1]

    def test_worpitzky_column(self):
        # <m, 1> = 2**m - m - 1
        for m in range(2, 15):
            assert eulerian_row(m)[1] == 2**m - m - 1


class TestPolylog:
    def test_order_zero_is_geometric(self):
        for z in (0.3, -0.9, 0.5 + 0.25j, -2.0 + 1.0j):
            assert polylog_nonpos(0, z) == pytest.approx(z / (1 - z), rel=1e-15)

    def test_against_defining_series(self):
        # Li_{-m}(z) = sum_{n>=1} n**m z**n, summed far past double precision
        # for |z| <= 1/2.
        for m in range(0, 9):
            for z in (0.5, -0.5, 0.3 - 0.35j, 0.1 + 0.4j):
                brute = sum(n**m * z**n for n in range(1, 400))
                assert polylog_nonpos(m, z) == pytest.approx(brute, rel=2e-14)

    def test_negation_formula(self):
        # Li_{-m}(z) + (-1)**m Li_{-m}(1/z) = 0 for m >= 1
        for m in range(1, 10):
            for z in (2.5, -3.0 + 1.0j, 0.2 + 0.1j):
                lhs = polylog_nonpos(m, z) + (-1) ** m * polylog_nonpos(m, 1 / z)
                scale = abs(polylog_nonpos(m, z)) + 1
                assert abs(lhs) < 1e-13 * scale

    def test_pole_is_hard_error(self):
        with pytest.raises(DomainError):
            polylog_nonpos(3, 1.0)

    def test_near_pole_warns_and_proceeds(self):
        with pytest.warns(ConditioningWarning):
            v = polylog_nonpos(2, 1.0 + 1e-13)
        assert math.isfinite(v.real)

    def test_overflow_is_typed(self):
        with pytest.raises(RangeOverflowError):
            polylog_nonpos(60, 1e6 + 0j)

    def test_build_rejects_negative_order(self):
        with pytest.raises(DomainError):
            PolylogRational.build(-1)

    def test_coefficients_are_eulerian(self):
        assert PolylogRational.build(4).coeffs == (1, 11, 11, 1)


def test_harmonic_number_matches_direct_sum():
    for k in (1, 2, 5):
        for n in (0, 1, 7, 100):
            direct = math.fsum(j ** (-float(k)) for j in range(1, n + 1))
            assert harmonic_number(k, n) == pytest.approx(direct, rel=5e-15, abs=1e-15)
