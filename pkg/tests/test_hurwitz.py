"""The zeta evaluator: exact algebra, oracle agreement, error contract."""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracles import catalan_constant, hurwitz_direct, rotated_direct
from hurzeta import (
    ZetaParams,
    bracket_kernel,
    bracket_scale,
    eulerian_row,
    hurwitz_series_oracle,
    hurwitz_zeta,
    imag_part_integral,
    real_part_formula,
    zeta_auto,
)
from hurzeta.errors import (
    ConditioningWarning,
    DomainError,
    RangeOverflowError,
)


def _li_exact(m: int, q: Fraction) -> Fraction:
    """Li_{-m}(q) as an exact rational: q * A_m(q) / (1-q)**(m+1)."""
    if m == 0:
        return q / (1 - q)
    num = Fraction(0)
    for a in reversed(eulerian_row(m)):
        num = num * q + a
    return q * num / (1 - q) ** (m + 1)


class TestEndpointIdentityExact:
    """B(0) = B(1) is a rational identity in q = exp(-2*pi*i*b).

    With c_j = (delta_{1j} + Li_{1-j}(q)) / ((j-1)!(k-j)!), the bracket
    satisfies c_k = q * sum_j c_j identically.  For fixed k both sides are
    rational functions whose numerators (after clearing (1-q)**k) have
    degree <= k+1, so exact equality at k+2 distinct rational points proves
    the identity outright -- no floating point involved.
    """

    POINTS = [Fraction(p, r) for p, r in
              [(3, 7), (-2, 5), (22, 7), (-31, 3), (1, 99), (13, 2),
               (-7, 11), (5, 3), (-1, 2), (9, 4), (101, 100), (-17, 6)]]

    @pytest.mark.parametrize("k", range(2, 9))
    def test_bracket_endpoints_agree_exactly(self, k):
        for q in self.POINTS:
            cs = []
            for j in range(1, k + 1):
                delta = Fraction(1 if j == 1 else 0)
                cs.append((delta + _li_exact(j - 1, q))
                          / (math.factorial(j - 1) * math.factorial(k - j)))
            assert cs[-1] == q * sum(cs), f"identity broke at k={k}, q={q}"


class TestClosedFormValues:
    def test_half_integer_b(self):
        # zeta(2, 1/2) = pi**2 / 2
        v = hurwitz_zeta(ZetaParams.create(2, 0.5)).total
        assert v.real == pytest.approx(math.pi**2 / 2, rel=1e-12)
        assert abs(v.imag) < 1e-12

    def test_quarter_shift_catalan(self):
        # zeta(2, 5/4) = -16 + pi**2 + 8*G, with G from an accelerated
        # alternating series rather than a stored constant
        exact = -16.0 + math.pi**2 + 8.0 * catalan_constant()
        v = hurwitz_zeta(ZetaParams.create(2, 1.25)).total
        assert v.real == pytest.approx(exact, rel=1e-12)

    def test_three_quarters(self):
        # zeta(2, 3/4) = pi**2 - 8*G: the odd-denominator lattice sum
        # pi**2/8 splits into G plus the 3-mod-4 part
        exact = math.pi**2 - 8.0 * catalan_constant()
        v = hurwitz_zeta(ZetaParams.create(2, 0.75)).total
        assert v.real == pytest.approx(exact, rel=1e-12)

    @pytest.mark.parametrize("k,b", [(2, 0.3), (3, 1.7), (4, 2.25),
                                     (5, 0.6 + 0.4j), (7, 1.2 - 0.8j)])
    def test_against_brute_force(self, k, b):
        v = hurwitz_zeta(ZetaParams.create(k, b)).total
        ref = hurwitz_direct(k, b)
        assert abs(v - ref) <= 1e-10 * (1 + abs(ref))

    def test_breakdown_reassembles(self):
        br = hurwitz_zeta(ZetaParams.create(3, 0.8))
        s = (br.term_half_bk + br.term_polylog_single
             + br.term_polylog_sum + br.term_integral)
        assert s == br.total


class TestRotatedDecomposition:
    # real_part_formula + i * imag_part_integral must reassemble
    # sum_{j>=0} (i*j + b)**-k -- including at integer b, where the
    # combined complex-q formula is off-limits but the real-decay
    # decomposition is perfectly regular.

    @pytest.mark.parametrize("b", [0.3, 1.0, 1.25, 2.0, 3.75])
    @pytest.mark.parametrize("k", [2, 3, 5, 8])
    def test_reassembly(self, k, b):
        got = complex(real_part_formula(k, b), imag_part_integral(k, b))
        ref = rotated_direct(k, b)
        assert abs(got - ref) <= 1e-9 * (1 + abs(ref))

    def test_domain_guards(self):
        with pytest.raises(DomainError):
            real_part_formula(1, 0.5)
        with pytest.raises(DomainError):
            real_part_formula(2, -0.5)
        with pytest.raises(DomainError):
            imag_part_integral(2, 0.0)


class TestBracketEndpoint:
    def test_seeded_draws_cancel_to_working_precision(self):
        rng = np.random.default_rng(421)
        for _ in range(60):
            k = int(rng.integers(2, 13))
            b = complex(rng.uniform(0.05, 6.0), rng.uniform(-2.5, 2.5))
            params = ZetaParams.create(k, b)
            if abs(1.0 - params.q) < 1e-3:
                continue
            g0 = abs(bracket_kernel(params, np.array([0.0]))[0])
            assert g0 <= 1e-11 * bracket_scale(params)

    def test_scale_tracks_uncancelled_magnitudes(self):
        # large |Im b| => huge |q|; the yardstick must grow with it even
        # though the cancelled coefficients stay O(1/|q|)
        params = ZetaParams.create(2, 1.3 + 2.4j)
        assert bracket_scale(params) > abs(params.q)


class TestProperties:
    # The closed form's conditioning degrades like |1 - q|**-k as b
    # approaches an integer (the polylogarithm pole), so the sampled
    # domain keeps the fractional part of b in [0.2, 0.8] -- same standoff
    # the fixed acceptance grid uses.  Points closer to an integer are the
    # documented job of the series route.

    @given(k=st.integers(2, 8), n=st.integers(0, 3), f=st.floats(0.2, 0.8))
    @settings(max_examples=30, deadline=None)
    def test_shift_identity(self, k, n, f):
        b = n + f
        z1 = hurwitz_zeta(ZetaParams.create(k, b)).total
        z2 = hurwitz_zeta(ZetaParams.create(k, b + 1)).total
        assert abs(z1 - z2 - b ** (-k)) < 1e-9 * (1 + abs(z1))

    @given(k=st.integers(2, 6), n=st.integers(0, 3), f=st.floats(0.2, 0.8))
    @settings(max_examples=30, deadline=None)
    def test_realness_for_real_b(self, k, n, f):
        v = hurwitz_zeta(ZetaParams.create(k, n + f)).total
        assert abs(v.imag) <= 1e-10 * (1 + abs(v))

    @given(k=st.integers(2, 8), n=st.integers(0, 2), f=st.floats(0.2, 0.8),
           im=st.floats(-1.0, 1.0))
    @settings(max_examples=25, deadline=None)
    def test_conjugate_symmetry(self, k, n, f, im):
        if abs(im) < 1e-3:
            return
        b = n + f
        z_up = zeta_auto(k, complex(b, im))[0]
        z_dn = zeta_auto(k, complex(b, -im))[0]
        assert abs(z_up - z_dn.conjugate()) < 1e-9 * (1 + abs(z_up))


class TestRouting:
    def test_integer_b_goes_to_series(self):
        v, route, breakdown = zeta_auto(2, 1.0)
        assert route == "series"
        assert breakdown is None
        assert v.real == pytest.approx(math.pi**2 / 6, rel=1e-12)

    def test_generic_b_goes_to_closed_form(self):
        v, route, breakdown = zeta_auto(2, 1.25)
        assert route == "closed-form"
        assert breakdown is not None

    def test_series_oracle_tolerance_scaling(self):
        loose = hurwitz_series_oracle(2, 0.7, tol=1e-6)
        tight = hurwitz_series_oracle(2, 0.7, tol=1e-12)
        ref = hurwitz_direct(2, 0.7)
        assert abs(loose - ref) < 1e-6
        assert abs(tight - ref) < 1e-11

    def test_cancellation_diagnostic_fires_where_expected(self):
        # k=10, b=3.75: answer ~ 5.7e-6 against O(10) working terms; the
        # evaluator must confess its degraded relative accuracy
        br = hurwitz_zeta(ZetaParams.create(10, 3.75))
        assert any("cancellation" in w for w in br.warnings)
        # and stay silent on a benign point
        br2 = hurwitz_zeta(ZetaParams.create(2, 1.25))
        assert not any("cancellation" in w for w in br2.warnings)


class TestErrorContract:
    def test_pole_at_nonpositive_integer_b(self):
        for bad in (0.0, -1.0, -7.0):
            with pytest.raises(DomainError):
                zeta_auto(3, bad)

    def test_k_below_two(self):
        with pytest.raises(DomainError):
            ZetaParams.create(1, 0.5)

    def test_factorial_range_cap(self):
        with pytest.raises(RangeOverflowError):
            hurwitz_zeta(ZetaParams.create(200, 0.5))

    def test_imaginary_cap(self):
        with pytest.raises(RangeOverflowError):
            ZetaParams.create(2, 1 + 9j)

    def test_near_integer_b_warns(self):
        with pytest.warns(ConditioningWarning):
            hurwitz_zeta(ZetaParams.create(2, 1.0 + 1e-13))
