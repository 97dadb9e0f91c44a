"""Numerical kernels: backend parity and a few analytic anchors.

Every kernel exists twice (pure numpy and numba-jitted); the public
functions dispatch on HURZETA_BACKEND.  The parity tests drive both
registered implementations directly so a stale or drifting jit build
cannot hide behind the dispatcher.
"""

import math

import numpy as np
import pytest

from hurzeta import kernels


def _draw_args(name, rng):
    u = rng.uniform(0.02, 0.98, size=11)
    if name == "cot_pi":
        return (u,)
    if name == "poly_exp_gap":
        k = rng.integers(2, 7)
        coeffs = rng.normal(size=k) + 1j * rng.normal(size=k)
        b = complex(rng.uniform(0.2, 3.0), rng.uniform(-1.0, 1.0))
        offset = complex(rng.normal(), rng.normal())
        return (u, coeffs, -2j * np.pi * b, offset)
    if name in ("sin_ratio_gap", "sinh_ratio_gap"):
        trig = np.sinh if name == "sinh_ratio_gap" else np.sin
        a1 = complex(rng.uniform(0.5, 2.5), rng.uniform(-0.4, 0.4))
        a2 = complex(rng.uniform(0.5, 2.5), rng.uniform(-0.4, 0.4))
        if name == "sinh_ratio_gap":
            a1, a2 = a1.real, a2.real  # real decay arguments
        return (u, a1, 1.0 / trig(a1), a2, 1.0 / trig(a2))
    if name == "sin_ratio_ucos_gap":
        a = complex(rng.uniform(0.5, 2.5), rng.uniform(-0.4, 0.4))
        w = rng.uniform(1.0, 12.0)
        return (u, a, 1.0 / np.sin(a), w)
    if name == "pow_sin_cot":
        return (u, float(rng.integers(0, 5)), int(rng.integers(1, 200)))
    if name == "one_minus_cos_cot":
        return (u, int(rng.integers(1, 200)))
    if name == "decay_one_minus_cos_cot":
        return (u, float(rng.integers(1, 5)), int(rng.integers(1, 200)))
    if name == "inv_power_sum":
        b = complex(rng.uniform(0.2, 3.0), rng.uniform(-1.0, 1.0))
        return (b, int(rng.integers(2, 9)), 0, int(rng.integers(5, 60)))
    if name == "rot_inv_power_sum":
        return (float(rng.uniform(0.2, 3.0)), int(rng.integers(2, 9)), 0,
                int(rng.integers(5, 60)))
    raise AssertionError(f"unhandled kernel {name}")


@pytest.mark.parametrize("name", sorted(kernels.IMPLEMENTATIONS["numpy"]))
def test_backend_parity(name):
    if not kernels.NUMBA_AVAILABLE:
        pytest.skip("numba backend not importable here")
    f_np = kernels.IMPLEMENTATIONS["numpy"][name]
    f_nb = kernels.IMPLEMENTATIONS["numba"][name]
    rng = np.random.default_rng(20_240_000 + hash(name) % 10_000)
    for _ in range(8):
        args = _draw_args(name, rng)
        v_np = np.asarray(f_np(*args))
        v_nb = np.asarray(f_nb(*args))
        scale = np.maximum(np.abs(v_np), 1e-30)
        assert np.max(np.abs(v_np - v_nb) / scale) < 5e-13


def test_registry_is_complete():
    assert set(kernels.IMPLEMENTATIONS["numpy"]) == set(
        kernels.IMPLEMENTATIONS["numba"]
    )
    assert len(kernels.IMPLEMENTATIONS["numpy"]) == 10


def test_cot_pi_anchors():
    u = np.array([0.25, 0.5, 0.75])
    v = kernels.cot_pi(u)
    assert v == pytest.approx([1.0, 0.0, -1.0], abs=1e-15)


def test_cot_pi_antisymmetry():
    u = np.linspace(0.01, 0.49, 23)
    assert kernels.cot_pi(1.0 - u) == pytest.approx(-kernels.cot_pi(u), rel=1e-14)


def test_inv_power_sum_is_plain_sum():
    # the j1 bound is inclusive
    b, k = 1.3 + 0.4j, 4
    brute = sum((j + b) ** (-k) for j in range(2, 38))
    assert kernels.inv_power_sum(b, k, 2, 37) == pytest.approx(brute, rel=1e-14)


def test_rot_inv_power_sum_is_rotated_sum():
    b, k = 0.8, 3
    brute = sum((1j * j + b) ** (-k) for j in range(0, 26))
    assert kernels.rot_inv_power_sum(b, k, 0, 25) == pytest.approx(brute, rel=1e-14)


def test_poly_exp_gap_matches_direct_evaluation():
    u = np.linspace(0.0, 1.0, 9)
    coeffs = np.array([0.4 - 0.2j, 0.1j, -0.3 + 0.05j])
    c = -2j * np.pi * (1.2 + 0.3j)
    offset = 0.07 - 0.02j
    direct = (coeffs[0] * u**2 + coeffs[1] * u + coeffs[2]) * np.exp(c * u) - offset
    assert kernels.poly_exp_gap(u, coeffs, c, offset) == pytest.approx(direct, rel=1e-13)


def test_pow_sin_cot_is_product():
    u = np.linspace(0.1, 0.9, 7)
    n = 17
    direct = u**3 * np.sin(2 * np.pi * n * u) / np.tan(np.pi * u)
    assert kernels.pow_sin_cot(u, 3.0, n) == pytest.approx(direct, rel=1e-12)


def test_one_minus_cos_cot_is_reflected_product():
    # evaluates at the reflected abscissa: (1-cos(2*pi*n*(1-u))) cot(pi*(1-u))
    u = np.linspace(0.1, 0.9, 7)
    n = 9
    direct = (1 - np.cos(2 * np.pi * n * (1 - u))) / np.tan(np.pi * (1 - u))
    assert kernels.one_minus_cos_cot(u, n) == pytest.approx(direct, rel=1e-12)


def test_decay_one_minus_cos_cot_is_product():
    u = np.linspace(0.1, 0.9, 7)
    n = 9
    direct = (1 - u) ** 2 * (1 - np.cos(2 * np.pi * n * u)) / np.tan(np.pi * u)
    assert kernels.decay_one_minus_cos_cot(u, 2.0, n) == pytest.approx(direct, rel=1e-12)


def test_active_backend_reports_a_registered_name():
    from hurzeta.backend import active_backend

    assert active_backend() in kernels.IMPLEMENTATIONS
