"""Adaptive Gauss-Kronrod quadrature on panels, plus two specializations:
cotangent-weighted integrals on (0, 1) and high-frequency oscillatory ones.

The driver batches all nodes of all pending panels into one integrand call,
so integrands must accept a float64 array and return an array of the same
length (real or complex).  Error estimates are per-panel ``|K15 - G7|``
differences, summed; convergence means the summed estimate meets
``max(rel_tol * |value|, abs_tol)``.  Running out of subdivision budget is
reported through ``converged=False``, never as an exception.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import DivergenceError, EvaluationError

__all__ = [
    "QuadratureSpec",
    "QuadratureResult",
    "integrate_open",
    "integrate_cot_weighted",
    "integrate_oscillatory",
]


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerance and budget knobs shared by every integral in the library."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-13
    max_subdivisions: int = 200
    endpoint_margin: float = 1e-8

    def __post_init__(self):
        if self.rel_tol < 0 or self.abs_tol <= 0:
            raise ValueError("need rel_tol >= 0 and abs_tol > 0")
        if not 0 < self.endpoint_margin <= 0.1:
            raise ValueError("endpoint_margin must lie in (0, 0.1]")
        if self.max_subdivisions < 0:
            raise ValueError("max_subdivisions must be >= 0")


@dataclass
class QuadratureResult:
    value: complex
    error_estimate: float
    evaluations: int
    converged: bool
    warnings: list = field(default_factory=list)


# 15-point Kronrod extension of 7-point Gauss on (-1, 1); standard published
# abscissae/weights.  Nodes are stored ascending; the Gauss subset sits at
# the odd indices.
_XK_HALF = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WK_HALF = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG_HALF = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

_XK = np.concatenate([-_XK_HALF[:7], _XK_HALF[::-1]])
_WK = np.concatenate([_WK_HALF[:7], _WK_HALF[::-1]])
_GAUSS_IDX = np.arange(1, 15, 2)
_WG = np.concatenate([_WG_HALF[:3], _WG_HALF[::-1]])

# Panels mapped from (-1,1) never touch their endpoints: the rule is open.
_NODE_FRAC = 0.5 * (_XK + 1.0)


def _eval_panels(f, lefts, widths):
    """Evaluate f on every Kronrod node of every panel, return (IK, err, n)."""
    x = lefts[:, None] + widths[:, None] * _NODE_FRAC[None, :]
    flat = x.ravel()
    fv = np.asarray(f(flat))
    if fv.shape != flat.shape:
        raise ValueError("integrand must return one value per abscissa")
    if not np.all(np.isfinite(fv)):
        bad = int(np.flatnonzero(~np.isfinite(fv))[0])
        raise EvaluationError(
            f"integrand returned a non-finite value at u = {flat[bad]!r}",
            node=float(flat[bad]),
        )
    fv = fv.reshape(x.shape)
    half = 0.5 * widths
    ik = half * (fv @ _WK)
    ig = half * (fv[:, _GAUSS_IDX] @ _WG)
    return ik, np.abs(ik - ig), flat.size


def integrate_open(f, spec=None, interval=(0.0, 1.0), initial_panels=8,
                   max_panel_width=None):
    """Adaptive integration of ``f`` over ``interval`` with an open rule.

    ``max_panel_width`` caps the width of the initial uniform mesh (used by
    the oscillatory front end); adaptivity proceeds from whatever mesh that
    implies.  ``initial_panels`` may also be an explicit breakpoint sequence
    covering the interval.
    """
    spec = spec or QuadratureSpec()
    a0, b0 = float(interval[0]), float(interval[1])
    if not b0 > a0:
        raise ValueError("interval must have positive width")

    if np.ndim(initial_panels) > 0:
        edges = np.asarray(initial_panels, dtype=np.float64)
        if edges[0] != a0 or edges[-1] != b0 or np.any(np.diff(edges) <= 0):
            raise ValueError("breakpoints must increase from interval start to end")
    else:
        count = int(initial_panels)
        if max_panel_width is not None:
            count = max(count, math.ceil((b0 - a0) / max_panel_width))
        edges = np.linspace(a0, b0, count + 1)
    lefts = edges[:-1].copy()
    widths = np.diff(edges)

    vals, errs, n_eval = _eval_panels(f, lefts, widths)
    subdivisions = 0
    warnings_out = []
    while True:
        total = vals.sum()
        err_total = float(errs.sum())
        target = max(spec.rel_tol * abs(total), spec.abs_tol)
        if err_total <= target:
            converged = True
            break
        if subdivisions >= spec.max_subdivisions:
            converged = False
            warnings_out.append(
                f"subdivision budget ({spec.max_subdivisions}) exhausted with "
                f"error estimate {err_total:.3e} > target {target:.3e}"
            )
            break
        # Split every panel holding more than its fair share of the target;
        # since sum(errs) > target, at least one always qualifies.
        theta = target / (2.0 * len(lefts))
        split = np.flatnonzero(errs > theta)
        budget = spec.max_subdivisions - subdivisions
        if split.size > budget:
            split = split[np.argsort(errs[split])[::-1][:budget]]
        subdivisions += split.size

        keep = np.ones(len(lefts), dtype=bool)
        keep[split] = False
        new_lefts = np.concatenate([lefts[split], lefts[split] + 0.5 * widths[split]])
        new_widths = np.concatenate([0.5 * widths[split]] * 2)
        nv, ne, used = _eval_panels(f, new_lefts, new_widths)
        n_eval += used
        lefts = np.concatenate([lefts[keep], new_lefts])
        widths = np.concatenate([widths[keep], new_widths])
        vals = np.concatenate([vals[keep], nv])
        errs = np.concatenate([errs[keep], ne])

    return QuadratureResult(
        value=complex(total),
        error_estimate=err_total,
        evaluations=n_eval,
        converged=converged,
        warnings=warnings_out,
    )


def integrate_cot_weighted(g, spec=None, scale_hint=0.0):
    """Integral of ``g(u) * cot(pi*u)`` over (0, 1) for smooth ``g`` that
    vanishes at both endpoints.

    The endpoint zeros are what make the integral exist, so they are checked
    up front (:class:`DivergenceError` on failure).  Inside
    ``[margin, 1-margin]`` the product is integrated adaptively; on each
    margin strip the cotangent pole is integrated in closed form against a
    local linear model of ``g`` fitted through the endpoint zero.

    ``scale_hint`` tells the driver the magnitude of the *intermediate*
    quantities inside ``g`` when that exceeds ``max |g|`` (a difference of
    large near-equal values evaluates with rounding floor ``eps * hint``,
    not ``eps * max|g|``).  Both the endpoint check and the attainable
    absolute tolerance are referenced to it.  The working absolute target is
    ``abs_tol`` *scaled by the integrand size*, so tiny integrals are still
    resolved to relative accuracy instead of being accepted at a fixed
    absolute floor.
    """
    spec = spec or QuadratureSpec()
    m = spec.endpoint_margin

    probe = np.concatenate(([0.0, 1.0], np.linspace(0.03125, 0.96875, 31)))
    gv = np.asarray(g(probe))
    if not np.all(np.isfinite(gv)):
        bad = int(np.flatnonzero(~np.isfinite(gv))[0])
        raise EvaluationError(
            f"integrand factor returned a non-finite value at u = {probe[bad]!r}",
            node=float(probe[bad]),
        )
    scale = float(np.max(np.abs(gv)))
    n_eval = probe.size
    if scale == 0.0 and scale_hint == 0.0:
        return QuadratureResult(0j, 0.0, n_eval, True, [])
    eval_scale = max(scale, float(scale_hint))

    # floored at rounding noise so a tight abs_tol cannot demand an endpoint
    # residual below what evaluating g in doubles can produce
    tol_end = max(spec.abs_tol, 64.0 * np.finfo(np.float64).eps) * eval_scale
    g0, g1 = complex(gv[0]), complex(gv[1])
    if abs(g0) > tol_end or abs(g1) > tol_end:
        raise DivergenceError(
            "cotangent-weighted integrand must vanish at the endpoints: "
            f"|g(0)| = {abs(g0):.3e}, |g(1)| = {abs(g1):.3e}, "
            f"allowed {tol_end:.3e} (= abs_tol * scale)"
        )
    if scale == 0.0:
        return QuadratureResult(0j, 0.0, n_eval, True, [])

    # Margin strips: model g linearly through its endpoint zero and integrate
    # the model against the exact cotangent expansion 1/(pi*t) - pi*t/3 + ...
    left_pts = np.array([0.25 * m, 0.5 * m, 0.75 * m])
    right_pts = 1.0 - left_pts[::-1]
    gl = np.asarray(g(left_pts))
    gr = np.asarray(g(right_pts))
    n_eval += 6
    c0 = complex(np.sum(gl * left_pts) / np.sum(left_pts**2))
    # right model g(u) ~ s*(u-1)
    c1 = complex(np.sum(gr * (right_pts - 1.0)) / np.sum((right_pts - 1.0) ** 2))
    strip_value = (c0 + c1) * (m / math.pi - math.pi * m**3 / 9.0)
    resid = max(
        float(np.max(np.abs(gl - c0 * left_pts) / left_pts)),
        float(np.max(np.abs(gr - c1 * (right_pts - 1.0)) / (1.0 - right_pts))),
    )
    strip_err = resid * m / math.pi + (abs(c0) + abs(c1)) * m**3

    # Absolute target referenced to the integrand scale, floored at the
    # rounding noise the evaluation of g can actually deliver.
    eps = np.finfo(np.float64).eps
    inner_spec = QuadratureSpec(
        rel_tol=spec.rel_tol,
        abs_tol=max(spec.abs_tol * scale, 64.0 * eps * eval_scale),
        max_subdivisions=spec.max_subdivisions,
        endpoint_margin=spec.endpoint_margin,
    )
    interior = integrate_open(
        lambda u: np.asarray(g(u)) * kernels.cot_pi(u),
        inner_spec,
        interval=(m, 1.0 - m),
        initial_panels=np.concatenate(([m], np.linspace(0.1, 0.9, 9), [1.0 - m])),
    )
    return QuadratureResult(
        value=interior.value + strip_value,
        error_estimate=interior.error_estimate + strip_err,
        evaluations=interior.evaluations + n_eval,
        converged=interior.converged,
        warnings=list(interior.warnings),
    )


def integrate_oscillatory(f, n, spec=None):
    """Integrate ``f`` over (0, 1) when it oscillates at integer frequency ``n``.

    Starts from a uniform mesh of width at most ``1/(4n)`` so every panel sees
    at most a quarter period, then refines adaptively as usual.  ``f`` must be
    bounded on the closed interval (the oscillatory integrands here all have
    removable endpoint singularities).
    """
    if n < 1 or n != int(n):
        raise ValueError("frequency n must be a positive integer")
    spec = spec or QuadratureSpec()
    return integrate_open(f, spec, interval=(0.0, 1.0), initial_panels=4,
                          max_panel_width=1.0 / (4.0 * int(n)))
