"""The generating function ``f(x, b) = sum_{k>=2} x**k * (zeta(k,b) - b**-k)``
and its relatives: a four-branch closed form selected by the arithmetic
nature of ``b``, the defining series for cross-checks, the odd-zeta integral
representation, the sinh kernel identity behind it, and recovery of
``zeta(k, b)`` from Taylor coefficients of ``f``.

Branch selection is discontinuous in *representation* (the closed forms for
integer and non-integer ``b`` look nothing alike), so classification is
explicit, carries proximity diagnostics for every singular locus, and has a
defined warning band near the integer boundaries.  Half-integer ``b`` has no
closed form here and is rejected.
"""

import cmath
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels
from .errors import (
    CapacityError,
    ConditioningWarning,
    DivergenceError,
    DomainError,
    IllConditionedError,
    InstabilityWarning,
    RangeOverflowError,
    UnsupportedParameterError,
)
from .hurwitz import hurwitz_series_oracle
from .quadrature import QuadratureResult, QuadratureSpec, integrate_cot_weighted
from .special_functions import BernoulliTable, bernoulli, harmonic_number

__all__ = [
    "ProximityFlags",
    "GenFunCase",
    "GenFunEval",
    "GenFunSeries",
    "classify_case",
    "genfun_closed",
    "genfun_series",
    "series_coefficient",
    "radius_of_convergence",
    "odd_zeta_integral",
    "sinh_kernel",
    "sinh_kernel_series",
    "zeta_from_genfun",
    "genfun_parts_real_imag",
]

INT_EPS_DEFAULT = 1e-9
PROX_TOL_DEFAULT = 1e-6
WARN_BAND = 1e-6  # b within [int_eps, WARN_BAND) of an integer locus: warn, proceed


def _dist_to_int(w: complex) -> float:
    """Complex distance from w to the nearest integer on the real axis."""
    return abs(w - round(w.real))


@dataclass(frozen=True)
class ProximityFlags:
    """Distances from (x, b) to every singular locus of the closed forms."""

    x_minus_b: float      # pole of the rational term x**2/(2b(x-b))
    two_b_int: float      # 2b near Z: branch boundary / sin(pi*b) trouble
    two_xmb_int: float    # 2(x-b) near Z: integral normalization vanishes
    xmb_int: float        # x-b near Z: csc(pi*(x-b)) pole (generic branch)
    x_int: float          # x near Z: cot(pi*x) pole (integer branches)
    two_x_int: float      # 2x near Z: sin(2*pi*x) vanishes (integer branches)


@dataclass(frozen=True)
class GenFunCase:
    tag: str  # generic | b_zero | b_pos_int | b_neg_int | half_int_unsupported
    proximity_flags: ProximityFlags


@dataclass
class GenFunEval:
    """One closed-form evaluation; total = rational + trig + integral terms."""

    x: complex
    b: complex
    case: GenFunCase
    rational_term: complex
    trig_term: complex
    integral_term: complex
    total: complex
    quadrature: QuadratureResult
    warnings: list = field(default_factory=list)


@dataclass(frozen=True)
class GenFunSeries:
    """Partial sum of the defining series with a geometric tail estimate."""

    value: complex
    tail_estimate: float
    kmax: int


def classify_case(x: complex, b: complex, int_eps: float = INT_EPS_DEFAULT) -> GenFunCase:
    """Assign the closed-form branch from ``b`` alone (with tolerance
    ``int_eps`` for integer membership) and record proximity diagnostics."""
    x, b = complex(x), complex(b)
    flags = ProximityFlags(
        x_minus_b=abs(x - b),
        two_b_int=_dist_to_int(2 * b),
        two_xmb_int=_dist_to_int(2 * (x - b)),
        xmb_int=_dist_to_int(x - b),
        x_int=_dist_to_int(x),
        two_x_int=_dist_to_int(2 * x),
    )
    if flags.two_b_int < int_eps:
        m2 = round(2 * b.real)
        if m2 % 2 != 0:
            tag = "half_int_unsupported"
        elif m2 == 0:
            tag = "b_zero"
        elif m2 > 0:
            tag = "b_pos_int"
        else:
            tag = "b_neg_int"
    else:
        tag = "generic"
    return GenFunCase(tag=tag, proximity_flags=flags)


def radius_of_convergence(b: complex) -> float:
    """``r(b) = min_{j>=1} |j+b|``, skipping any exact pole ``j = -b``
    (the convention for negative integer ``b``)."""
    b = complex(b)
    jmax = max(2, math.ceil(abs(b)) + 2)
    dists = [abs(j + b) for j in range(1, jmax + 1)]
    kept = [d for d in dists if d > 1e-12]
    if not kept:
        raise DomainError(f"no nonsingular series terms for b = {b}")
    return min(kept)


def _zero_eval(x, b, case):
    # f(0, b) = 0: the series is empty and every closed-form term carries x.
    return GenFunEval(
        x=x, b=b, case=case,
        rational_term=0j, trig_term=0j, integral_term=0j, total=0j,
        quadrature=QuadratureResult(0j, 0.0, 0, True, []),
    )


def genfun_closed(x: complex, b: complex, spec: QuadratureSpec | None = None,
                  int_eps: float = INT_EPS_DEFAULT,
                  prox_tol: float = PROX_TOL_DEFAULT) -> GenFunEval:
    """Closed-form ``f(x, b)`` on the branch selected by ``b``.

    Branches (``q``-free, all singular integrals are cotangent-weighted with
    endpoint-vanishing smooth factors):

    * generic (2b not integer)::

        x**2/(2b(x-b)) - pi*x*sin(pi*x)/(2*sin(pi*b)*sin(pi*(x-b)))
            - pi*x * I[sin(2pi(x-b)u)/sin(2pi(x-b)) - sin(2pi*b*u)/sin(2pi*b)]

    * b = 0::          1/2 - (pi*x/2)*cot(pi*x) - pi*x * I[sin(2pi*x*u)/sin(2pi*x) - u]
    * b positive int:: x**2/(2b(x-b)) - (pi*x/2)*cot(pi*x)
                       - pi*x * I[sin(2pi(x-b)u)/sin(2pi(x-b)) - u*cos(2pi*b*u)]
    * b negative int:: 1 + the positive-integer form

    where ``I[g] = integral_0^1 g(u) cot(pi*u) du``.  (For integer ``b`` the
    printed normalization ``sin(2*pi*x)`` equals ``sin(2*pi*(x-b))``; the
    latter is used so the ``u = 1`` endpoint cancels exactly in floats.)
    Inputs within ``prox_tol`` of a singular locus raise
    :class:`IllConditionedError` naming the locus; ``b`` within
    ``[int_eps, 1e-6)`` of an integer locus proceeds on the generic branch
    with a :class:`ConditioningWarning`.
    """
    spec = spec or QuadratureSpec()
    x, b = complex(x), complex(b)
    case = classify_case(x, b, int_eps)
    fl = case.proximity_flags
    notes = []

    if case.tag == "half_int_unsupported":
        raise UnsupportedParameterError(
            f"b = {b} is a half-integer: no closed-form branch exists for it"
        )
    if case.tag == "generic" and fl.two_b_int < WARN_BAND:
        msg = (
            f"b = {b} lies within {fl.two_b_int:.2e} of a branch boundary "
            f"(2b near an integer); generic-branch evaluation is ill-conditioned there"
        )
        warnings.warn(msg, ConditioningWarning, stacklevel=2)
        notes.append(msg)

    if x == 0:
        ev = _zero_eval(x, b, case)
        ev.warnings = notes
        return ev

    if case.tag == "generic":
        if fl.x_minus_b < prox_tol:
            raise IllConditionedError(
                f"|x - b| = {fl.x_minus_b:.2e} < {prox_tol:g}", locus="x = b"
            )
        if fl.xmb_int < prox_tol:
            raise IllConditionedError(
                f"x - b within {fl.xmb_int:.2e} of an integer", locus="sin(pi*(x-b)) = 0"
            )
        if fl.two_xmb_int < prox_tol:
            raise IllConditionedError(
                f"2(x - b) within {fl.two_xmb_int:.2e} of an integer",
                locus="sin(2*pi*(x-b)) = 0",
            )
        rational = x * x / (2.0 * b * (x - b))
        trig = -math.pi * x * cmath.sin(math.pi * x) / (
            2.0 * cmath.sin(math.pi * b) * cmath.sin(math.pi * (x - b))
        )
        a1 = 2.0 * math.pi * (x - b)
        a2 = 2.0 * math.pi * b
        s1inv = 1.0 / cmath.sin(a1)
        s2inv = 1.0 / cmath.sin(a2)
        hint = abs(s1inv) * math.exp(abs(a1.imag)) + abs(s2inv) * math.exp(abs(a2.imag))
        quad = integrate_cot_weighted(
            lambda u: kernels.sin_ratio_gap(np.asarray(u, dtype=np.float64),
                                            a1, s1inv, a2, s2inv),
            spec,
            scale_hint=hint,
        )
    else:
        bi = round(b.real)  # exact integer for the branch formulas
        if bi != 0 and fl.x_minus_b < prox_tol:
            raise IllConditionedError(
                f"|x - b| = {fl.x_minus_b:.2e} < {prox_tol:g}", locus="x = b"
            )
        if fl.x_int < prox_tol and round(x.real) != 0:
            raise IllConditionedError(
                f"x within {fl.x_int:.2e} of a nonzero integer", locus="cot(pi*x) pole"
            )
        if fl.two_x_int < prox_tol and round(2 * x.real) != 0:
            raise IllConditionedError(
                f"2x within {fl.two_x_int:.2e} of a nonzero integer",
                locus="sin(2*pi*x) = 0",
            )
        if bi == 0:
            rational = 0.5 + 0j
        else:
            rational = x * x / (2.0 * bi * (x - bi)) + (1.0 if bi < 0 else 0.0)
        trig = -(math.pi * x / 2.0) * cmath.cos(math.pi * x) / cmath.sin(math.pi * x)
        a1 = 2.0 * math.pi * (x - bi)
        s1inv = 1.0 / cmath.sin(a1)
        w = 2.0 * math.pi * bi
        hint = abs(s1inv) * math.exp(abs(a1.imag)) + 1.0 + abs(x.imag) * 7.0
        quad = integrate_cot_weighted(
            lambda u: kernels.sin_ratio_ucos_gap(np.asarray(u, dtype=np.float64),
                                                 a1, s1inv, w),
            spec,
            scale_hint=hint,
        )

    integral = -math.pi * x * quad.value
    total = rational + trig + integral
    notes.extend(quad.warnings)
    return GenFunEval(
        x=x, b=b, case=case,
        rational_term=rational, trig_term=trig, integral_term=integral,
        total=total, quadrature=quad, warnings=notes,
    )


def series_coefficient(k: int, b: complex, tol: float = 1e-13) -> complex:
    """``zeta(k, b) - b**-k = sum_{j>=1} (j+b)**(-k)``, by direct summation.

    Computed at the shifted argument (``zeta(k, b+1)`` and friends) so no
    cancellation against ``b**-k`` ever happens; exact negative-integer ``b``
    skips its singular term per the series convention.
    """
    b = complex(b)
    if b.imag == 0.0 and float(b.real).is_integer():
        bi = int(b.real)
        if bi >= 0:
            return hurwitz_series_oracle(k, bi + 1.0, tol=tol)
        # skip j = -bi: remaining terms are zeta(k) + (-1)**k * H_k(|bi|-1)
        return hurwitz_series_oracle(k, 1.0, tol=tol) + (-1.0) ** k * harmonic_number(
            k, -bi - 1
        )
    if b.real > -1.0:
        return hurwitz_series_oracle(k, b + 1.0, tol=tol)
    j0 = math.floor(-b.real) + 1
    head = sum((j + b) ** (-k) for j in range(1, j0 + 1))
    return head + hurwitz_series_oracle(k, b + j0 + 1.0, tol=tol)


def genfun_series(x: complex, b: complex, kmax: int,
                  margin: float = 0.1) -> GenFunSeries:
    """Partial sum of ``sum_{k=2..kmax} x**k * (zeta(k,b) - b**-k)``.

    Coefficients come from the series oracle (independent of every closed
    form here).  Requires ``|x| < r(b)*(1 - margin)`` so the geometric tail
    estimate ``A * rho**(kmax+1) / (1 - rho)``, ``rho = |x|/r(b)``, is
    meaningful; it is returned alongside the value.
    """
    if kmax < 2:
        raise DomainError("kmax must be >= 2")
    x, b = complex(x), complex(b)
    r = radius_of_convergence(b)
    if not abs(x) < r * (1.0 - margin):
        raise DomainError(
            f"|x| = {abs(x):g} is not inside {1 - margin:g} * r(b) = "
            f"{(1 - margin) * r:g}: series diverges or converges too slowly"
        )
    if x == 0:
        return GenFunSeries(value=0j, tail_estimate=0.0, kmax=kmax)
    acc = 0j
    xp = x  # x**k tracker, starts at k=1
    scaled = []  # |a_k| * r**k for the tail's bounded prefactor
    for k in range(2, kmax + 1):
        xp *= x
        a_k = series_coefficient(k, b)
        acc += xp * a_k
        if k > kmax - 3:
            scaled.append(abs(a_k) * r**k)
    rho = abs(x) / r
    tail = max(scaled) * rho ** (kmax + 1) / (1.0 - rho) if scaled else 0.0
    return GenFunSeries(value=complex(acc), tail_estimate=float(tail), kmax=kmax)


# ---------------------------------------------------------------------------
# Odd zeta values and the sinh kernel behind them
# ---------------------------------------------------------------------------

def _odd_zeta_poly_coeffs(j: int, table: BernoulliTable | None = None):
    # r_p = B_{2p} (2 - 2**(2p)) / ((2p)! (2j-2p+1)!), exact, then floated
    out = []
    for p in range(j + 1):
        r = (
            bernoulli(2 * p, table)
            * (2 - 4**p)
            / (math.factorial(2 * p) * math.factorial(2 * j - 2 * p + 1))
        )
        out.append(float(r))
    return out


def odd_zeta_integral(j: int, spec: QuadratureSpec | None = None,
                      table: BernoulliTable | None = None) -> float:
    """``zeta(2j+1)`` from its cotangent-integral representation:

    ``-(-1)**j (2*pi)**(2j+1) / 2 * integral_0^1 P_j(u) cot(pi*u) du`` with
    ``P_j(u) = sum_{p=0..j} B_{2p} (2-2**(2p)) u**(2j-2p+1) /
    ((2p)!(2j-2p+1)!)``.  ``P_j`` has only odd powers (so ``P_j(0) = 0``)
    and its coefficients sum to zero (so ``P_j(1) = 0``); both are enforced
    by the quadrature's endpoint precondition, making a transcription error
    in the coefficients self-detecting.
    """
    if not isinstance(j, int) or not 1 <= j <= 10:
        raise DomainError(
            f"j must be an integer in [1, 10], got {j!r} "
            "(Bernoulli growth exceeds double precision beyond that)"
        )
    # (2*pi)**(2j+1) reaches ~1e16 at j=10 and multiplies the integral's
    # absolute error, so the default tolerances are tighter here
    spec = spec or QuadratureSpec(rel_tol=1e-12, abs_tol=1e-16)
    rp = _odd_zeta_poly_coeffs(j, table)
    # coefficient of v**(j-p) in P_j(u)/u with v = u**2 is r_p
    vcoeffs = np.array([rp[p] for p in range(j + 1)], dtype=np.float64)

    def poly(u):
        u = np.asarray(u, dtype=np.float64)
        v = u * u
        acc = np.full(u.shape, vcoeffs[0])
        for c in vcoeffs[1:]:
            acc = acc * v + c
        return acc * u

    try:
        quad = integrate_cot_weighted(poly, spec)
    except DivergenceError as exc:
        raise DivergenceError(
            f"odd-zeta polynomial failed its endpoint self-check for j={j}: {exc} "
            "(formula transcription error)"
        ) from exc
    return -((-1.0) ** j) * (2.0 * math.pi) ** (2 * j + 1) / 2.0 * quad.value.real


def sinh_kernel(c: complex, u) -> complex:
    """``c * sinh(c*u) / sinh(c)``: the closed form of the double series
    ``sum_j c**(2j+1) sum_p B_{2p}(2-2**(2p)) u**(2j-2p+1)/((2p)!(2j-2p+1)!)``.

    Singular exactly where ``sinh(c) = 0`` (``c = i*pi*m``, including 0).
    """
    c = complex(c)
    s = cmath.sinh(c)
    if s == 0:
        raise DomainError(
            f"sinh_kernel is singular at c = {c} (c = i*pi*m or c = 0)"
        )
    if np.ndim(u) > 0:
        return c * np.sinh(c * np.asarray(u)) / s
    return c * cmath.sinh(c * u) / s


def sinh_series_depth(c_abs: float, tol: float = 1e-12) -> int:
    """Number of j-terms of the sinh double series needed so the geometric
    tail (ratio ``(|c|/pi)**2``) drops below ``tol``."""
    q = (c_abs / math.pi) ** 2
    if q >= 1.0:
        raise DomainError(f"series diverges for |c| >= pi (|c| = {c_abs:g})")
    if q == 0.0:
        return 1
    return max(1, math.ceil(math.log(tol * (1.0 - q) / 2.0) / math.log(q)))


def sinh_kernel_series(c: complex, u: float, n_terms: int,
                       table: BernoulliTable | None = None) -> complex:
    """Truncation of the double series after ``n_terms`` values of ``j``.

    Rearranged as a convolution so no intermediate overflows: with
    ``A_p = B_{2p}(2-2**(2p)) c**(2p) / (2p)!`` (magnitude ~ ``2(|c|/pi)**(2p)``)
    and ``S_m = (c*u)**(2m+1)/(2m+1)!``, the j-th term is
    ``sum_{p=0..j} A_p S_{j-p}``.  Needs Bernoulli numbers up to
    ``B_{2(n_terms-1)}``: a default table covers ``n_terms <= 33``
    (:class:`CapacityError` beyond; build a larger table).
    """
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    c, u = complex(c), float(u)
    jmax = n_terms - 1
    # A_p built iteratively through exact Bernoulli ratios: the individual
    # factors c**(2p) and B_{2p} overflow double long before the product does.
    a = [1.0 + 0j]  # A_0 = B_0 * (2-1) / 0! = 1
    t_prev = Fraction(1)
    for p in range(1, jmax + 1):
        t_cur = bernoulli(2 * p, table) * (2 - 4**p) / math.factorial(2 * p)
        a.append(a[-1] * c * c * float(t_cur / t_prev))
        t_prev = t_cur
    cu = c * u
    s = [cu]  # S_0
    for m in range(1, jmax + 1):
        s.append(s[-1] * cu * cu / ((2 * m) * (2 * m + 1)))
    acc = 0j
    for j in range(jmax + 1):
        term = 0j
        for p in range(j + 1):
            term += a[p] * s[j - p]
        acc += term
    return acc


# ---------------------------------------------------------------------------
# Taylor-coefficient recovery of zeta(k, b)
# ---------------------------------------------------------------------------

def zeta_from_genfun(k: int, b: complex, radius: float, nodes: int,
                     spec: QuadratureSpec | None = None,
                     stability_tol: float = 1e-4) -> complex:
    """``zeta(k, b) = b**-k + (k-th Taylor coefficient of f(., b) at 0)``.

    The coefficient is extracted by discrete circle averaging of
    ``genfun_closed`` over ``nodes`` equispaced points on ``|x| = radius``
    (spectrally accurate for analytic ``f``; the aliasing error is the
    ``k + nodes``-th coefficient's contribution).  A second pass at half
    the radius cross-checks the estimate; disagreement beyond
    ``stability_tol`` relative emits :class:`InstabilityWarning`.
    """
    if not isinstance(k, int) or k < 2:
        raise DomainError(f"k must be an integer >= 2, got {k!r}")
    b = complex(b)
    r = radius_of_convergence(b)
    if not 0.0 < radius < r:
        raise DomainError(
            f"radius must lie in (0, r(b)) = (0, {r:g}), got {radius:g}"
        )
    if nodes < 4 * k:
        raise DomainError(f"nodes = {nodes} < 4k = {4 * k}: aliasing would bite")

    def coefficient(rad):
        acc = 0j
        for m in range(nodes):
            xm = rad * cmath.exp(2j * math.pi * m / nodes)
            try:
                ev = genfun_closed(xm, b, spec)
            except IllConditionedError as exc:
                raise IllConditionedError(
                    f"circle node {m}/{nodes} at x = {xm:.6g} hits a singular "
                    f"locus ({exc.locus}); choose a different radius",
                    locus=exc.locus,
                ) from exc
            acc += ev.total * cmath.exp(-2j * math.pi * k * m / nodes)
        return acc / (nodes * rad**k)

    a_k = coefficient(radius)
    a_check = coefficient(radius / 2.0)
    denom = max(abs(a_k), abs(a_check), 1e-300)
    if abs(a_k - a_check) / denom > stability_tol:
        warnings.warn(
            f"Taylor coefficient unstable across radii {radius:g} and "
            f"{radius / 2:g}: relative spread {abs(a_k - a_check) / denom:.2e}",
            InstabilityWarning,
            stacklevel=2,
        )
    bk = b.real**k if b.imag == 0.0 else b**k
    return 1.0 / bk + a_k


# ---------------------------------------------------------------------------
# Exponential / hyperbolic split of the rotated series (real x, b)
# ---------------------------------------------------------------------------

def genfun_parts_real_imag(x: float, b: float,
                           spec: QuadratureSpec | None = None):
    """Real and imaginary parts of ``F(x,b) = sum_k x**k sum_{j>=1}
    (i*j + b)**(-k)`` for real ``x``, ``b``:

    ``Re F = x**2/(2b(x-b)) + pi*x*(e**(2*pi*x)-1) /
    ((e**(-2*pi*b)-1)(e**(2*pi*x)-e**(2*pi*b)))``, and ``Im F = pi*x *
    integral_0^1 [csch(2pi(x-b)) sinh(2pi(x-b)u) - csch(2pi*b) sinh(2pi*b*u)]
    cot(pi*u) du``.  This is the rotated-parameter sibling of
    :func:`genfun_closed` (``F(x, b) = f(-i*x, -i*b)`` on the generic
    branch), kept separate so the two can be tested against each other.
    """
    spec = spec or QuadratureSpec()
    x, b = float(x), float(b)
    if abs(b) < 1e-9:
        raise IllConditionedError(f"|b| = {abs(b):.2e} < 1e-9", locus="b = 0")
    if abs(x - b) < 1e-9:
        raise IllConditionedError(f"|x - b| = {abs(x - b):.2e} < 1e-9", locus="x = b")
    if abs(2 * math.pi * x) > 700 or abs(2 * math.pi * b) > 700:
        raise RangeOverflowError("exp/sinh of 2*pi*x or 2*pi*b exceeds double range")

    emb = math.expm1(-2.0 * math.pi * b)  # e**(-2*pi*b) - 1, full precision
    ex = math.exp(2.0 * math.pi * x)
    eb = math.exp(2.0 * math.pi * b)
    if abs(ex - eb) < 1e-9 * max(ex, eb):
        raise IllConditionedError(
            f"|e^(2*pi*x) - e^(2*pi*b)| vanishes to {abs(ex - eb):.2e}",
            locus="exp(2*pi*x) = exp(2*pi*b)",
        )
    real_part = x * x / (2.0 * b * (x - b)) + math.pi * x * (ex - 1.0) / (
        emb * (ex - eb)
    )

    a1 = 2.0 * math.pi * (x - b)
    a2 = 2.0 * math.pi * b
    s1inv = 1.0 / math.sinh(a1)
    s2inv = 1.0 / math.sinh(a2)
    # |sinh(a*u)/sinh(a)| <= 1 on [0,1], so the kernel is O(1) by design
    quad = integrate_cot_weighted(
        lambda u: kernels.sinh_ratio_gap(np.asarray(u, dtype=np.float64),
                                         a1, s1inv, a2, s2inv),
        spec,
        scale_hint=2.0,
    )
    imag_part = math.pi * x * quad.value.real
    return real_part, imag_part
