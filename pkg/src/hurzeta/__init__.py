"""hurzeta: Hurwitz zeta at integer order, its generating function, and the
supporting singular quadrature, with cross-validating convergence scans.

Public surface re-exported here; see the module docstrings for the math.
"""

from .backend import active_backend, using_numba
from .errors import (
    CapacityError,
    ConditioningWarning,
    DivergenceError,
    DomainError,
    EvaluationError,
    HurzetaError,
    IllConditionedError,
    InstabilityWarning,
    RangeOverflowError,
    UnsupportedParameterError,
)
from .genfun import (
    GenFunCase,
    GenFunEval,
    GenFunSeries,
    ProximityFlags,
    classify_case,
    genfun_closed,
    genfun_parts_real_imag,
    genfun_series,
    odd_zeta_integral,
    radius_of_convergence,
    series_coefficient,
    sinh_kernel,
    sinh_kernel_series,
    sinh_series_depth,
    zeta_from_genfun,
)
from .hurwitz import (
    EvalBreakdown,
    ZetaParams,
    bracket_kernel,
    bracket_scale,
    hp_partial_sum,
    hurwitz_series_oracle,
    hurwitz_zeta,
    imag_part_integral,
    real_part_formula,
    zeta_auto,
)
from .quadrature import (
    QuadratureResult,
    QuadratureSpec,
    integrate_cot_weighted,
    integrate_open,
    integrate_oscillatory,
)
from .special_functions import (
    CATALAN,
    EULER_GAMMA,
    PI,
    BernoulliTable,
    bernoulli,
    eulerian_row,
    harmonic_number,
    polylog_nonpos,
)
from .validation import (
    ConvergenceReport,
    fit_rate,
    hp_limit_scan,
    log_asymptotic_scan,
    theorem1_scan,
    zero_integral_scan,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "active_backend",
    "using_numba",
    "HurzetaError",
    "DomainError",
    "UnsupportedParameterError",
    "RangeOverflowError",
    "CapacityError",
    "EvaluationError",
    "DivergenceError",
    "IllConditionedError",
    "ConditioningWarning",
    "InstabilityWarning",
    "QuadratureSpec",
    "QuadratureResult",
    "integrate_open",
    "integrate_cot_weighted",
    "integrate_oscillatory",
    "CATALAN",
    "EULER_GAMMA",
    "PI",
    "BernoulliTable",
    "bernoulli",
    "polylog_nonpos",
    "eulerian_row",
    "harmonic_number",
    "ZetaParams",
    "EvalBreakdown",
    "bracket_kernel",
    "bracket_scale",
    "real_part_formula",
    "imag_part_integral",
    "hurwitz_zeta",
    "hurwitz_series_oracle",
    "hp_partial_sum",
    "zeta_auto",
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
    "sinh_series_depth",
    "zeta_from_genfun",
    "genfun_parts_real_imag",
    "ConvergenceReport",
    "fit_rate",
    "theorem1_scan",
    "zero_integral_scan",
    "log_asymptotic_scan",
    "hp_limit_scan",
]
