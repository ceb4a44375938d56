"""Holtsmark density S(beta) and field distribution H(beta).

Set HOLTSMARK_NO_NUMBA=1 before import to run the pure-Python kernels.
"""

from ._accel import NUMBA_ENABLED
from .errors import (
    BudgetExceededError,
    DomainError,
    HoltsmarkError,
    NoConvergenceError,
    PoleError,
    PrecisionLossError,
    RangeOverflowError,
)
from .evaluators import (
    SWITCHOVER,
    EvalResult,
    MethodId,
    asymptotic_partial,
    evaluate,
    h_airy_closed,
    h_asymptotic,
    h_auto,
    h_bessel_closed,
    h_series,
    half_line_transform,
    s_airy_closed,
    s_asymptotic,
    s_auto,
    s_bessel_closed,
    s_lee,
    s_series,
    small_series_partial,
)
from .specfun import (
    HypergeometricSpec,
    SeriesControl,
    airy_bi,
    airy_bi_prime,
    bessel_j_frac,
    gamma_real,
    pfq,
    pochhammer,
)

__all__ = [
    "NUMBA_ENABLED",
    "BudgetExceededError",
    "DomainError",
    "HoltsmarkError",
    "NoConvergenceError",
    "PoleError",
    "PrecisionLossError",
    "RangeOverflowError",
    "SWITCHOVER",
    "EvalResult",
    "MethodId",
    "asymptotic_partial",
    "evaluate",
    "h_airy_closed",
    "h_asymptotic",
    "h_auto",
    "h_bessel_closed",
    "h_series",
    "half_line_transform",
    "s_airy_closed",
    "s_asymptotic",
    "s_auto",
    "s_bessel_closed",
    "s_lee",
    "s_series",
    "small_series_partial",
    "HypergeometricSpec",
    "SeriesControl",
    "airy_bi",
    "airy_bi_prime",
    "bessel_j_frac",
    "gamma_real",
    "pfq",
    "pochhammer",
]
