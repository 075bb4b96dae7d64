"""Normal antiderivative, normal CDFs and erf from the double-factorial series."""

from .errors import ConvergenceError, DomainError, PrecisionError
from .series import (
    Adaptive,
    EvalResult,
    FixedTerms,
    NormalParams,
    TruncationPolicy,
    antiderivative_T,
    erf_series,
    normal_cdf,
    phi,
    phi_general,
    series_sum,
    std_normal_cdf,
    truncated_derivative_residual,
)
from .oracle import QuadratureSettings, quad_erf, quad_std_normal_cdf
from .analysis import ErrorReport, Grid, required_terms, sweep_erf

__version__ = "0.1.0"
