"""Double-factorial series for the normal antiderivative, the normal CDFs and erf.

The central object is the odd power series

    S(x) = sum_{i>=1} x**(2i-1) / (2i-1)!!

whose product with the standard normal density is an antiderivative of that
density:  T(x) = phi(x) * S(x) + c.  Choosing c = 0.5 gives the standard normal
CDF, and substituting sqrt(2)*x gives erf(x) = 2/sqrt(pi) * exp(-x**2) *
sum 2**(i-1) x**(2i-1) / (2i-1)!!.

Terms are produced by the multiplicative recurrence t_{i+1} = t_i * x**2/(2i+1),
so neither the power nor the double factorial is ever formed on its own.

Accuracy note: for x << 0 the CDF is computed as 0.5 - phi(|x|) S(|x|), which
cancels.  Absolute error stays near 1e-16 but relative error in the far left
tail is poor.  Only absolute accuracy is promised.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Union

from .errors import ConvergenceError, DomainError

INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)
TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)

DEFAULT_REL_TOL = 1e-16
DEFAULT_MAX_TERMS = 2000

# Beyond this |x| the CDF is returned as exactly 0 or 1.
SATURATION_CUTOFF = 40.0

# Running terms are rescaled by exp(-_RESCALE_LOG) whenever they pass 2**500, so
# S(x) may exceed the double range while phi(x) * S(x) stays representable.
_RESCALE_LIMIT = 2.0**500
_RESCALE_LOG = 500.0 * math.log(2.0)


@dataclass(frozen=True)
class FixedTerms:
    """Keep exactly ``n`` terms of the series."""

    n: int

    def __post_init__(self):
        n = operator.index(self.n)
        if n < 1:
            raise ValueError(f"FixedTerms needs n >= 1, got {n}")
        object.__setattr__(self, "n", n)


@dataclass(frozen=True)
class Adaptive:
    """Add terms until ``|t_i| <= rel_tol * |S_i|``, giving up after ``max_terms``."""

    rel_tol: float = DEFAULT_REL_TOL
    max_terms: int = DEFAULT_MAX_TERMS

    def __post_init__(self):
        if not (self.rel_tol > 0 and math.isfinite(self.rel_tol)):
            raise ValueError(f"Adaptive needs a finite rel_tol > 0, got {self.rel_tol}")
        max_terms = operator.index(self.max_terms)
        if max_terms < 1:
            raise ValueError(f"Adaptive needs max_terms >= 1, got {max_terms}")
        object.__setattr__(self, "max_terms", max_terms)


TruncationPolicy = Union[FixedTerms, Adaptive]


@dataclass(frozen=True)
class EvalResult:
    """A series evaluation.

    ``last_term_magnitude`` is the absolute size of the last term added, in the
    same units as ``value`` (for T, CDF and erf it includes the Gaussian factor).
    ``terms_used`` is 0 only when the CDF saturates and no series is evaluated.
    """

    value: float
    terms_used: int
    last_term_magnitude: float


@dataclass(frozen=True)
class NormalParams:
    mu: float = 0.0
    sigma: float = 1.0

    def __post_init__(self):
        if not math.isfinite(self.mu):
            raise DomainError(f"mu must be finite, got {self.mu}")
        if not (math.isfinite(self.sigma) and self.sigma > 0):
            raise DomainError(f"sigma must be finite and > 0, got {self.sigma}")

    def standardize(self, x: float) -> float:
        return (x - self.mu) / self.sigma


def _check_finite(x: float, name: str = "x") -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x}")
    return x


def _damped_series(
    x: float, x2: float, damping: float, policy: TruncationPolicy
) -> tuple[float, int, float, bool]:
    """Return ``exp(-damping) * sum t_i`` with t_1 = x, t_{i+1} = t_i * x2/(2i+1).

    Also returns the term count, the last (damped) term and whether an adaptive
    stopping rule was met; fixed policies always report True.

    The exponential factor is folded in lazily: nothing happens unless the
    running term grows past ``_RESCALE_LIMIT``, in which case both the term and
    the partial sum are scaled down and the remaining damping is reduced. The
    stopping rule compares quantities on a common scale, so rescaling does not
    change it.
    """
    if isinstance(policy, FixedTerms):
        budget, rel_tol = policy.n, None
    elif isinstance(policy, Adaptive):
        budget, rel_tol = policy.max_terms, policy.rel_tol
    else:
        raise TypeError(f"not a truncation policy: {policy!r}")

    pending = damping
    term = x
    total = 0.0
    last = 0.0
    i = 0
    converged = True
    while True:
        i += 1
        total += term
        last = term
        if rel_tol is not None and abs(term) <= rel_tol * abs(total):
            break
        if i >= budget:
            converged = rel_tol is None
            break
        term *= x2 / (2 * i + 1)
        if pending > 0.0 and abs(term) > _RESCALE_LIMIT:
            step = min(pending, _RESCALE_LOG)
            factor = math.exp(-step)
            term *= factor
            total *= factor
            pending -= step
    scale = math.exp(-pending) if pending > 0.0 else 1.0
    return total * scale, i, abs(last) * scale, converged


def _run(x, x2, damping, policy, prefactor, what):
    total, used, last, converged = _damped_series(x, x2, damping, policy)
    if not converged:
        partial = EvalResult(prefactor * total, used, prefactor * last)
        raise ConvergenceError(
            f"{what} at x={x!r} did not converge in {used} terms", partial
        ) from None
    return prefactor * total, used, prefactor * last


def phi(x: float) -> float:
    """Standard normal density."""
    x = _check_finite(x)
    return INV_SQRT_2PI * math.exp(-0.5 * x * x)


def phi_general(x: float, p: NormalParams) -> float:
    """Normal density with mean ``p.mu`` and standard deviation ``p.sigma``."""
    x = _check_finite(x)
    z = p.standardize(x)
    return INV_SQRT_2PI / p.sigma * math.exp(-0.5 * z * z)


def series_sum(x: float, policy: TruncationPolicy = Adaptive()) -> EvalResult:
    """Partial sum of ``S(x) = sum x**(2i-1)/(2i-1)!!``.

    S grows like exp(x**2/2), so it overflows a double for |x| above about 37.7;
    that raises ``OverflowError``. Use :func:`antiderivative_T` or the CDFs there,
    which carry the Gaussian factor through the summation.

    Raises
    ------
    ConvergenceError
        An adaptive policy ran out of terms. ``exc.partial`` holds the partial sum.
    """
    x = _check_finite(x)
    value, used, last = _run(x, x * x, 0.0, policy, 1.0, "series_sum")
    if not math.isfinite(value):
        raise OverflowError(f"S({x!r}) overflows double precision")
    return EvalResult(value, used, abs(last))


def antiderivative_T(
    x: float, c: float = 0.0, policy: TruncationPolicy = Adaptive()
) -> EvalResult:
    """Antiderivative of the standard normal density, ``phi(x) * S(x) + c``."""
    x = _check_finite(x)
    c = _check_finite(c, "c")
    x2 = x * x
    value, used, last = _run(x, x2, 0.5 * x2, policy, INV_SQRT_2PI, "antiderivative_T")
    return EvalResult(value + c, used, abs(last))


def std_normal_cdf(x: float, policy: TruncationPolicy = Adaptive()) -> EvalResult:
    """Standard normal CDF as ``phi(x) * S(x) + 0.5``, clamped to [0, 1].

    For |x| > 40 the result saturates to exactly 0 or 1 and no terms are used.
    """
    x = _check_finite(x)
    if x > SATURATION_CUTOFF:
        return EvalResult(1.0, 0, 0.0)
    if x < -SATURATION_CUTOFF:
        return EvalResult(0.0, 0, 0.0)
    x2 = x * x
    value, used, last = _run(x, x2, 0.5 * x2, policy, INV_SQRT_2PI, "std_normal_cdf")
    return EvalResult(min(1.0, max(0.0, value + 0.5)), used, abs(last))


def normal_cdf(
    x: float, p: NormalParams, policy: TruncationPolicy = Adaptive()
) -> EvalResult:
    """CDF of N(mu, sigma**2), evaluated as the standard CDF at (x - mu)/sigma."""
    x = _check_finite(x)
    return std_normal_cdf(p.standardize(x), policy)


def erf_series(x: float, policy: TruncationPolicy = Adaptive()) -> EvalResult:
    """erf(x) from ``2/sqrt(pi) * exp(-x**2) * sum 2**(i-1) x**(2i-1)/(2i-1)!!``.

    The terms follow u_1 = x, u_{i+1} = u_i * 2x**2/(2i+1). The value is clamped
    to [-1, 1].
    """
    x = _check_finite(x)
    x2 = x * x
    value, used, last = _run(x, 2.0 * x2, x2, policy, TWO_OVER_SQRT_PI, "erf_series")
    return EvalResult(min(1.0, max(-1.0, value)), used, abs(last))


def truncated_derivative_residual(x: float, n: int) -> float:
    """``x**(2n) / (2n-1)!!``, the term that survives when the derivative of the
    n-term antiderivative telescopes: T_n'(x) = phi(x) * (1 - residual).
    """
    x = _check_finite(x)
    n = operator.index(n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    x2 = x * x
    r = 1.0
    for i in range(1, n + 1):
        r *= x2 / (2 * i - 1)
    return r
