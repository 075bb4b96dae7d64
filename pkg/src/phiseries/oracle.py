"""Reference values for the normal CDF and erf by adaptive Simpson quadrature.

Both functions integrate their defining densities from 0 to |x| and restore the
sign afterwards, so results are exactly odd about their centre (0.5 for the
CDF, 0 for erf). Nothing here touches the series code; the tests treat these
as ground truth.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

from .errors import DomainError, PrecisionError


@dataclass(frozen=True)
class QuadratureSettings:
    abs_tol: float = 1e-13
    max_depth: int = 50

    def __post_init__(self):
        if not (self.abs_tol > 0 and math.isfinite(self.abs_tol)):
            raise ValueError(f"abs_tol must be finite and > 0, got {self.abs_tol}")
        depth = operator.index(self.max_depth)
        if depth < 1:
            raise ValueError(f"max_depth must be >= 1, got {depth}")
        object.__setattr__(self, "max_depth", depth)


DEFAULT_SETTINGS = QuadratureSettings()


def adaptive_simpson(f, a: float, b: float, abs_tol: float, max_depth: int) -> float:
    """Integrate ``f`` over [a, b] to an estimated absolute error of ``abs_tol``.

    Each panel is accepted when the two-half Simpson estimate differs from the
    one-panel estimate by at most 15 * (its share of the tolerance); the
    accepted value carries the Richardson correction ``(fine - coarse)/15``.
    The tolerance is halved with each split, so the per-panel estimates sum to
    at most ``abs_tol``.

    Raises
    ------
    PrecisionError
        A panel still fails the test at ``max_depth`` splits.
    """
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _refine(f, a, b, fa, fm, fb, whole, abs_tol, max_depth)


def _refine(f, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole
    if abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    if depth <= 1:
        raise PrecisionError(
            f"adaptive Simpson did not reach tolerance on [{a!r}, {b!r}]",
            estimate=left + right,
        )
    half = 0.5 * tol
    return _refine(f, a, m, fa, flm, fm, left, half, depth - 1) + _refine(
        f, m, b, fm, frm, fb, right, half, depth - 1
    )


def _normal_density(z: float) -> float:
    return math.exp(-0.5 * z * z) / math.sqrt(2.0 * math.pi)


def _gauss(t: float) -> float:
    return math.exp(-t * t)


def _finite(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"x must be finite, got {x}")
    return x


def quad_std_normal_cdf(x: float, s: QuadratureSettings = DEFAULT_SETTINGS) -> float:
    """Phi(x) = 0.5 + integral of the standard normal density over [0, x]."""
    x = _finite(x)
    if x == 0.0:
        return 0.5
    area = adaptive_simpson(_normal_density, 0.0, abs(x), s.abs_tol, s.max_depth)
    value = 0.5 + area if x > 0 else 0.5 - area
    return min(1.0, max(0.0, value))


def quad_erf(x: float, s: QuadratureSettings = DEFAULT_SETTINGS) -> float:
    """erf(x) = 2/sqrt(pi) * integral of exp(-t**2) over [0, x]."""
    x = _finite(x)
    if x == 0.0:
        return 0.0
    scale = 2.0 / math.sqrt(math.pi)
    # The tolerance applies to erf, not to the bare integral.
    area = scale * adaptive_simpson(_gauss, 0.0, abs(x), s.abs_tol / scale, s.max_depth)
    area = min(1.0, area)
    return area if x > 0 else -area
