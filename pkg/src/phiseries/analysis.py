"""Truncation experiment: fixed-n erf series against the quadrature oracle.

Default setup follows the original comparison: x on [-2.5, 2.5] and
n = 2, 4, ..., 20 retained terms. The grid step is ours (0.05).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ConvergenceError, DomainError
from .oracle import DEFAULT_SETTINGS, QuadratureSettings, quad_erf
from .series import DEFAULT_MAX_TERMS, FixedTerms, erf_series

DEFAULT_N_VALUES = tuple(range(2, 21, 2))
REL_FLOOR = 1e-8


@dataclass(frozen=True)
class Grid:
    """Evaluation lattice ``lo, lo + step, ...`` up to ``hi``, endpoints included."""

    lo: float = -2.5
    hi: float = 2.5
    step: float = 0.05

    def __post_init__(self):
        for name in ("lo", "hi", "step"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"grid {name} must be finite")
        if not self.lo < self.hi:
            raise DomainError(f"grid needs lo < hi, got [{self.lo}, {self.hi}]")
        if not self.step > 0:
            raise DomainError(f"grid step must be > 0, got {self.step}")

    @property
    def count(self) -> int:
        # The slack absorbs ratios like 5/0.05 = 99.99999999999999.
        return math.floor((self.hi - self.lo) / self.step + 1e-9) + 1

    def points(self) -> list[float]:
        """Grid points in ascending order.

        When the step divides the span, points are spaced as
        ``lo + (hi - lo) * k / (count - 1)``, which hits round values such as
        0 and 1 exactly; otherwise ``lo + k * step``.
        """
        count = self.count
        span = self.hi - self.lo
        if count > 1 and math.isclose((count - 1) * self.step, span, rel_tol=1e-9):
            pts = [self.lo + span * k / (count - 1) for k in range(count)]
            pts[-1] = self.hi
        else:
            pts = [self.lo + k * self.step for k in range(count)]
        return [p + 0.0 for p in pts]  # -0.0 -> 0.0


@dataclass(frozen=True)
class ErrorReport:
    n: int
    max_abs_error: float
    max_rel_error: float
    argmax_x: float


@dataclass(frozen=True)
class ErfTable:
    """Oracle and fixed-n series values at every grid point."""

    xs: list[float]
    oracle: list[float]
    n_values: tuple[int, ...]
    series: dict[int, list[float]]


def erf_table(
    grid, n_values: Sequence[int] = DEFAULT_N_VALUES,
    settings: QuadratureSettings = DEFAULT_SETTINGS,
) -> ErfTable:
    n_values = tuple(n_values)
    if not n_values:
        raise ValueError("n_values must not be empty")
    policies = [FixedTerms(n) for n in n_values]
    xs = grid.points()
    oracle = [quad_erf(x, settings) for x in xs]
    series = {p.n: [erf_series(x, p).value for x in xs] for p in policies}
    return ErfTable(xs, oracle, n_values, series)


def report_from_table(table: ErfTable, n: int, rel_floor: float = REL_FLOOR) -> ErrorReport:
    max_abs = 0.0
    max_rel = 0.0
    argmax = None
    for x, ref, approx in zip(table.xs, table.oracle, table.series[n]):
        err = abs(approx - ref)
        max_abs = max(max_abs, err)
        if abs(ref) >= rel_floor:
            rel = err / abs(ref)
            if argmax is None or rel > max_rel:
                max_rel, argmax = rel, x
    if argmax is None:
        # No point clears the floor (e.g. the grid is just x = 0).
        argmax = table.xs[0]
    return ErrorReport(n, max_abs, max_rel, argmax)


def sweep_erf(
    grid, n_values: Sequence[int] = DEFAULT_N_VALUES,
    rel_floor: float = REL_FLOOR,
    settings: QuadratureSettings = DEFAULT_SETTINGS,
) -> list[ErrorReport]:
    """One :class:`ErrorReport` per n, comparing ``erf_series`` with
    ``FixedTerms(n)`` against ``quad_erf`` on every grid point.

    Relative error is only taken where ``|oracle| >= rel_floor``; points below
    the floor (the zero crossing) count towards the absolute error only.
    """
    table = erf_table(grid, n_values, settings)
    return [report_from_table(table, n, rel_floor) for n in table.n_values]


def required_terms(
    x: float, abs_tol: float, max_terms: int = DEFAULT_MAX_TERMS,
    settings: QuadratureSettings = DEFAULT_SETTINGS,
) -> int:
    """Smallest n with ``|erf_series(x, FixedTerms(n)) - quad_erf(x)| <= abs_tol``.

    Scans n = 1, 2, ... linearly; raises ConvergenceError past ``max_terms``.
    """
    if not abs(x) <= 40.0:
        raise DomainError(f"required_terms needs |x| <= 40, got {x}")
    if not abs_tol > 0:
        raise DomainError(f"abs_tol must be > 0, got {abs_tol}")
    ref = quad_erf(x, settings)
    for n in range(1, max_terms + 1):
        if abs(erf_series(x, FixedTerms(n)).value - ref) <= abs_tol:
            return n
    raise ConvergenceError(f"erf series at x={x!r} needs more than {max_terms} terms")
