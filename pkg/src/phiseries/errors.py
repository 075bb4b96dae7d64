"""Exception types shared by the series, oracle and analysis modules."""

from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .series import EvalResult


class DomainError(ValueError):
    """An argument lies outside the domain of the function (NaN, inf, sigma <= 0)."""


class ConvergenceError(ArithmeticError):
    """A series did not meet its stopping rule within the term budget.

    The partial sum reached when the budget ran out is kept on ``partial``.
    """

    def __init__(self, message: str, partial: EvalResult | None = None):
        super().__init__(message)
        self.partial = partial


class PrecisionError(ArithmeticError):
    """Adaptive quadrature ran out of subdivision depth before reaching tolerance."""

    def __init__(self, message: str, estimate: float | None = None):
        super().__init__(message)
        self.estimate = estimate
