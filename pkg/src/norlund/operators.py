"""Pointwise quantum difference operators and step-grid arithmetic."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .errors import NonFiniteValueError, ZeroStepError

__all__ = [
    "EPS_GRID",
    "GridAlignment",
    "GridDirection",
    "GridSpec",
    "RealFunction",
    "StepPair",
    "backward_difference",
    "forward_difference",
    "grid_align",
    "symmetric_difference",
]

# An evaluable mapping from a real point to a real value.
RealFunction = Callable[[float], float]

# Alignment slack, measured in units of the grid step.  Far above the
# rounding noise of repeated step addition, far below any half-step
# ambiguity.
EPS_GRID = 1e-9


@dataclass(frozen=True)
class StepPair:
    """The step sizes (alpha, beta) of the two-sided calculus.

    Both steps are nonnegative and at least one is positive.  A zero
    step disables that side entirely: no downstream computation ever
    evaluates the function on a zero-weighted grid.
    """

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise ValueError("steps must be finite")
        if self.alpha < 0.0 or self.beta < 0.0:
            raise ValueError(f"steps must be nonnegative, got ({self.alpha!r}, {self.beta!r})")
        if self.alpha + self.beta <= 0.0:
            raise ValueError("at least one of alpha, beta must be positive")


class GridDirection(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


@dataclass(frozen=True)
class GridSpec:
    """Uniform half-infinite grid {anchor + k*step} or {anchor - k*step}, k >= 0."""

    anchor: float
    step: float
    direction: GridDirection = GridDirection.FORWARD

    def __post_init__(self) -> None:
        if not self.step > 0.0:
            raise ZeroStepError(f"grid step must be positive, got {self.step!r}")

    def point(self, k: int) -> float:
        if self.direction is GridDirection.FORWARD:
            return self.anchor + k * self.step
        return self.anchor - k * self.step


@dataclass(frozen=True)
class GridAlignment:
    """Witness that target = anchor +/- k1*step, up to EPS_GRID step units."""

    k1: int
    residual: float

    def to_dict(self) -> dict:
        return {"k1": self.k1, "residual": self.residual}


def _eval_finite(f: RealFunction, t: float) -> float:
    y = float(f(t))
    if not math.isfinite(y):
        raise NonFiniteValueError(t, y)
    return y


def forward_difference(f: RealFunction, t: float, alpha: float) -> float:
    """Forward difference quotient (f(t + alpha) - f(t)) / alpha."""
    if alpha <= 0.0:
        raise ZeroStepError(f"forward step must be positive, got {alpha!r}")
    return (_eval_finite(f, t + alpha) - _eval_finite(f, t)) / alpha


def backward_difference(f: RealFunction, t: float, beta: float) -> float:
    """Backward difference quotient (f(t) - f(t - beta)) / beta."""
    if beta <= 0.0:
        raise ZeroStepError(f"backward step must be positive, got {beta!r}")
    return (_eval_finite(f, t) - _eval_finite(f, t - beta)) / beta


def symmetric_difference(f: RealFunction, t: float, steps: StepPair) -> float:
    """Two-sided quotient (f(t + alpha) - f(t - beta)) / (alpha + beta).

    Reduces to the forward quotient at beta = 0 and to the backward
    quotient at alpha = 0; at alpha = beta = h it is the classical
    symmetric quotient (f(t + h) - f(t - h)) / (2h).
    """
    upper = _eval_finite(f, t + steps.alpha)
    lower = _eval_finite(f, t - steps.beta)
    return (upper - lower) / (steps.alpha + steps.beta)


def grid_align(
    anchor: float,
    target: float,
    step: float,
    direction: GridDirection = GridDirection.FORWARD,
) -> Optional[GridAlignment]:
    """Match target onto the half-infinite grid starting at anchor.

    Returns the step count k1 and the signed residual in step units, or
    None when the target is off-grid (|residual| > EPS_GRID) or behind
    the anchor.  Non-alignment is an ordinary outcome, not an error.
    """
    if step <= 0.0:
        raise ZeroStepError(f"grid step must be positive, got {step!r}")
    if direction is GridDirection.FORWARD:
        ratio = (target - anchor) / step
    else:
        ratio = (anchor - target) / step
    k1 = round(ratio)
    residual = ratio - k1
    if k1 < 0 or abs(residual) > EPS_GRID:
        return None
    return GridAlignment(int(k1), residual)
