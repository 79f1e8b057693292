"""Shared generators and independent oracles for the test suite.

The randomized function family is c*r^t + d/(t-s)^2 with the pole kept
away from every evaluation grid point.  Oracles here are deliberately
independent of the package: plain left-to-right finite sums.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Optional


# ----------------------------------------------------------------------
# Independent finite-sum oracles (aligned endpoints only)
# ----------------------------------------------------------------------


def forward_sum_oracle(f, a: float, count: int, alpha: float) -> float:
    total = 0.0
    for k in range(count):
        total += f(a + k * alpha)
    return alpha * total


def backward_sum_oracle(f, b: float, count: int, beta: float) -> float:
    total = 0.0
    for k in range(count):
        total += f(b - k * beta)
    return beta * total


def symmetric_oracle(f, a: float, b: float, alpha: float, beta: float) -> float:
    """Convex combination of the two finite sums, weights alpha and beta."""
    forward = 0.0
    backward = 0.0
    if alpha > 0.0:
        forward = forward_sum_oracle(f, a, round((b - a) / alpha), alpha)
    if beta > 0.0:
        backward = backward_sum_oracle(f, b, round((b - a) / beta), beta)
    if beta == 0.0:
        return forward
    if alpha == 0.0:
        return backward
    weight = alpha + beta
    return (alpha / weight) * forward + (beta / weight) * backward


# ----------------------------------------------------------------------
# Randomized instances
# ----------------------------------------------------------------------


@dataclass
class Interval:
    a: float
    b: float
    alpha: float
    beta: float  # 0.0 for forward-only instances

    @property
    def k_forward(self) -> int:
        return round((self.b - self.a) / self.alpha)

    @property
    def k_backward(self) -> int:
        return 0 if self.beta == 0.0 else round((self.b - self.a) / self.beta)


def draw_forward_interval(rng: random.Random) -> Interval:
    length = rng.uniform(2.0, 8.0)
    k_min = max(1, math.ceil(length / 4.0))
    k_max = max(k_min, min(16, int(length / 0.5)))
    k1 = rng.randint(k_min, k_max)
    alpha = length / k1
    a = rng.uniform(-3.0, 3.0)
    return Interval(a, a + k1 * alpha, alpha, 0.0)


def draw_symmetric_interval(rng: random.Random) -> Interval:
    length = rng.uniform(2.0, 8.0)
    k_min = max(1, math.ceil(length / 4.0))
    k_max = max(k_min, min(16, int(length / 0.5)))
    k1 = rng.randint(k_min, k_max)
    k2 = rng.randint(k_min, k_max)
    a = rng.uniform(-3.0, 3.0)
    return Interval(a, a + length, length / k1, length / k2)


def _grid_distance(s: float, anchor: float, step: float, forward: bool) -> float:
    """Distance from s to the nearest half-infinite grid point, in step units."""
    offset = (s - anchor) / step if forward else (anchor - s) / step
    if offset < 0.0:
        return -offset
    frac = offset - math.floor(offset)
    return min(frac, 1.0 - frac)


def _off_grid(s: float, iv: Interval, margin: float) -> bool:
    if _grid_distance(s, iv.a, iv.alpha, forward=True) < margin:
        return False
    if iv.beta > 0.0 and _grid_distance(s, iv.b, iv.beta, forward=False) < margin:
        return False
    return True


def draw_pole(rng: random.Random, iv: Interval, margin: float = 0.4) -> float:
    lo = iv.a - 2.0
    hi = iv.b + 2.0 * iv.alpha + 1.0
    for attempt in range(1000):
        if attempt and attempt % 200 == 0:
            margin = max(0.2, margin - 0.05)
        s = rng.uniform(lo, hi)
        if _off_grid(s, iv, margin):
            return s
    raise AssertionError("could not place a pole off the grids")


def make_decay(c: float, r: float, d: float, s: float) -> Callable[[float], float]:
    def f(t: float) -> float:
        return c * r**t + d / ((t - s) * (t - s))

    return f


def make_pole_pair(d1: float, s1: float, d2: float, s2: float) -> Callable[[float], float]:
    def f(t: float) -> float:
        return d1 / ((t - s1) * (t - s1)) + d2 / ((t - s2) * (t - s2))

    return f


def draw_decay_function(
    rng: random.Random, iv: Interval, nonneg: bool = False
) -> Callable[[float], float]:
    if nonneg:
        c = rng.uniform(0.05, 1.0)
        d = rng.uniform(0.05, 1.0)
    else:
        c = rng.uniform(-1.0, 1.0)
        d = rng.uniform(-1.0, 1.0)
    r = rng.uniform(0.4, 0.9)
    return make_decay(c, r, d, draw_pole(rng, iv))


def draw_pole_pair_function(rng: random.Random, iv: Interval) -> Callable[[float], float]:
    """Pole-only decay, strictly summable in both grid directions.

    The two pole weights share a sign so |f| has no interior zero; a
    near-zero dip at a grid point would defeat any ratio-based tail
    estimate and stop the series early.
    """
    sign = rng.choice([-1.0, 1.0])
    d1 = sign * rng.uniform(0.3, 1.0)
    d2 = sign * rng.uniform(0.3, 1.0)
    return make_pole_pair(d1, draw_pole(rng, iv), d2, draw_pole(rng, iv))
