"""Mean-field engine for the evolution of clause densities.

Densities (d1, d2, d3) count unit, 2- and 3-clauses per remaining variable.
``flow_at`` evaluates the closed-form serial flow at scaled time t, and
``recursion_step`` advances one parallel round: a round of parallel positive
unit resolution corresponds to running the serial process until t equals the
current unit density.  ``predict_h`` iterates the recursion until fewer than
one positive unit clause remains, which is the predicted round count of the
parallel solver on a random instance, and ``critical_d1`` locates the unit
density at which the satisfiability probability jumps (exists for d3 >= 2).

All arithmetic is binary64.  At the critical density the iteration count
grows roughly linearly in n, so ``predict_h`` takes a ``max_iters`` cap
(default 10**7) and reports hitting it instead of looping forever.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InvalidParamsError, NoCriticalPointError

__all__ = [
    "MeanFieldState",
    "flow_at",
    "recursion_step",
    "predict_h",
    "critical_d1",
    "DEFAULT_MAX_ITERS",
]

DEFAULT_MAX_ITERS = 10_000_000


@dataclass(frozen=True)
class MeanFieldState:
    """Scaled variable count and clause densities at the start of a round."""

    n: float
    d1: float
    d2: float
    d3: float


def flow_at(t: float, initial: MeanFieldState) -> MeanFieldState:
    """Serial-flow densities at scaled time t in [0, 1).

    d1(t) = 1 - ((1-d1)/(1-t)) * exp(-(d2*t + d3*t^2)),
    d2(t) = (1-t) * (d2 + 2*d1*d3),  d3(t) = (1-t)^2 * d3,  n(t) = n*(1-t).
    d2(t) is the post-stage density and does not reduce to d2 at t=0.
    """
    if not 0.0 <= t < 1.0:
        raise DomainError(f"t must be in [0, 1), got {t}")
    n, d1, d2, d3 = initial.n, initial.d1, initial.d2, initial.d3
    return MeanFieldState(
        n=n * (1.0 - t),
        d1=1.0 - (1.0 - d1) / (1.0 - t) * math.exp(-(d2 * t + d3 * t * t)),
        d2=(1.0 - t) * (d2 + 2.0 * d1 * d3),
        d3=(1.0 - t) ** 2 * d3,
    )


def recursion_step(state: MeanFieldState) -> MeanFieldState:
    """Advance one parallel round (the serial flow evaluated at t = d1)."""
    n, d1, d2, d3 = state.n, state.d1, state.d2, state.d3
    return MeanFieldState(
        n=n * (1.0 - d1),
        d1=1.0 - math.exp(-d1 * (d2 + d1 * d3)),
        d2=(1.0 - d1) * (d2 + 2.0 * d1 * d3),
        d3=d3 * (1.0 - d1) ** 2,
    )


def predict_h(
    n: float, d1: float, d3: float, max_iters: int = DEFAULT_MAX_ITERS
) -> tuple[int, bool]:
    """Predicted parallel round count on a random instance.

    Iterates the recursion from (n, d1, 0, d3) and returns the number of
    steps applied before d1*n first drops below one (strictly fewer than one
    positive unit clause left), plus a flag that is False when ``max_iters``
    was exhausted first.  h = 0 when d1*n < 1 initially.
    """
    if n < 1:
        raise InvalidParamsError(f"n must be >= 1, got {n}")
    if not 0.0 <= d1 < 1.0:
        raise InvalidParamsError(f"d1 must be in [0, 1), got {d1}")
    if d3 < 0.0:
        raise InvalidParamsError(f"d3 must be >= 0, got {d3}")
    if max_iters < 0:
        raise InvalidParamsError(f"max_iters must be >= 0, got {max_iters}")
    n = float(n)
    d1 = float(d1)
    d2 = 0.0
    d3 = float(d3)
    h = 0
    while d1 * n >= 1.0:
        if h >= max_iters:
            return h, False
        n, d1, d2, d3 = (
            n * (1.0 - d1),
            1.0 - math.exp(-d1 * (d2 + d1 * d3)),
            (1.0 - d1) * (d2 + 2.0 * d1 * d3),
            d3 * (1.0 - d1) ** 2,
        )
        h += 1
    return h, True


def critical_d1(d3: float) -> float:
    """Unit density of the satisfiability discontinuity for d3 >= 2.

    With t0 = (1 - sqrt(1 - 2/d3)) / 2, returns 1 - exp(d3*t0^2) / (2*d3*t0).
    """
    if d3 < 2.0:
        raise NoCriticalPointError(
            f"the satisfiability discontinuity exists only for d3 >= 2, got {d3}"
        )
    t0 = 0.5 * (1.0 - math.sqrt(1.0 - 2.0 / d3))
    return 1.0 - math.exp(d3 * t0 * t0) / (2.0 * d3 * t0)
