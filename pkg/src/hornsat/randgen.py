"""Sampler for the random 1-3 Horn model H(n, d1, 0, d3).

An instance is the conjunction of a single negative unit on x1,
``round(d1*n)`` positive unit clauses on distinct variables drawn without
replacement from x2..xn, and ``round(d3*n)`` three-literal clauses drawn
uniformly with replacement from the n(n-1)(n-2)/2 Horn clauses with one
positive literal and three distinct variables.  No length-2 clauses appear
in the input (they only arise during solving).

Sampling uses numpy's PCG64 generator (see RNG_ALGORITHM); for a fixed
(params, seed) the output is bit-identical across runs and machines.  Draw
order: unit variables first, then the 3-clause batch.  With-replacement
duplicates among the 3-clauses are kept; apply ``normalize`` explicitly if
reduced form is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidParamsError
from .formula import HornFormula

__all__ = ["ModelParams", "generate", "sample_three_clauses", "RNG_ALGORITHM"]

RNG_ALGORITHM = "numpy-pcg64"


@dataclass(frozen=True)
class ModelParams:
    """Parameters (n, d1, d3, seed); counts round half-to-even."""

    n: int
    d1: float
    d3: float
    seed: int = 0

    def __post_init__(self):
        if self.n < 3:
            raise InvalidParamsError(f"n must be >= 3, got {self.n}")
        if not 0.0 <= self.d1 < 1.0:
            raise InvalidParamsError(f"d1 must be in [0, 1), got {self.d1}")
        if self.d3 < 0.0:
            raise InvalidParamsError(f"d3 must be >= 0, got {self.d3}")
        if round(self.d1 * self.n) > self.n - 1:
            raise InvalidParamsError(
                f"round(d1*n)={round(self.d1 * self.n)} exceeds the {self.n - 1} "
                "variables available for positive units"
            )
        if self.seed < 0:
            raise InvalidParamsError("seed must be a non-negative integer")

    @property
    def unit_count(self) -> int:
        return round(self.d1 * self.n)

    @property
    def three_clause_count(self) -> int:
        return round(self.d3 * self.n)


def sample_three_clauses(rng: np.random.Generator, n: int, count: int) -> np.ndarray:
    """``count`` rows ``[p, -a, -b]`` with distinct variables, a < b.

    The positive variable is uniform over 1..n and the negative pair uniform
    over the remaining n-1 variables, which makes each of the
    n(n-1)(n-2)/2 clauses equally likely.
    """
    if n < 3:
        raise InvalidParamsError(f"need n >= 3 for three-literal clauses, got {n}")
    pos = rng.integers(1, n + 1, size=count)
    a = rng.integers(1, n + 1, size=count)
    b = rng.integers(1, n + 1, size=count)
    bad = (a == b) | (a == pos) | (b == pos)
    while bad.any():
        idx = np.flatnonzero(bad)
        a[idx] = rng.integers(1, n + 1, size=idx.size)
        b[idx] = rng.integers(1, n + 1, size=idx.size)
        still = (a[idx] == b[idx]) | (a[idx] == pos[idx]) | (b[idx] == pos[idx])
        bad[:] = False
        bad[idx[still]] = True
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    return np.column_stack((pos, -lo, -hi)).astype(np.int64)


def generate(params: ModelParams) -> HornFormula:
    """Draw one instance; clause order is -x1, positive units, 3-clauses."""
    n = params.n
    rng = np.random.Generator(np.random.PCG64(params.seed))
    k1 = params.unit_count
    m3 = params.three_clause_count
    units = rng.choice(n - 1, size=k1, replace=False).astype(np.int64) + 2
    three = sample_three_clauses(rng, n, m3)

    lits = np.empty(1 + k1 + 3 * m3, dtype=np.int64)
    lits[0] = -1
    lits[1 : 1 + k1] = units
    lits[1 + k1 :] = three.ravel()
    lens = np.ones(1 + k1 + m3, dtype=np.int64)
    lens[1 + k1 :] = 3
    offsets = np.zeros(lens.size + 1, dtype=np.int64)
    np.cumsum(lens, out=offsets[1:])
    return HornFormula._from_flat(n, lits, offsets)
