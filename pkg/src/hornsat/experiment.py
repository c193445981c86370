"""Monte-Carlo harness: trial batches, grid sweeps, CSV records, scaling fits.

Trial seeds are ``base_seed + trial_index``, so any grid cell can be rerun in
isolation and two sweeps over the same grid and base seed produce identical
records.  The depth h of a trial is aggregated over all trials regardless of
SAT/UNSAT status; the parallel and serial positive-unit solvers run in
``run_to_convergence`` mode here so that h is the convergence depth of unit
propagation (the quantity the mean-field recursion predicts) rather than the
round where a contradiction surfaced.  The GP algorithm has no meaningful
convergence mode past a contradictory frontier, so GP records carry its
stop-at-contradiction round count.

For algo PREDICT the status column records SAT when the recursion terminated
(converged below one pending unit) and NONTERM when it hit the iteration cap;
the recursion does not decide satisfiability.

CSV schema: header ``n,d1,d3,seed,trial,algo,status,h,elapsed_ms``, comma
separated, UTF-8, floats with 17 significant digits, rows in sweep order.
``write_csv`` zeroes elapsed_ms by default so that equal-seed runs are
byte-identical; pass ``timings=True`` to keep wall-clock values.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass, replace
from collections.abc import Iterable, Sequence

import numpy as np

from .errors import DegenerateFitError, InvalidParamsError
from .meanfield import DEFAULT_MAX_ITERS, critical_d1, predict_h
from .randgen import ModelParams, generate
from .solver import SAT, solve_gp, solve_ppur, solve_pur_serial

__all__ = [
    "GP",
    "PPUR",
    "PUR",
    "PREDICT",
    "NONTERM",
    "CONTINUOUS",
    "OFF_CRITICAL",
    "CRITICAL",
    "H_VS_LOG_N",
    "LOG_H_VS_LOG_N",
    "CSV_HEADER",
    "ExperimentRecord",
    "ScalingFit",
    "measure_h",
    "sweep",
    "fit_scaling",
    "classify_regime",
    "write_csv",
    "read_csv",
]

GP = "GP"
PPUR = "PPUR"
PUR = "PUR"
PREDICT = "PREDICT"
ALGOS = (GP, PPUR, PUR, PREDICT)

NONTERM = "NONTERM"

CONTINUOUS = "CONTINUOUS"
OFF_CRITICAL = "OFF_CRITICAL"
CRITICAL = "CRITICAL"

H_VS_LOG_N = "H_VS_LOG_N"
LOG_H_VS_LOG_N = "LOG_H_VS_LOG_N"

CSV_HEADER = "n,d1,d3,seed,trial,algo,status,h,elapsed_ms"


@dataclass(frozen=True)
class ExperimentRecord:
    """One (params, trial, algorithm) run; uniquely keyed by
    (n, d1, d3, seed, trial, algo)."""

    n: int
    d1: float
    d3: float
    seed: int
    trial: int
    algo: str
    status: str
    h: int
    elapsed_ms: float


@dataclass(frozen=True)
class ScalingFit:
    slope: float
    intercept: float
    r_squared: float
    model: str


def _run_trial(params: ModelParams, algo: str, max_iters: int) -> tuple[str, int, float]:
    if algo == PREDICT:
        start = time.perf_counter()
        h, terminated = predict_h(params.n, params.d1, params.d3, max_iters)
        elapsed = time.perf_counter() - start
        return (SAT if terminated else NONTERM), h, elapsed * 1e3
    formula = generate(params)
    start = time.perf_counter()
    if algo == GP:
        outcome = solve_gp(formula, use_optional_step=True)
    elif algo == PPUR:
        outcome = solve_ppur(formula, run_to_convergence=True)
    elif algo == PUR:
        outcome = solve_pur_serial(formula, run_to_convergence=True)
    else:
        raise InvalidParamsError(f"unknown algorithm {algo!r}, expected one of {ALGOS}")
    elapsed = time.perf_counter() - start
    return outcome.status, outcome.rounds, elapsed * 1e3


def measure_h(
    params: ModelParams,
    algo: str,
    trials: int,
    *,
    max_iters: int = DEFAULT_MAX_ITERS,
) -> tuple[float, float, float, list[ExperimentRecord]]:
    """Run ``trials`` generate+solve pairs with seeds seed..seed+trials-1.

    Returns (mean_h, std_h, sat_fraction, records); the mean and population
    standard deviation cover every trial whatever its status.
    """
    if trials < 1:
        raise InvalidParamsError(f"trials must be >= 1, got {trials}")
    if algo not in ALGOS:
        raise InvalidParamsError(f"unknown algorithm {algo!r}, expected one of {ALGOS}")
    records = []
    for trial in range(trials):
        trial_params = replace(params, seed=params.seed + trial)
        status, h, elapsed_ms = _run_trial(trial_params, algo, max_iters)
        records.append(
            ExperimentRecord(
                n=params.n,
                d1=params.d1,
                d3=params.d3,
                seed=trial_params.seed,
                trial=trial,
                algo=algo,
                status=status,
                h=h,
                elapsed_ms=elapsed_ms,
            )
        )
    hs = np.array([r.h for r in records], dtype=float)
    sat_fraction = sum(r.status == SAT for r in records) / trials
    return float(hs.mean()), float(hs.std()), sat_fraction, records


def sweep(
    ns: Sequence[int],
    d1s: Sequence[float],
    d3s: Sequence[float],
    *,
    algo: str,
    trials: int,
    base_seed: int = 0,
    max_iters: int = DEFAULT_MAX_ITERS,
) -> list[ExperimentRecord]:
    """Cross-product run over the grid, records in (n, d1, d3, trial) order.

    Every cell uses trial seeds base_seed..base_seed+trials-1, so cells are
    independent and the sweep can be resumed or subset per cell.
    """
    if not ns or not d1s or not d3s:
        raise InvalidParamsError("grid lists n, d1, d3 must all be non-empty")
    records: list[ExperimentRecord] = []
    for n in ns:
        for d1 in d1s:
            for d3 in d3s:
                params = ModelParams(n=n, d1=d1, d3=d3, seed=base_seed)
                records.extend(measure_h(params, algo, trials, max_iters=max_iters)[3])
    return records


def fit_scaling(points: Iterable[tuple[float, float]], model: str) -> ScalingFit:
    """Ordinary least squares of mean h against ln n.

    H_VS_LOG_N fits mean_h ~ slope*ln(n) + intercept; LOG_H_VS_LOG_N fits
    ln(mean_h) ~ slope*ln(n) + intercept.  Needs >= 3 points with distinct n
    (and positive mean_h for the log-log model).
    """
    pts = list(points)
    if model not in (H_VS_LOG_N, LOG_H_VS_LOG_N):
        raise InvalidParamsError(f"unknown model {model!r}")
    if len(pts) < 3:
        raise DegenerateFitError(f"need at least 3 points, got {len(pts)}")
    xs = np.log([p[0] for p in pts])
    ys = np.array([p[1] for p in pts], dtype=float)
    if model == LOG_H_VS_LOG_N:
        if np.any(ys <= 0):
            raise DegenerateFitError("log-log fit needs strictly positive mean h")
        ys = np.log(ys)
    if np.unique(xs).size < 2:
        raise DegenerateFitError("all abscissae equal after transform")
    slope, intercept = np.polyfit(xs, ys, 1)
    residuals = ys - (slope * xs + intercept)
    centered = ys - ys.mean()
    ss_res = float(residuals @ residuals)
    ss_tot = float(centered @ centered)
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return ScalingFit(float(slope), float(intercept), r_squared, model)


def classify_regime(d1: float, d3: float, epsilon: float) -> str:
    """CONTINUOUS for d3 < 2, else CRITICAL within epsilon of the
    discontinuity and OFF_CRITICAL outside it."""
    if epsilon <= 0:
        raise InvalidParamsError(f"epsilon must be > 0, got {epsilon}")
    if d3 < 2.0:
        return CONTINUOUS
    if abs(d1 - critical_d1(d3)) < epsilon:
        return CRITICAL
    return OFF_CRITICAL


def _fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def write_csv(records: Iterable[ExperimentRecord], path, *, timings: bool = False) -> None:
    """Serialize records; elapsed_ms is written as 0 unless ``timings``."""
    lines = [CSV_HEADER]
    for r in records:
        elapsed = r.elapsed_ms if timings else 0.0
        lines.append(
            ",".join(
                (
                    str(r.n),
                    _fmt_float(r.d1),
                    _fmt_float(r.d3),
                    str(r.seed),
                    str(r.trial),
                    r.algo,
                    r.status,
                    str(r.h),
                    _fmt_float(elapsed),
                )
            )
        )
    text = "\n".join(lines) + "\n"
    if hasattr(path, "write"):
        path.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def read_csv(path) -> list[ExperimentRecord]:
    if hasattr(path, "read"):
        reader = csv.DictReader(path)
        rows = list(reader)
    else:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            rows = list(csv.DictReader(fh))
    records = []
    for row in rows:
        records.append(
            ExperimentRecord(
                n=int(row["n"]),
                d1=float(row["d1"]),
                d3=float(row["d3"]),
                seed=int(row["seed"]),
                trial=int(row["trial"]),
                algo=row["algo"],
                status=row["status"],
                h=int(row["h"]),
                elapsed_ms=float(row["elapsed_ms"]),
            )
        )
    return records
