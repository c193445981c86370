"""Unit-resolution solvers with round-depth instrumentation.

Three solvers share counter-based clause state (literals remaining per
clause, alive flag, residual literal sum for O(1) survivor lookup):

* ``solve_gp``   -- greedy parallel: every round commits all current unit
  literals, positive and negative.
* ``solve_ppur`` -- parallel positive unit resolution: only positive unit
  clauses feed the frontier; negative units stay inert until satisfied or
  emptied.
* ``solve_pur_serial`` -- the serial baseline: one positive unit clause
  committed per stage, lowest clause id first.

Within a round, satisfied clauses are removed first and their pending
counter decrements are discarded; falsified literals are then struck from
the surviving clauses.  Outcomes are invariant under any processing order
inside a round because the decrements commute.

``rounds`` counts executed commit rounds, including the final round that
uncovers a contradiction (an emptied clause, or a unit demanding the
opposite of an earlier commitment).  For the parallel positive solvers an
optional ``run_to_convergence`` mode keeps propagating after a clause
empties, so the reported depth is the full convergence depth of unit
propagation rather than the round where unsatisfiability surfaced; the
status is UNSAT either way.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .formula import HornFormula

__all__ = ["SAT", "UNSAT", "SolveOutcome", "solve_gp", "solve_ppur", "solve_pur_serial"]

SAT = "SAT"
UNSAT = "UNSAT"


@dataclass(frozen=True)
class SolveOutcome:
    """Result of one solver invocation.

    assignment is a bool array indexed by variable (slot 0 unused), present
    iff status == SAT; unassigned variables are completed to FALSE, so the
    TRUE set of the positive-unit solvers is the minimal model.  work counts
    literal events: every (clause, literal) incidence inspected while its
    clause was still alive.  round_commits holds the frontier size of each
    round (empty for the serial solver, which reports stages in ``rounds``).
    """

    status: str
    assignment: np.ndarray | None
    rounds: int
    work: int
    round_commits: tuple[int, ...] = ()

    @property
    def true_variables(self) -> list[int]:
        if self.assignment is None:
            return []
        return (np.flatnonzero(self.assignment[1:]) + 1).tolist()


def _gather(csr_clauses: np.ndarray, csr_offsets: np.ndarray, vs: np.ndarray):
    """Concatenate the CSR occurrence slices of the variables in ``vs``.

    Returns (clause_ids, lens) where lens[i] is the slice length of vs[i].
    """
    starts = csr_offsets[vs]
    lens = csr_offsets[vs + 1] - starts
    total = int(lens.sum())
    if total == 0:
        return np.empty(0, dtype=np.int64), lens
    cums = np.cumsum(lens)
    idx = np.repeat(starts + lens - cums, lens) + np.arange(total, dtype=np.int64)
    return csr_clauses[idx], lens


def _initial_state(formula: HornFormula):
    m = len(formula)
    remaining = np.diff(formula._offsets).astype(np.int64)
    if m:
        res_sum = np.add.reduceat(formula._lits, formula._offsets[:-1]).astype(np.int64)
    else:
        res_sum = np.zeros(0, dtype=np.int64)
    alive = np.ones(m, dtype=bool)
    return remaining, res_sum, alive


def _solve_rounds(
    formula: HornFormula,
    *,
    positive_only: bool,
    use_optional_step: bool = False,
    run_to_convergence: bool = False,
) -> SolveOutcome:
    occ = formula.occurrence_index
    n = formula.num_vars
    remaining, res_sum, alive = _initial_state(formula)
    assign = np.zeros(n + 1, dtype=np.int8)  # 0 unassigned, 1 TRUE, -1 FALSE
    rounds = 0
    work = 0
    round_commits: list[int] = []
    contradiction = False

    units = res_sum[remaining == 1]
    if positive_only:
        units = units[units > 0]
    frontier = np.unique(units)

    while frontier.size:
        if not positive_only:
            vs = np.abs(frontier)
            signs = np.where(frontier > 0, 1, -1).astype(np.int8)
            both_polarities = np.unique(vs).size < vs.size
            if both_polarities or np.any(assign[vs] * signs < 0):
                rounds += 1
                round_commits.append(int(frontier.size))
                contradiction = True
                break
            if use_optional_step and frontier[-1] < 0:  # sorted: no positive literal
                stale = res_sum[alive & (remaining == 1)]
                if np.any(stale > 0):
                    raise RuntimeError(
                        "internal error: positive unit clause alive at optional stop"
                    )
                break  # satisfiable; no commit round executed
        else:
            vs = frontier
            signs = None

        rounds += 1
        round_commits.append(int(frontier.size))
        if positive_only:
            assign[vs] = 1
            sat_ids, _ = _gather(occ.pos_clauses, occ.pos_offsets, vs)
            strike_ids, strike_lens = _gather(occ.neg_clauses, occ.neg_offsets, vs)
            struck = np.repeat(-vs, strike_lens)
        else:
            assign[vs] = signs
            true_vars = vs[signs > 0]
            false_vars = vs[signs < 0]
            sat_pos, _ = _gather(occ.pos_clauses, occ.pos_offsets, true_vars)
            sat_neg, _ = _gather(occ.neg_clauses, occ.neg_offsets, false_vars)
            sat_ids = np.concatenate((sat_pos, sat_neg))
            hit_neg, lens_n = _gather(occ.neg_clauses, occ.neg_offsets, true_vars)
            hit_pos, lens_p = _gather(occ.pos_clauses, occ.pos_offsets, false_vars)
            strike_ids = np.concatenate((hit_neg, hit_pos))
            struck = np.concatenate((np.repeat(-true_vars, lens_n), np.repeat(false_vars, lens_p)))

        # (i) remove satisfied clauses; their pending decrements are dropped
        work += int(alive[sat_ids].sum())
        alive[sat_ids] = False

        # (ii) strike falsified literals in the clauses still alive
        live = alive[strike_ids]
        work += int(live.sum())
        sid = strike_ids[live]
        np.add.at(remaining, sid, -1)
        np.add.at(res_sum, sid, -struck[live])

        touched = np.unique(sid)
        touched = touched[alive[touched]]
        emptied = touched[remaining[touched] == 0]
        if emptied.size:
            contradiction = True
            if not run_to_convergence:
                break
            alive[emptied] = False

        survivors = res_sum[touched[remaining[touched] == 1]]
        if positive_only:
            survivors = survivors[survivors > 0]
        frontier = np.unique(survivors)

    if contradiction:
        return SolveOutcome(UNSAT, None, rounds, work, tuple(round_commits))
    assignment = assign == 1  # everything uncommitted becomes FALSE
    return SolveOutcome(SAT, assignment, rounds, work, tuple(round_commits))


def solve_gp(formula: HornFormula, use_optional_step: bool = False) -> SolveOutcome:
    """Greedy parallel unit propagation: all unit literals commit each round.

    With ``use_optional_step`` the solver declares SAT as soon as a round's
    frontier carries no positive literal (the all-FALSE completion then
    satisfies every remaining clause); that round is not counted, which makes
    the depth equal to ``solve_ppur`` on satisfiable formulas.
    """
    return _solve_rounds(formula, positive_only=False, use_optional_step=use_optional_step)


def solve_ppur(formula: HornFormula, *, run_to_convergence: bool = False) -> SolveOutcome:
    """Parallel positive unit resolution: only positive units drive rounds.

    On satisfiable formulas the TRUE set is the minimal model.  By default
    the solver stops in the round where a clause runs out of literals; with
    ``run_to_convergence`` it keeps propagating positive units to exhaustion
    and reports that depth instead (status is still UNSAT).
    """
    return _solve_rounds(
        formula, positive_only=True, run_to_convergence=run_to_convergence
    )


def solve_pur_serial(formula: HornFormula, *, run_to_convergence: bool = False) -> SolveOutcome:
    """Serial positive unit resolution: one unit clause per stage.

    Commits the pending positive unit clause with the lowest clause id each
    stage; ``rounds`` in the outcome is the number of stages executed.
    Status agrees with ``solve_ppur``.
    """
    occ = formula.occurrence_index
    n = formula.num_vars
    remaining_arr, res_sum_arr, _ = _initial_state(formula)
    remaining = remaining_arr.tolist()
    res_sum = res_sum_arr.tolist()
    alive = [True] * len(formula)
    assign = np.zeros(n + 1, dtype=np.int8)

    pos_cl = occ.pos_clauses.tolist()
    pos_off = occ.pos_offsets.tolist()
    neg_cl = occ.neg_clauses.tolist()
    neg_off = occ.neg_offsets.tolist()

    pool = [c for c in range(len(formula)) if remaining[c] == 1 and res_sum[c] > 0]
    heapq.heapify(pool)
    stages = 0
    work = 0
    contradiction = False

    while pool:
        c = heapq.heappop(pool)
        if not alive[c]:
            continue
        v = res_sum[c]
        stages += 1
        assign[v] = 1
        for cid in pos_cl[pos_off[v]:pos_off[v + 1]]:
            if alive[cid]:
                work += 1
                alive[cid] = False
        stop = False
        for cid in neg_cl[neg_off[v]:neg_off[v + 1]]:
            if not alive[cid]:
                continue
            work += 1
            remaining[cid] -= 1
            res_sum[cid] += v
            if remaining[cid] == 0:
                contradiction = True
                if not run_to_convergence:
                    stop = True
                    break
                alive[cid] = False
            elif remaining[cid] == 1 and res_sum[cid] > 0:
                heapq.heappush(pool, cid)
        if stop:
            break

    if contradiction:
        return SolveOutcome(UNSAT, None, stages, work)
    return SolveOutcome(SAT, assign == 1, stages, work)
