"""Horn formula representation with a bipartite variable/clause occurrence index.

Literals are nonzero ints: ``v`` is the positive literal of variable ``v``
(1-based), ``-v`` its negation.  A clause is a sequence of literals; a Horn
clause carries at most one positive literal.  Formulas are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    InvalidParamsError,
    NonHornClauseError,
    PartialAssignmentError,
    VariableOutOfRangeError,
)

__all__ = [
    "HornFormula",
    "build_formula",
    "normalize",
    "reduce_to_3cnf",
    "check_assignment",
    "canonical_clause",
]


def canonical_clause(literals: Iterable[int]) -> tuple[int, ...]:
    """Deduplicated literals, positive literal first, then negatives by variable."""
    return tuple(sorted(set(literals), key=lambda lit: (lit < 0, abs(lit))))


class _OccurrenceIndex:
    """CSR occurrence lists: clause ids and in-clause positions per variable,
    split by polarity.  Built once per formula, read-only afterwards."""

    def __init__(self, num_vars: int, lits: np.ndarray, offsets: np.ndarray):
        m = offsets.size - 1
        clause_ids = np.repeat(np.arange(m, dtype=np.int64), np.diff(offsets))
        positions = np.arange(lits.size, dtype=np.int64) - np.repeat(offsets[:-1], np.diff(offsets))
        variables = np.abs(lits)
        for name, mask in (("pos", lits > 0), ("neg", lits < 0)):
            order = np.argsort(variables[mask], kind="stable")
            counts = np.bincount(variables[mask], minlength=num_vars + 1)
            offs = np.zeros(num_vars + 2, dtype=np.int64)
            np.cumsum(counts, out=offs[1:])
            setattr(self, f"{name}_clauses", clause_ids[mask][order])
            setattr(self, f"{name}_positions", positions[mask][order])
            setattr(self, f"{name}_offsets", offs)
        for arr in (self.pos_clauses, self.pos_positions, self.pos_offsets,
                    self.neg_clauses, self.neg_positions, self.neg_offsets):
            arr.setflags(write=False)


class HornFormula:
    """Immutable Horn formula over variables ``1..num_vars``.

    Each (variable, clause) incidence is stored twice: once in the clause's
    literal list and once in the per-variable occurrence index, which maps a
    variable to the ``(clause_id, position)`` pairs where it appears, split by
    polarity (see :meth:`occurrences`).
    """

    __slots__ = ("num_vars", "_lits", "_offsets", "_clauses", "_occ")

    def __init__(self, num_vars: int, clauses: Iterable[Sequence[int]]):
        lits_list: list[int] = []
        offsets = [0]
        for clause in clauses:
            lits_list.extend(clause)
            offsets.append(len(lits_list))
        self._init_flat(
            num_vars,
            np.asarray(lits_list, dtype=np.int64),
            np.asarray(offsets, dtype=np.int64),
        )

    @classmethod
    def _from_flat(cls, num_vars: int, lits: np.ndarray, offsets: np.ndarray) -> "HornFormula":
        self = object.__new__(cls)
        self._init_flat(num_vars, lits, offsets)
        return self

    def _init_flat(self, num_vars: int, lits: np.ndarray, offsets: np.ndarray) -> None:
        if num_vars < 0:
            raise InvalidParamsError("num_vars must be non-negative")
        lits = np.ascontiguousarray(lits, dtype=np.int64)
        offsets = np.ascontiguousarray(offsets, dtype=np.int64)
        if np.any(np.diff(offsets) < 1):
            raise InvalidParamsError("empty clause not allowed in input")
        if lits.size:
            variables = np.abs(lits)
            if np.any(lits == 0):
                raise VariableOutOfRangeError("literal with variable index 0")
            if variables.max(initial=0) > num_vars:
                bad = int(variables.max())
                raise VariableOutOfRangeError(
                    f"variable {bad} exceeds declared count {num_vars}"
                )
            m = offsets.size - 1
            clause_ids = np.repeat(np.arange(m, dtype=np.int64), np.diff(offsets))
            pos_per_clause = np.bincount(clause_ids[lits > 0], minlength=m)
            if np.any(pos_per_clause > 1):
                bad = int(np.flatnonzero(pos_per_clause > 1)[0])
                raise NonHornClauseError(
                    f"clause {bad} has {int(pos_per_clause[bad])} positive literals"
                )
        lits.setflags(write=False)
        offsets.setflags(write=False)
        self.num_vars = num_vars
        self._lits = lits
        self._offsets = offsets
        self._clauses = None
        self._occ = None

    # -- clause access ----------------------------------------------------

    def __len__(self) -> int:
        return self._offsets.size - 1

    def clause(self, i: int) -> tuple[int, ...]:
        lo, hi = self._offsets[i], self._offsets[i + 1]
        return tuple(int(x) for x in self._lits[lo:hi])

    @property
    def clauses(self) -> tuple[tuple[int, ...], ...]:
        """Clauses as literal tuples, materialized lazily."""
        if self._clauses is None:
            if len(self) == 0:
                self._clauses = ()
            else:
                splits = np.split(self._lits, self._offsets[1:-1])
                self._clauses = tuple(tuple(int(x) for x in part) for part in splits)
        return self._clauses

    def __iter__(self):
        return iter(self.clauses)

    @property
    def literal_count(self) -> int:
        """Total number of (clause, literal) incidences."""
        return int(self._lits.size)

    def max_clause_len(self) -> int:
        return int(np.diff(self._offsets).max(initial=0))

    # -- occurrence index --------------------------------------------------

    @property
    def occurrence_index(self) -> _OccurrenceIndex:
        if self._occ is None:
            self._occ = _OccurrenceIndex(self.num_vars, self._lits, self._offsets)
        return self._occ

    def occurrences(self, variable: int) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
        """``(positive, negative)`` lists of ``(clause_id, position)`` for a variable."""
        if not 1 <= variable <= self.num_vars:
            raise VariableOutOfRangeError(f"variable {variable} not in 1..{self.num_vars}")
        occ = self.occurrence_index
        out = []
        for cl, pos, offs in (
            (occ.pos_clauses, occ.pos_positions, occ.pos_offsets),
            (occ.neg_clauses, occ.neg_positions, occ.neg_offsets),
        ):
            lo, hi = offs[variable], offs[variable + 1]
            out.append(list(zip(cl[lo:hi].tolist(), pos[lo:hi].tolist())))
        return out[0], out[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, HornFormula):
            return NotImplemented
        return (
            self.num_vars == other.num_vars
            and np.array_equal(self._offsets, other._offsets)
            and np.array_equal(self._lits, other._lits)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"HornFormula(num_vars={self.num_vars}, clauses={len(self)})"


def build_formula(num_vars: int, clauses: Iterable[Sequence[int]]) -> HornFormula:
    """Validate and index ``clauses`` over variables ``1..num_vars``.

    Raises NonHornClauseError when a clause has two positive literals and
    VariableOutOfRangeError when a literal exceeds the declared count.
    """
    return HornFormula(num_vars, clauses)


def normalize(formula: HornFormula) -> HornFormula:
    """Reduced form: no duplicate clauses, no duplicate literals in a clause.

    Literals are put in canonical order (positive first, then negatives by
    ascending variable), tautological clauses (containing both ``v`` and
    ``-v``) are dropped, and duplicate clauses are removed keeping the first
    occurrence.  Idempotent.
    """
    seen = set()
    kept: list[tuple[int, ...]] = []
    for i in range(len(formula)):
        clause = canonical_clause(formula.clause(i))
        if len(clause) > 1 and clause[0] > 0 and -clause[0] in clause:
            continue  # tautology: the single positive literal also appears negated
        if clause in seen:
            continue
        seen.add(clause)
        kept.append(clause)
    return HornFormula(formula.num_vars, kept)


def reduce_to_3cnf(formula: HornFormula, *, return_mapping: bool = False):
    """Split clauses longer than 3 literals into chained 3-literal clauses.

    A clause of k > 3 literals becomes k-2 clauses over k-3 fresh variables
    appended after ``num_vars``; the positive literal (if any) stays in the
    first piece and the remaining literals are consumed left to right:
    ``(l1 l2 -f1) (f1 l3 -f2) ... (f_{k-3} l_{k-1} l_k)``.  The result is
    satisfiable iff the input is.

    With ``return_mapping=True`` also returns ``{fresh_var: source_clause_id}``.
    """
    next_var = formula.num_vars + 1
    out: list[tuple[int, ...]] = []
    fresh_map: dict[int, int] = {}
    for i in range(len(formula)):
        clause = formula.clause(i)
        if len(clause) <= 3:
            out.append(clause)
            continue
        # positive literal (at most one) leads, negatives keep input order
        lits = sorted(clause, key=lambda lit: lit < 0)
        while len(lits) > 3:
            fresh = next_var
            next_var += 1
            fresh_map[fresh] = i
            out.append((lits[0], lits[1], -fresh))
            lits = [fresh] + lits[2:]
        out.append(tuple(lits))
    reduced = HornFormula(next_var - 1, out)
    if return_mapping:
        return reduced, fresh_map
    return reduced


def _as_bool_array(formula: HornFormula, assignment) -> np.ndarray:
    n = formula.num_vars
    if isinstance(assignment, Mapping):
        missing = [v for v in range(1, n + 1) if v not in assignment]
        if missing:
            raise PartialAssignmentError(f"assignment missing variables {missing[:5]}")
        arr = np.zeros(n + 1, dtype=bool)
        for v in range(1, n + 1):
            arr[v] = bool(assignment[v])
        return arr
    arr = np.asarray(assignment, dtype=bool)
    if arr.shape != (n + 1,):
        raise PartialAssignmentError(
            f"expected array of length num_vars+1 = {n + 1}, got shape {arr.shape}"
        )
    return arr


def check_assignment(formula: HornFormula, assignment) -> bool:
    """True iff every clause contains a satisfied literal.

    ``assignment`` is total: a mapping ``variable -> bool`` or a bool array of
    length ``num_vars + 1`` (slot 0 ignored).
    """
    arr = _as_bool_array(formula, assignment)
    if len(formula) == 0:
        return True
    lits = formula._lits
    sat = np.where(lits > 0, arr[lits.clip(min=0)], ~arr[(-lits).clip(min=0)])
    per_clause = np.logical_or.reduceat(sat, formula._offsets[:-1])
    return bool(per_clause.all())
