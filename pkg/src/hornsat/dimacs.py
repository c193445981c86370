"""DIMACS CNF reading and writing, restricted to Horn formulas.

Accepted input: ``c`` comment lines, one ``p cnf <vars> <clauses>`` header,
then one clause per line as nonzero integers terminated by 0.  Output is
canonical: clauses in stored order, the positive literal first, negative
literals by ascending variable.
"""

from __future__ import annotations

from .errors import DimacsSyntaxError, HeaderMismatchError
from .formula import HornFormula, build_formula

__all__ = ["parse_dimacs", "emit_dimacs"]


def parse_dimacs(text: str | bytes) -> HornFormula:
    """Parse DIMACS text into a validated Horn formula."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    num_vars = None
    declared = None
    clauses: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if num_vars is not None:
                raise DimacsSyntaxError(f"line {lineno}: duplicate header")
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise DimacsSyntaxError(f"line {lineno}: bad header {line!r}")
            try:
                num_vars = int(fields[2])
                declared = int(fields[3])
            except ValueError:
                raise DimacsSyntaxError(f"line {lineno}: non-integer header counts") from None
            continue
        if num_vars is None:
            raise DimacsSyntaxError(f"line {lineno}: clause before 'p cnf' header")
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise DimacsSyntaxError(f"line {lineno}: non-integer literal") from None
        if not values or values[-1] != 0:
            raise DimacsSyntaxError(f"line {lineno}: clause line must end with 0")
        literals = values[:-1]
        if not literals:
            raise DimacsSyntaxError(f"line {lineno}: empty clause")
        if 0 in literals:
            raise DimacsSyntaxError(f"line {lineno}: stray 0 inside clause")
        clauses.append(literals)
    if num_vars is None:
        raise DimacsSyntaxError("missing 'p cnf' header")
    if len(clauses) != declared:
        raise HeaderMismatchError(
            f"header declares {declared} clauses, found {len(clauses)}"
        )
    return build_formula(num_vars, clauses)


def emit_dimacs(formula: HornFormula) -> str:
    """Canonical DIMACS text; inverse of parse_dimacs on normalized formulas."""
    out = [f"p cnf {formula.num_vars} {len(formula)}"]
    for i in range(len(formula)):
        lits = sorted(formula.clause(i), key=lambda lit: (lit < 0, abs(lit)))
        out.append(" ".join(str(lit) for lit in lits) + " 0")
    return "\n".join(out) + "\n"
