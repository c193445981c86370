"""Horn-SAT toolkit.

Formula model and normalization, serial and round-parallel unit-resolution
solvers with depth instrumentation, the random 1-3 Horn instance sampler,
the mean-field depth recursion, and a Monte-Carlo sweep harness.
"""

from .errors import (
    DegenerateFitError,
    DimacsSyntaxError,
    DomainError,
    HeaderMismatchError,
    HornSatError,
    InvalidParamsError,
    NoCriticalPointError,
    NonHornClauseError,
    PartialAssignmentError,
    VariableOutOfRangeError,
)
from .formula import (
    HornFormula,
    build_formula,
    canonical_clause,
    check_assignment,
    normalize,
    reduce_to_3cnf,
)
from .solver import SAT, UNSAT, SolveOutcome, solve_gp, solve_ppur, solve_pur_serial
from .randgen import RNG_ALGORITHM, ModelParams, generate, sample_three_clauses
from .meanfield import (
    DEFAULT_MAX_ITERS,
    MeanFieldState,
    critical_d1,
    flow_at,
    predict_h,
    recursion_step,
)
from .experiment import (
    CSV_HEADER,
    CONTINUOUS,
    CRITICAL,
    GP,
    H_VS_LOG_N,
    LOG_H_VS_LOG_N,
    NONTERM,
    OFF_CRITICAL,
    PPUR,
    PREDICT,
    PUR,
    ExperimentRecord,
    ScalingFit,
    classify_regime,
    fit_scaling,
    measure_h,
    read_csv,
    sweep,
    write_csv,
)
from .dimacs import emit_dimacs, parse_dimacs

__version__ = "0.1.0"
