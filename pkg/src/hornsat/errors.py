"""Exception types shared across the toolkit."""


class HornSatError(Exception):
    """Base class for all errors raised by this package."""


class NonHornClauseError(HornSatError):
    """A clause contains more than one positive literal."""


class VariableOutOfRangeError(HornSatError):
    """A literal references a variable outside 1..num_vars."""


class PartialAssignmentError(HornSatError):
    """An assignment does not cover every declared variable."""


class InvalidParamsError(HornSatError, ValueError):
    """Parameters outside the documented domain."""


class DomainError(HornSatError, ValueError):
    """Argument outside a function's mathematical domain."""


class NoCriticalPointError(DomainError):
    """No satisfiability discontinuity exists for this clause density."""


class DimacsSyntaxError(HornSatError):
    """Malformed DIMACS input."""


class HeaderMismatchError(DimacsSyntaxError):
    """DIMACS clause count disagrees with the header."""


class DegenerateFitError(HornSatError, ValueError):
    """Not enough usable points for a least-squares fit."""
