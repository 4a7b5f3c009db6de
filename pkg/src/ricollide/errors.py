"""Exception types raised across the package."""


class RICollideError(Exception):
    """Base class for all package errors."""


class NonHermitianInput(RICollideError, ValueError):
    pass


class BadFactorization(RICollideError, ValueError):
    pass


class DimensionMismatch(RICollideError, ValueError):
    pass


class InvalidState(RICollideError, ValueError):
    pass


class UnequalTemperatures(RICollideError, ValueError):
    """Closed-form result requested while the two baths have different beta."""


class DomainViolation(RICollideError, ValueError):
    """A reduced formula was called outside the parameter manifold it holds on."""


class NoSteadyState(RICollideError):
    """Population dynamics is frozen (eta == 1), so no unique steady state exists."""


class NotConverged(RICollideError):
    def __init__(self, message, steps=None):
        super().__init__(message)
        self.steps = steps


class DiagonalOnly(RICollideError, ValueError):
    pass


class LedgerViolation(RICollideError, AssertionError):
    """Energy bookkeeping failed; indicates an implementation bug."""


class ParseError(RICollideError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ValidationError(RICollideError, ValueError):
    def __init__(self, constraint, message=None):
        super().__init__(message or constraint)
        self.constraint = constraint
