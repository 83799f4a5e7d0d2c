"""Exception hierarchy shared by every module.

Each class carries the CLI exit code it maps to.
"""


class PolyholesError(Exception):
    exit_code = 1


class InvalidPolyomino(PolyholesError, ValueError):
    exit_code = 2


class EmptyInput(InvalidPolyomino):
    pass


class Disconnected(InvalidPolyomino):
    pass


class DuplicateCell(InvalidPolyomino):
    pass


class CoordinateOverflow(InvalidPolyomino):
    pass


class ParseError(PolyholesError, ValueError):
    exit_code = 2

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ContractViolation(PolyholesError, AssertionError):
    """A builder produced output that does not meet its tile/hole contract."""

    exit_code = 3


class DomainError(PolyholesError, ValueError):
    exit_code = 4


class BelowDomain(DomainError):
    pass


class ExtensionCapacityExceeded(DomainError):
    pass


class CapExceeded(DomainError):
    pass


class PreconditionViolation(DomainError):
    pass


class InsufficientCensus(DomainError):
    pass


class SearchBudgetExceeded(PolyholesError):
    exit_code = 1


class ConsistencyFailure(PolyholesError, AssertionError):
    exit_code = 5
