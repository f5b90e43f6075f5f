"""Exception hierarchy shared by every layer of the engine."""


class FibredimError(Exception):
    """Base class for all errors raised by this package."""


class DomainMismatchError(FibredimError, TypeError):
    pass


class WrongDomainError(FibredimError, TypeError):
    pass


class ParseError(FibredimError, ValueError):
    """DSL syntax or validation error, with a 1-based document position."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}, column {column})"
        super().__init__(message + where)


class BaseMismatchError(FibredimError, ValueError):
    pass


class IncompatiblePointError(FibredimError, ValueError):
    pass


class InconsistentWitnessError(FibredimError, ValueError):
    pass


class UnsupportedConfigurationError(FibredimError):
    pass


class NotATripletError(FibredimError, ValueError):
    pass


class NotZeroDimensionalError(FibredimError, ValueError):
    pass
