"""Exception classes shared by every module of the package."""


class ParamDiscError(Exception):
    """Base class for all errors raised by paramdisc."""


class DomainError(ParamDiscError, ValueError):
    """Operation called outside its mathematical domain (zero input, tag mismatch, ...)."""


class ValidationError(ParamDiscError, ValueError):
    """Malformed or inconsistent user input (matrix entries, documents)."""


class NumericError(ParamDiscError, ArithmeticError):
    """An iterative numeric routine failed to converge."""

    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = residuals


class CapabilityError(ParamDiscError):
    """A configured search or size bound was exceeded."""


class InternalFault(ParamDiscError, RuntimeError):
    """A condition that theory rules out was observed (e.g. an inexact exact division)."""
