"""Exception types shared by every module.

The CLI maps these onto its exit codes, so keep the hierarchy flat.
"""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ResourceBoundError(RuntimeError):
    """A request exceeds a configured enumeration or table bound."""

    def __init__(self, message: str, bound: int):
        super().__init__(message)
        self.bound = bound


class FormulaMismatch(ArithmeticError):
    """Two evaluation routes that must agree produced different values."""
