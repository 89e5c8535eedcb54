"""Exception types shared across the package."""


class CardanoError(Exception):
    """Base class for all errors raised by gencardano."""


class DomainError(CardanoError, ValueError):
    """Argument outside the domain where an operation is defined."""


class NonConvergence(CardanoError, ArithmeticError):
    """Iterative root finder hit its iteration cap."""


class InconsistentInput(CardanoError, ArithmeticError):
    """Numerical pathology in the Ferrari reduction."""
