"""Exceptions raised by the toolkit. Failed identities are never exceptions: they land in a CheckReport."""


class DomainError(ValueError):
    """Argument outside the domain where an operation is defined (λ = 0 as a divisor, n above a cap, ...)."""


class UnsupportedCombination(ValueError):
    """A CLI option combination that has no meaning (maps to exit code 3)."""
