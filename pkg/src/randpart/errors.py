"""Error types shared across the package and the CLI exit-code mapping."""


class DomainError(ValueError):
    """Input is outside the mathematical domain of an operation (CLI exit 3)."""


class NumericGuardError(ArithmeticError):
    """A numeric evaluation got too close to a singularity (CLI exit 4)."""
