"""Exception types shared across the package."""


class InvalidArgument(ValueError):
    """An input violates the shape or consistency requirements of an operation."""


class BudgetExceeded(ValueError):
    """A brute-force construction would exceed its configured size budget."""


class NonIntegralMultiplicity(ArithmeticError):
    """A character inner product was not within tolerance of an integer."""
