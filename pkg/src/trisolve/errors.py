class DomainError(ValueError):
    """An input is outside the mathematical domain of an operation."""
