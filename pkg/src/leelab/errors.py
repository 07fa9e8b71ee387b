"""Exception types shared across the package."""


class DomainError(ValueError):
    """Parameters lie outside an operation's mathematical domain."""


class CapacityError(RuntimeError):
    """A configured enumeration or search cap would be exceeded."""


class ConstantSearchError(RuntimeError):
    """No constant on the search grid validated all required inequalities."""

    def __init__(self, message: str, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
