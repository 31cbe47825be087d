"""Exception types shared across the package."""


class UsageError(ValueError):
    """Bad parameters or inputs that violate an operation's preconditions."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search would enumerate more objects than allowed.

    Raised before any work is done; callers shrink the instance or raise the budget.
    """

    def __init__(self, needed: int, budget: int, what: str = "objects"):
        super().__init__(f"enumeration of {needed} {what} exceeds budget {budget}")
        self.needed = needed
        self.budget = budget


class InvariantViolation(RuntimeError):
    """A result contradicts a guarantee that should hold for valid inputs."""
