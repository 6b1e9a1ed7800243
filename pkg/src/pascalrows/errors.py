"""Error types shared across the package."""


class ResourceLimitError(RuntimeError):
    """An input exceeds a deliberate size guard (enumeration, row length, matrix size)."""


class BudgetExceededError(ResourceLimitError):
    """Formula generation ran out of its work budget.

    Carries a partial-progress report so the caller can see how far
    generation got before the budget ran out.
    """

    def __init__(self, message, completed=(), pending=None, units_used=0, budget=0):
        super().__init__(message)
        self.completed = tuple(completed)
        self.pending = pending
        self.units_used = units_used
        self.budget = budget
