"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class BudgetExceeded(RuntimeError):
    """A search ran out of its node-expansion budget.

    This is an inconclusive outcome, never a proof of absence (CLI exit code 3).
    """

    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} node expansions exceeded")
        self.budget = budget
