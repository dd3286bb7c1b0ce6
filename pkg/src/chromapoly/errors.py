"""Shared exception types."""


class ChromapolyError(Exception):
    """Base class for errors raised by this package."""


class BudgetExceededError(ChromapolyError):
    """An enumeration would exceed the configured operation budget.

    Exceeding the budget is always an error, never a silent approximation.
    """

    def __init__(self, cost: int, budget: int, what: str = "enumeration"):
        self.cost = cost
        self.budget = budget
        super().__init__(f"{what} needs {cost} operations, budget is {budget}")


class NotPolynomialError(ChromapolyError):
    """A coloring property failed the polynomiality audit on the given graph.

    Carries the audit report; callers should fall back to per-k counts.
    """

    def __init__(self, report):
        self.report = report
        super().__init__(f"property failed polynomiality audit: {report.summary()}")
