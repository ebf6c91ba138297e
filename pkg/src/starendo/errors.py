"""Package-wide error types."""


class BudgetExceededError(RuntimeError):
    """A computation exceeded its configured resource budget.

    Distinct from ValueError: the request was well-formed, it just asked
    for more work than the caller allowed.
    """
