"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """Raised when an operation would exceed its configured enumeration,
    materialization, or big-integer budget instead of running unbounded."""
