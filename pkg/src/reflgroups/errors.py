"""Shared exception types."""


class BudgetExceeded(RuntimeError):
    """An enumeration outgrew its element budget (group too big or infinite)."""


class InvariantViolation(RuntimeError):
    """An internal mathematical identity failed; indicates a bug."""
