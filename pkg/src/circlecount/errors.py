"""Shared exception types."""


class BudgetExceeded(RuntimeError):
    """An enumeration or sampling budget would be exceeded."""


class NonConvergent(RuntimeError):
    """An adaptive numerical refinement failed to show decreasing error."""
