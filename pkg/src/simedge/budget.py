"""Node budgets for the exhaustive searches.

Every complete search in the package counts backtrack nodes against a budget
and raises instead of silently reporting "absent"; a nonexistence answer is
only ever produced by a search that actually finished.
"""
from __future__ import annotations

from .errors import SearchBudgetExceeded

DEFAULT_SEARCH_BUDGET = 100_000_000


class BudgetCounter:
    __slots__ = ("limit", "used", "label")

    def __init__(self, limit: int | None = None, label: str = "search"):
        self.limit = DEFAULT_SEARCH_BUDGET if limit is None else limit
        self.used = 0
        self.label = label

    def spend(self, amount: int = 1) -> None:
        self.used += amount
        if self.used > self.limit:
            raise SearchBudgetExceeded(
                f"{self.label}: exceeded budget of {self.limit} nodes"
            )
