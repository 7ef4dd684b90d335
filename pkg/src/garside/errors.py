"""Exception types and the step budget shared by the search routines."""

from __future__ import annotations

DEFAULT_BUDGET = 2_000_000


class GarsideError(Exception):
    pass


class InputError(GarsideError, ValueError):
    """Malformed input: bad syntax, unknown atom, mismatched structures."""


class MathDomainError(GarsideError, ValueError):
    """Input is well formed but outside an operation's mathematical domain."""


class BudgetExceeded(GarsideError, RuntimeError):
    """A search ran out of steps before reaching a verdict."""


class Budget:
    """Counts search steps and raises :class:`BudgetExceeded` past ``limit``.

    A single instance can be threaded through nested calls so that the whole
    computation shares one allowance.
    """

    def __init__(self, limit: int | None = DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def tick(self, n: int = 1, what: str = "search") -> None:
        self.used += n
        if self.limit is not None and self.used > self.limit:
            raise BudgetExceeded(f"{what}: step budget of {self.limit} exhausted")


def as_budget(budget: Budget | int | None) -> Budget:
    if isinstance(budget, Budget):
        return budget
    if budget is None:
        return Budget()
    return Budget(budget)
