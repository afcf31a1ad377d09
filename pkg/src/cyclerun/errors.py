"""Exceptions and the search budget shared by every exact search."""

from __future__ import annotations

import time


class GraphError(ValueError):
    """Malformed graph input (bad vertex, loop, size over cap, bad encoding)."""


class PreconditionError(ValueError):
    """An operation was called outside the domain its contract covers."""


class BudgetExceeded(RuntimeError):
    """A search ran out of wall-clock time or node allowance.

    ``partial`` carries whatever the search had decided before stopping, so
    callers can report an honest "unknown" instead of a wrong answer.
    """

    def __init__(self, message: str = "budget exceeded", partial=None):
        super().__init__(message)
        self.partial = partial


class Finding(RuntimeError):
    """A situation the underlying theorem says cannot happen.

    Raised (or recorded) instead of silently failing, so a run doubles as a
    theorem check. A finding is either a bug here or a counterexample there.
    """

    def __init__(self, message: str, **witness):
        super().__init__(message)
        self.witness = witness


class Budget:
    """Wall-clock plus node-count allowance for one search.

    ``seconds=None`` and ``nodes=None`` mean unlimited. The clock is only
    consulted every ``_CHECK_EVERY`` ticks to keep ``tick`` cheap.
    """

    _CHECK_EVERY = 256

    def __init__(self, seconds: float | None = None, nodes: int | None = None):
        if seconds is not None and seconds <= 0:
            raise ValueError("budget seconds must be positive")
        if nodes is not None and nodes <= 0:
            raise ValueError("budget nodes must be positive")
        self.seconds = seconds
        self.nodes = nodes
        self.used = 0
        self._deadline = None if seconds is None else time.monotonic() + seconds

    @classmethod
    def of(cls, budget: "Budget | float | None") -> "Budget":
        """Coerce ``None`` / a number of seconds / a Budget into a Budget."""
        if isinstance(budget, Budget):
            return budget
        if budget is None:
            return cls()
        return cls(seconds=float(budget))

    def tick(self, count: int = 1) -> None:
        self.used += count
        if self.nodes is not None and self.used > self.nodes:
            raise BudgetExceeded(f"node budget of {self.nodes} exhausted")
        if self._deadline is not None and self.used % self._CHECK_EVERY < count:
            if time.monotonic() > self._deadline:
                raise BudgetExceeded(f"time budget of {self.seconds:g}s exhausted")

    def expired(self) -> bool:
        return self._deadline is not None and time.monotonic() > self._deadline

    @property
    def unlimited(self) -> bool:
        return self.seconds is None and self.nodes is None
