"""Exception hierarchy shared by every layer of the stack.

The CLI maps these onto exit codes (domain error -> 1, bad arguments -> 2)
and the API maps them onto HTTP statuses, so raising the right class here
is part of the external contract.
"""

from __future__ import annotations


class ScoutError(Exception):
    """Base class for all domain errors."""


class ValidationError(ScoutError):
    """A record or structure violates a documented invariant.

    ``locator`` names the first offending record (file/line, id, field)
    so validation failures are always attributable.
    """

    def __init__(self, reason: str, locator: str | None = None):
        self.reason = reason
        self.locator = locator
        super().__init__(f"{locator}: {reason}" if locator else reason)


class EmptyDatasetError(ScoutError):
    """Ingestion accepted zero events."""


class NotFoundError(ScoutError):
    """A referenced player, match, profile or sample does not exist."""


class ArgumentError(ScoutError):
    """Caller supplied an argument outside the documented domain."""


class ConflictError(ScoutError):
    """A write collides with existing state (e.g. duplicate profile name)."""


class UndefinedTrendError(ScoutError):
    """Trend requested on a series too short (or too flat) to define one."""
