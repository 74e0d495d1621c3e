"""Exception types shared across the package.

Two failure modes are distinguished: a caller violating a documented
precondition (ContractError) and a request exceeding a configured
desk-scale bound (InputBoundError).  Bound violations are refusals, never
silent truncations.
"""

from __future__ import annotations


class SeymourError(Exception):
    """Base class for all package-specific errors."""


class ContractError(SeymourError):
    """A documented precondition was violated.

    ``clause`` optionally names the failing clause (e.g. "P1", "A3") so
    callers can distinguish which requirement broke.
    """

    def __init__(self, message: str, clause: str | None = None):
        super().__init__(message)
        self.clause = clause


class InputBoundError(SeymourError):
    """The input exceeds a configured enumeration or search bound."""
