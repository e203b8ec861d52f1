"""Exception types and the small verdict object returned by every checker."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any


class BraceForgeError(Exception):
    """Base class for user-facing errors (bad input, violated preconditions)."""


class BoundExceeded(BraceForgeError):
    pass


class ValidationError(BraceForgeError):
    """Input data violates a structural invariant (not a group, not a brace, ...)."""


class PreconditionError(BraceForgeError):
    """A construction was asked for with arguments that do not satisfy its hypotheses."""


class InternalError(AssertionError):
    """A result guaranteed by a theorem failed to verify. Always a bug, never user error."""


@dataclass(frozen=True)
class Check:
    """Outcome of an exhaustive identity check.

    ``witness`` holds the first failing tuple of element indices when ``ok`` is false.
    """

    ok: bool
    witness: tuple | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def as_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"ok": self.ok}
        if self.witness is not None:
            d["witness"] = [int(x) if not isinstance(x, tuple) else list(x) for x in self.witness]
        if self.detail:
            d["detail"] = self.detail
        return d


def check_equal(lhs, rhs, detail: str = "") -> Check:
    """Compare two index arrays of the same shape; witness is the first differing index."""
    import numpy as np

    bad = np.argwhere(np.asarray(lhs) != np.asarray(rhs))
    if len(bad) == 0:
        return Check(True)
    return Check(False, tuple(int(i) for i in bad[0]), detail)
