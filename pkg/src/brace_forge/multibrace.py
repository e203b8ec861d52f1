"""Skew left k-braces: a tower of products ∘_0, ..., ∘_k on one set with

    a ∘_i (b ∘_{i-1} c) = (a ∘_i b) ∘_{i-1} a^{∘_{i-1}(-1)} ∘_{i-1} (a ∘_i c).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import Check, InternalError, PreconditionError, ValidationError
from .groups import FiniteGroup
from .rota_baxter import RbOperator, is_rb_operator

MAX_LEVELS = 3


class MultiBrace:
    def __init__(self, tables, labels=None, name: str = "M", validate: bool = True):
        if len(tables) < 2:
            raise ValidationError("a multibrace needs at least two products")
        self.levels = [FiniteGroup(t, labels, f"{name}[{i}]", validate=validate)
                       for i, t in enumerate(tables)]
        if len({g.order for g in self.levels}) != 1:
            raise ValidationError("product tables differ in size")
        self.name = name
        self.labels = self.levels[0].labels
        if validate:
            rep = verify_multibrace(self)
            if not rep.ok:
                i = rep.first_failure
                raise ValidationError(f"level {i} axiom fails at (a, b, c) = {rep.levels[i - 1].witness}")

    @property
    def k(self) -> int:
        return len(self.levels) - 1

    @property
    def order(self) -> int:
        return self.levels[0].order

    @property
    def tables(self) -> list[np.ndarray]:
        return [g.table for g in self.levels]

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiBrace) and len(self.tables) == len(other.tables) and all(
            np.array_equal(a, b) for a, b in zip(self.tables, other.tables))


def level_check(lower: FiniteGroup, upper: FiniteGroup) -> Check:
    """a∘_i(b∘_{i-1}c) = (a∘_i b) ∘_{i-1} a^{∘_{i-1}(-1)} ∘_{i-1} (a∘_i c); witness (a, b, c)."""
    P, U, inv = lower.table, upper.table, lower.inv
    for a in range(lower.order):
        lhs = U[a][P]
        rhs = P[P[U[a][:, None], inv[a]], U[a][None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            return Check(False, (a, int(bad[0][0]), int(bad[0][1])))
    return Check(True)


@dataclass(frozen=True)
class MultiBraceReport:
    levels: list     # Check per i = 1..k

    @property
    def ok(self) -> bool:
        return all(bool(c) for c in self.levels)

    @property
    def first_failure(self) -> int | None:
        for i, c in enumerate(self.levels, start=1):
            if not c:
                return i
        return None


def verify_multibrace(M: MultiBrace | list) -> MultiBraceReport:
    levels = M.levels if isinstance(M, MultiBrace) else [FiniteGroup(t) for t in M]
    return MultiBraceReport([level_check(levels[i - 1], levels[i]) for i in range(1, len(levels))])


def build_multibrace(op: RbOperator, k: int, max_levels: int = MAX_LEVELS) -> MultiBrace:
    """∘_0 = ·, x ∘_{i+1} y = x ∘_i B(x) ∘_i y ∘_i B(x)^{∘_i(-1)}."""
    if op.weight != 1:
        raise PreconditionError("operator must have weight 1")
    if k < 1:
        raise PreconditionError("k must be at least 1")
    if k > max_levels:
        raise PreconditionError(f"k = {k} exceeds the cap {max_levels}")
    G, B = op.group, op.images
    n = G.order
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    cur = G
    tables = [G.table]
    for i in range(k):
        if not is_rb_operator(cur, B):
            raise InternalError(f"B is not Rota–Baxter on level {i}")
        t, inv = cur.table, cur.inv
        nxt = t[t[t[x, B[x]], y], inv[B[x]]]
        tables.append(nxt)
        cur = FiniteGroup(nxt, G.labels, f"{G.name}[{i + 1}]")
    return MultiBrace(tables, G.labels, f"{G.name}(B)^{k}")
