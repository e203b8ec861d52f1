"""The enveloping RB-group of a skew brace.

For a brace (G, ·, ∘) the set G × G with (x, y) * (z, t) = (x∘z, y λ_x(t)) is a
group G~.  H = {(g, g)} and L = {(g, e)} factor it exactly, the splitting operator
B(hl) = l^-1 is Rota–Baxter, and ψ(g) = (e, g) embeds the brace into G~(B).
Pair (x, y) has index x·n + y.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .braces import (SkewBrace, brace_from_rb, is_strong_left_ideal, left_center, left_series)
from .errors import BoundExceeded, Check, InternalError, PreconditionError, check_equal
from .groups import FiniteGroup, Subgroup, is_normal, structure_report
from .rota_baxter import RbOperator, circle_table, is_rb_operator, splitting

TILDE_BOUND = 144


@dataclass
class TildeGroup:
    brace: SkewBrace
    group: FiniteGroup
    operator: RbOperator
    psi: np.ndarray
    H: Subgroup = field(repr=False)
    L: Subgroup = field(repr=False)

    @property
    def n(self) -> int:
        return self.brace.order

    def encode(self, x: int, y: int) -> int:
        return x * self.n + y

    def decode(self, idx: int) -> tuple[int, int]:
        return divmod(int(idx), self.n)


def tilde_table(A: SkewBrace) -> np.ndarray:
    n = A.order
    x = np.arange(n)[:, None, None, None]
    y = np.arange(n)[None, :, None, None]
    z = np.arange(n)[None, None, :, None]
    t = np.arange(n)[None, None, None, :]
    first = A.circ_table[x, z]
    second = A.add_table[y, A.lam[x, t]]
    return (first * n + second).reshape(n * n, n * n)


def build_tilde(A: SkewBrace, max_order: int = TILDE_BOUND) -> TildeGroup:
    n = A.order
    if n * n > max_order:
        raise BoundExceeded(f"build_tilde: |G~| = {n * n} exceeds bound {max_order}")
    labels = [f"({A.labels[x]},{A.labels[y]})" for x in range(n) for y in range(n)]
    G = FiniteGroup(tilde_table(A), labels, f"{A.name}~")
    H = Subgroup(G, [g * n + g for g in range(n)])
    L = Subgroup(G, [g * n for g in range(n)])
    op = splitting(G, H, L)
    # closed form (x, y) ↦ (x^{∘-1}∘y, e)
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    closed = (A.circ_table[A.circ_inv[x], y] * n).reshape(-1)
    if not np.array_equal(closed, op.images):
        raise InternalError("splitting operator disagrees with (x^{∘-1}∘y, e)")
    psi = np.arange(n, dtype=np.int64)
    return TildeGroup(A, G, op, psi, H, L)


@dataclass(frozen=True)
class EmbeddingReport:
    additive: Check          # ψ(g)*ψ(h) = ψ(gh)
    multiplicative: Check    # ψ(g)∘_B ψ(h) = ψ(g∘h)
    injective: bool
    commutator: Check        # [(e,h),(g,e)] = (e, g⋆h), with [a,b] = a^-1 b^-1 a b
    rb_commutator: Check     # [B(ψ(g))^-1, ψ(h)^-1] = ψ(g⋆h)

    @property
    def ok(self) -> bool:
        return all(bool(c) for c in (self.additive, self.multiplicative, self.injective,
                                     self.commutator, self.rb_commutator))

    def as_dict(self) -> dict:
        return {
            "additive": self.additive.as_dict(),
            "multiplicative": self.multiplicative.as_dict(),
            "injective": self.injective,
            "commutator": self.commutator.as_dict(),
            "rb_commutator": self.rb_commutator.as_dict(),
        }


def verify_embedding(A: SkewBrace, T: TildeGroup | None = None) -> EmbeddingReport:
    T = T or build_tilde(A)
    G, psi, n = T.group, T.psi, A.order
    g = np.arange(n)[:, None]
    h = np.arange(n)[None, :]
    additive = check_equal(G.table[psi[g], psi[h]], psi[A.add_table])
    circ = circle_table(T.operator)
    multiplicative = check_equal(circ[psi[g], psi[h]], psi[A.circ_table])
    injective = len(np.unique(psi)) == n
    L = g * n                                   # (g, e)
    commutator = check_equal(G.comm(psi[h], L), psi[A.star])
    Bpsi = T.operator.images[psi]
    rb_commutator = check_equal(G.comm(G.inv[Bpsi[g]], G.inv[psi[h]]), psi[A.star])
    return EmbeddingReport(additive, multiplicative, injective, commutator, rb_commutator)


# ---------------------------------------------------------------------------
# ζ series


def _psi_normal(T: TildeGroup, I) -> bool:
    return is_normal(T.group, [int(T.psi[i]) for i in I])


def _next_zeta(T: TildeGroup, current: frozenset) -> frozenset:
    """{g : [ψ(g), Y] ∈ ψ(current) for every Y in G~}."""
    G = T.group
    N = np.zeros(G.order, dtype=bool)
    N[[int(T.psi[i]) for i in current]] = True
    comms = G.comm(T.psi[:, None], np.arange(G.order)[None, :])
    return frozenset(int(g) for g in np.flatnonzero(np.all(N[comms], axis=1)))


@dataclass(frozen=True)
class ZetaReport:
    series: list                       # frozensets ζ_1 ⊆ ζ_2 ⊆ ...
    is_strong_left_nilpotent: bool
    strong_left_ideals: bool           # each ζ_k is a strong left ideal
    psi_normal: bool                   # each ψ(ζ_k) normal in G~
    nilpotency_consequences: bool | None
    meets_left_center: bool | None

    @property
    def ok(self) -> bool:
        return (self.strong_left_ideals and self.psi_normal
                and self.nilpotency_consequences is not False
                and self.meets_left_center is not False)


def zeta_series(A: SkewBrace, T: TildeGroup | None = None) -> ZetaReport:
    T = T or build_tilde(A)
    n = A.order
    z1 = _next_zeta(T, frozenset({0}))
    if z1 != frozenset(left_center(A).members):
        raise InternalError("ζ_1 computed in G~ differs from the left center")
    series = [z1]
    while True:
        if not (is_strong_left_ideal(A, series[-1]) and _psi_normal(T, series[-1])):
            break
        nxt = _next_zeta(T, series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    ideals = all(is_strong_left_ideal(A, z) for z in series)
    normal = all(_psi_normal(T, z) for z in series)
    nilpotent = len(series[-1]) == n
    consequences = None
    meets = None
    if nilpotent:
        consequences = (len(left_series(A)[-1]) == 1
                        and structure_report(A.add).is_nilpotent)
        zl = set(left_center(A).members)
        meets = True
        for S in A.add.subgroups():
            if S.order > 1 and is_strong_left_ideal(A, S.members) and not (zl & set(S.members)) - {0}:
                meets = False
                break
    return ZetaReport(series, nilpotent, ideals, normal, consequences, meets)


def psi_normality_agrees(A: SkewBrace, T: TildeGroup | None = None) -> Check:
    """ψ(I) ⊴ G~ ⟺ I is a strong left ideal, over all subgroups I of (G,·); witness (members,)."""
    T = T or build_tilde(A)
    for S in A.add.subgroups():
        if _psi_normal(T, S.members) != is_strong_left_ideal(A, S.members):
            return Check(False, (S.members,))
    return Check(True)


# ---------------------------------------------------------------------------
# complete additive groups


def recover_rb_complete(A: SkewBrace, verify: bool = True) -> RbOperator:
    """The operator B with A = G(B), for (G, ·) complete: λ_g is conjugation by B(g)."""
    G = A.add
    if not structure_report(G).is_complete:
        raise PreconditionError(f"additive group of {A.name} is not complete")
    n = G.order
    b = np.arange(n)
    # inner[y] = the map b ↦ y b y^-1
    inner = G.table[G.table[b[:, None], b[None, :]], G.inv[b][:, None]]
    images = np.zeros(n, dtype=np.int64)
    for g in range(n):
        hits = np.flatnonzero(np.all(inner == A.lam[g], axis=1))
        if len(hits) != 1:
            raise InternalError(f"λ_{A.labels[g]} is conjugation by {len(hits)} elements")
        images[g] = hits[0]
    op = RbOperator(G, images, 1)
    if verify:
        if not is_rb_operator(G, images):
            raise InternalError("recovered map is not an RB operator")
        if brace_from_rb(op) != A:
            raise InternalError("recovered operator does not reproduce the brace")
    return op
