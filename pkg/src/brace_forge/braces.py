"""Skew left braces (A, ·, ∘):  a∘(b·c) = (a∘b)·a^-1·(a∘c).

The additive group (A, ·) and the multiplicative group (A, ∘) share element
indices and the identity index 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .errors import BoundExceeded, Check, InternalError, PreconditionError, ValidationError, check_equal
from .groups import (HOL_GROUP_BOUND, HOL_ORDER_BOUND, FiniteGroup, HolomorphGroup, Subgroup,
                     automorphisms, cosets, direct_product, holomorph, is_normal, is_regular,
                     isomorphic, regular_subgroups, semidirect_product)
from .rota_baxter import RbOperator, circle_table


class SkewBrace:
    """A skew left brace on element indices 0..n-1."""

    def __init__(self, add_table, circ_table, labels=None, name: str = "A", validate: bool = True):
        self.add = FiniteGroup(add_table, labels, f"{name}(·)", validate=validate)
        self.circ = FiniteGroup(circ_table, self.add.labels, f"{name}(∘)", validate=validate)
        if self.add.order != self.circ.order:
            raise ValidationError("additive and multiplicative tables differ in size")
        self.name = name
        self.labels = self.add.labels
        if validate:
            c = left_brace_check(self.add, self.circ)
            if not c:
                a, b, cc = c.witness
                raise ValidationError(
                    f"{name}: a∘(b·c) = (a∘b)·a^-1·(a∘c) fails at (a, b, c) = "
                    f"({self.labels[a]}, {self.labels[b]}, {self.labels[cc]}) / indices {c.witness}")
        self._lam = None
        self._star = None

    @property
    def order(self) -> int:
        return self.add.order

    @property
    def add_table(self) -> np.ndarray:
        return self.add.table

    @property
    def circ_table(self) -> np.ndarray:
        return self.circ.table

    @property
    def circ_inv(self) -> np.ndarray:
        return self.circ.inv

    @property
    def lam(self) -> np.ndarray:
        """lam[a, b] = λ_a(b) = a^-1 (a∘b)."""
        if self._lam is None:
            a = np.arange(self.order)[:, None]
            self._lam = self.add.table[self.add.inv[a], self.circ.table]
        return self._lam

    @property
    def star(self) -> np.ndarray:
        """star[g, h] = g⋆h = g^-1 (g∘h) h^-1 = λ_g(h) h^-1."""
        if self._star is None:
            h = np.arange(self.order)[None, :]
            self._star = self.add.table[self.lam, self.add.inv[h]]
        return self._star

    def __repr__(self) -> str:
        return f"SkewBrace({self.name!r}, order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, SkewBrace):
            return NotImplemented
        return (np.array_equal(self.add_table, other.add_table)
                and np.array_equal(self.circ_table, other.circ_table))

    def __hash__(self):
        return hash((self.add_table.tobytes(), self.circ_table.tobytes()))


# ---------------------------------------------------------------------------
# axioms


def left_brace_check(add: FiniteGroup, circ: FiniteGroup) -> Check:
    A, C, inv = add.table, circ.table, add.inv
    n = add.order
    for a in range(n):
        lhs = C[a][A]                                   # [b, c]
        rhs = A[A[C[a][:, None], inv[a]], C[a][None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            return Check(False, (a, int(bad[0][0]), int(bad[0][1])))
    return Check(True)


def right_brace_check(add: FiniteGroup, circ: FiniteGroup) -> Check:
    """(b·c)∘a = (b∘a)·a^-1·(c∘a); witness (a, b, c)."""
    A, C, inv = add.table, circ.table, add.inv
    n = add.order
    for a in range(n):
        lhs = C[:, a][A]                                # [b, c]
        rhs = A[A[C[:, a][:, None], inv[a]], C[:, a][None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            return Check(False, (a, int(bad[0][0]), int(bad[0][1])))
    return Check(True)


@dataclass(frozen=True)
class BraceReport:
    left: Check
    right: Check
    trivial: str | None          # "equal" (∘ = ·), "opposite" (x·y = y∘x) or None
    additive_abelian: bool

    @property
    def two_sided(self) -> bool:
        return bool(self.left) and bool(self.right)

    @property
    def is_brace(self) -> bool:
        """Skew left brace with abelian additive group."""
        return bool(self.left) and self.additive_abelian

    @property
    def is_trivial(self) -> bool:
        return self.trivial is not None


def verify_brace(A: SkewBrace | tuple) -> BraceReport:
    if isinstance(A, SkewBrace):
        add, circ = A.add, A.circ
    else:
        add, circ = (x if isinstance(x, FiniteGroup) else FiniteGroup(x, name=nm)
                     for x, nm in zip(A, ("add", "circ")))
    if np.array_equal(add.table, circ.table):
        triv = "equal"
    elif np.array_equal(add.table, circ.table.T):
        triv = "opposite"
    else:
        triv = None
    return BraceReport(left_brace_check(add, circ), right_brace_check(add, circ), triv,
                       add.is_abelian())


# ---------------------------------------------------------------------------
# constructions


def trivial_brace(G: FiniteGroup) -> SkewBrace:
    return SkewBrace(G.table, G.table, G.labels, f"triv({G.name})")


def opposite_brace(G: FiniteGroup) -> SkewBrace:
    """x∘y = y·x."""
    return SkewBrace(G.table, G.table.T, G.labels, f"opp({G.name})")


def brace_from_rb(op: RbOperator, name: str | None = None) -> SkewBrace:
    """G(B) = (G, ·, ∘_B) with x∘_B y = x B(x) y B(x)^-1."""
    if op.weight != 1:
        raise PreconditionError("use brace_from_rb_neg1 for weight -1 operators")
    G = op.group
    return SkewBrace(G.table, circle_table(op), G.labels, name or f"{G.name}(B)")


def brace_from_rb_neg1(op: RbOperator, name: str | None = None) -> SkewBrace:
    """x∘_C y = C(x) y C(x)^-1 x for a weight -1 operator C."""
    if op.weight != -1:
        raise PreconditionError("operator must have weight -1")
    G, C = op.group, op.images
    t = G.table
    x = np.arange(G.order)[:, None]
    y = np.arange(G.order)[None, :]
    circ = t[t[t[C[x], y], G.inv[C[x]]], x]
    return SkewBrace(G.table, circ, G.labels, name or f"{G.name}(C)")


def brace_from_regular_subgroup(hol: HolomorphGroup, H: Subgroup, name: str | None = None) -> SkewBrace:
    """a∘b = a f(b) where (f, a) is the element of H over a."""
    if not is_regular(hol, H):
        raise PreconditionError("subgroup is not regular")
    G = hol.base
    n = G.order
    f_of = np.zeros(n, dtype=np.int64)
    for h in H.members:
        f, a = hol.decode(h)
        f_of[a] = f
    A = np.stack(hol.auts)
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    circ = G.table[a, A[f_of[a], b]]
    return SkewBrace(G.table, circ, G.labels, name or f"{G.name}[H]")


def regular_subgroup_of_brace(A: SkewBrace, hol: HolomorphGroup | None = None) -> tuple[HolomorphGroup, Subgroup]:
    """{(λ_a, a)} inside Hol(A,·)."""
    hol = hol or holomorph(A.add)
    members = [hol.encode(hol.aut_index(A.lam[a]), a) for a in range(A.order)]
    return hol, Subgroup(hol.group, members)


def enumerate_braces(G: FiniteGroup, dedupe: bool = False, max_group_order: int = HOL_GROUP_BOUND,
                     max_hol_order: int = HOL_ORDER_BOUND) -> list[SkewBrace]:
    """One brace with additive group G per regular subgroup of Hol(G)."""
    if G.order > max_group_order:
        raise BoundExceeded(f"enumerate_braces: |G| = {G.order} exceeds bound {max_group_order}")
    hol = holomorph(G, max_hol_order)
    braces = [brace_from_regular_subgroup(hol, H, f"{G.name}#{i}")
              for i, H in enumerate(regular_subgroups(G, max_group_order, max_hol_order, hol))]
    if not dedupe:
        return braces
    reps: list[SkewBrace] = []
    for A in braces:
        if not any(brace_isomorphic(A, R) is not None for R in reps):
            reps.append(A)
    return reps


def semidirect_brace(A: SkewBrace | FiniteGroup, B: SkewBrace | FiniteGroup, beta,
                     name: str | None = None) -> SkewBrace:
    """Additive group A × B, multiplicative group A ⋊_β B.

    (a, b)∘(a', b') = (a · β(b)(a'), b b').  A and B must be trivial braces
    (∘ = ·); plain groups are read as such.
    """
    def base(X):
        if isinstance(X, SkewBrace):
            if not np.array_equal(X.add_table, X.circ_table):
                raise PreconditionError(f"{X.name} is not a trivial brace with ∘ = ·")
            return X.add
        return X

    GA, GB = base(A), base(B)
    add = direct_product(GA, GB)
    circ = semidirect_product(GA, GB, beta)
    return SkewBrace(add.table, circ.table, add.labels, name or f"{GA.name}:{GB.name}")


# ---------------------------------------------------------------------------
# λ map


@dataclass(frozen=True)
class LambdaReport:
    table: np.ndarray = field(repr=False)
    automorphisms: Check          # each λ_a ∈ Aut(G,·); witness (a, b, c)
    homomorphism: Check           # λ_{a∘c} = λ_a λ_c; witness (a, c, b)
    inverse_formula: Check        # λ_a^-1(b) = a^{∘-1} ∘ (ab); witness (a, b)
    circ_inverse_formula: Check   # a^{∘-1} = λ_a^-1(a^-1); witness (a,)
    rb_conjugation: Check | None  # λ_a(b) = B(a) b B(a)^-1 when an operator is supplied

    @property
    def ok(self) -> bool:
        parts = [self.automorphisms, self.homomorphism, self.inverse_formula, self.circ_inverse_formula]
        if self.rb_conjugation is not None:
            parts.append(self.rb_conjugation)
        return all(bool(p) for p in parts)


def lambda_analysis(A: SkewBrace, op: RbOperator | None = None) -> LambdaReport:
    L = A.lam
    T, C = A.add_table, A.circ_table
    n = A.order
    aut = Check(True)
    for a in range(n):
        la = L[a]
        if len(np.unique(la)) != n:
            aut = Check(False, (a, -1, -1), "λ_a not bijective")
            break
        bad = np.argwhere(la[T] != T[la[:, None], la[None, :]])
        if len(bad):
            aut = Check(False, (a, int(bad[0][0]), int(bad[0][1])))
            break
    hom = Check(True)
    for a in range(n):
        bad = np.argwhere(L[C[a]] != L[a][L])       # [c, b]
        if len(bad):
            hom = Check(False, (a, int(bad[0][0]), int(bad[0][1])))
            break
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    linv = C[A.circ_inv[a], T[a, b]]
    inv_ok = check_equal(L[a, linv], np.broadcast_to(b, (n, n)))
    ai = np.arange(n)
    # a^{∘-1} = λ_a^-1(a^-1)  ⇔  λ_a(a^{∘-1}) = a^-1
    circ_inv_ok = check_equal(L[ai, A.circ_inv], A.add.inv)
    rb = None
    if op is not None:
        G, Bm = op.group, op.images
        rb = check_equal(L, T[T[Bm[a], b], G.inv[Bm[a]]])
    return LambdaReport(L, aut, hom, inv_ok, circ_inv_ok, rb)


# ---------------------------------------------------------------------------
# star operation and left series


@dataclass(frozen=True)
class StarReport:
    table: np.ndarray = field(repr=False)
    left_series: list                 # list of frozensets, G = G^1 ⊇ G^2 ⊇ ...
    is_left_star_nilpotent: bool
    rb_formula: Check | None          # g⋆h = [B(g)^-1, h^-1]


def left_series(A: SkewBrace) -> list[frozenset]:
    """G^1 = G, G^{k+1} = additive subgroup generated by {g⋆h : g ∈ G, h ∈ G^k}."""
    S = A.star
    series = [frozenset(range(A.order))]
    while True:
        cur = np.array(sorted(series[-1]))
        gens = np.unique(S[:, cur]).tolist()
        nxt = A.add.closure(gens)._set
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if len(nxt) == 1:
            return series


def star_and_series(A: SkewBrace, op: RbOperator | None = None) -> StarReport:
    series = left_series(A)
    rb = None
    if op is not None:
        G, B = op.group, op.images
        g = np.arange(G.order)[:, None]
        h = np.arange(G.order)[None, :]
        rb = check_equal(A.star, G.comm(G.inv[B[g]], G.inv[h]))
    return StarReport(A.star, series, len(series[-1]) == 1, rb)


# ---------------------------------------------------------------------------
# distinguished subsets


def _center_mask(G: FiniteGroup) -> np.ndarray:
    return np.all(G.table == G.table.T, axis=1)


def socle(A: SkewBrace) -> Subgroup:
    """a central in (A,·) with a∘b = ab for all b."""
    mask = _center_mask(A.add) & np.all(A.circ_table == A.add_table, axis=1)
    return Subgroup(A.add, np.flatnonzero(mask))


def left_center(A: SkewBrace) -> Subgroup:
    """c central in (A,·) with g c = g∘c for all g."""
    mask = _center_mask(A.add) & np.all(A.circ_table == A.add_table, axis=0)
    return Subgroup(A.add, np.flatnonzero(mask))


def annihilator(A: SkewBrace) -> Subgroup:
    return Subgroup(A.add, set(left_center(A).members) & set(socle(A).members))


def _lambda_invariant(A: SkewBrace, I: Iterable[int]) -> bool:
    I = sorted(set(int(i) for i in I))
    s = set(I)
    return all(int(x) in s for x in np.unique(A.lam[:, I]))


def _is_subgroup_of(G: FiniteGroup, I) -> bool:
    s = frozenset(int(i) for i in I)
    return 0 in s and G.closure(s)._set == s


def is_left_ideal(A: SkewBrace, I) -> bool:
    I = list(I)
    return bool(I) and _is_subgroup_of(A.add, I) and _lambda_invariant(A, I)


def is_strong_left_ideal(A: SkewBrace, I) -> bool:
    return is_left_ideal(A, I) and is_normal(A.add, I)


def is_ideal(A: SkewBrace, I) -> bool:
    I = list(I)
    return (is_strong_left_ideal(A, I) and _is_subgroup_of(A.circ, I)
            and is_normal(A.circ, I))


def quotient_brace(A: SkewBrace, I) -> SkewBrace:
    """A/I for an ideal I; cosets labelled by their minimal-index representative."""
    I = sorted(set(int(i) for i in I))
    if not is_ideal(A, I):
        raise PreconditionError("quotient requested by a subset that is not an ideal")
    N = Subgroup(A.add, I)
    cs = cosets(A.add, N)
    where = {x: k for k, c in enumerate(cs) for x in c}
    reps = [c[0] for c in cs]
    add = [[where[A.add.rows[a][b]] for b in reps] for a in reps]
    circ = [[where[A.circ.rows[a][b]] for b in reps] for a in reps]
    labels = [f"{A.labels[r]}I" if r else "I" for r in reps]
    return SkewBrace(add, circ, labels, f"{A.name}/I")


@dataclass(frozen=True)
class InvariantSubsets:
    socle: Subgroup
    left_center: Subgroup
    annihilator: Subgroup


def invariant_subsets(A: SkewBrace) -> InvariantSubsets:
    return InvariantSubsets(socle(A), left_center(A), annihilator(A))


def rb_socle_formula(op: RbOperator) -> frozenset:
    """Z(G) ∩ B^-1[Z(G)]."""
    Z = set(op.group.center().members)
    return frozenset(a for a in Z if int(op.images[a]) in Z)


def rb_left_ideal_criterion(op: RbOperator, I) -> bool:
    """I is a subgroup of (G,·) normalised by Im(B)."""
    G = op.group
    I = sorted(set(int(i) for i in I))
    if not I or not _is_subgroup_of(G, I):
        return False
    s = set(I)
    imB = np.unique(op.images)
    return all(int(x) in s for x in np.unique(G.conj(np.array(I)[:, None], G.inv[imB][None, :])))


def rb_ideal_criterion(A: SkewBrace, I) -> bool:
    """I is a normal subgroup of both (G,∘) and (G,·)."""
    I = list(I)
    return (bool(I) and _is_subgroup_of(A.add, I) and _is_subgroup_of(A.circ, I)
            and is_normal(A.add, I) and is_normal(A.circ, I))


# ---------------------------------------------------------------------------
# λ-homomorphic braces


@dataclass(frozen=True)
class LambdaHomReport:
    is_lambda_homomorphic: bool
    witness: tuple | None
    t1_containment: bool              # {b^-1 λ_a(b)} ⊆ ker λ
    rb_center_criterion: bool | None  # B(ac)^-1 B(a) B(c) ∈ Z(G,·)

    @property
    def consistent(self) -> bool:
        ok = (not self.is_lambda_homomorphic) or self.t1_containment
        if self.rb_center_criterion is not None:
            ok = ok and self.rb_center_criterion == self.is_lambda_homomorphic
        return ok


def is_lambda_homomorphic(A: SkewBrace, op: RbOperator | None = None) -> LambdaHomReport:
    L, T = A.lam, A.add_table
    n = A.order
    witness = None
    for a in range(n):
        bad = np.argwhere(L[T[a]] != L[a][L])           # [c, b]: λ_{ac}(b) vs λ_a λ_c(b)
        if len(bad):
            witness = (a, int(bad[0][0]), int(bad[0][1]))
            break
    kernel = {a for a in range(n) if np.array_equal(L[a], np.arange(n))}
    b = np.arange(n)[None, :]
    comm = T[A.add.inv[b], L]                            # b^-1 λ_a(b)
    t1 = all(int(x) in kernel for x in np.unique(comm))
    rb = None
    if op is not None:
        G, B = op.group, op.images
        Z = set(G.center().members)
        a = np.arange(n)[:, None]
        c = np.arange(n)[None, :]
        vals = G.table[G.table[G.inv[B[T[a, c]]], B[a]], B[c]]
        rb = all(int(x) in Z for x in np.unique(vals))
    return LambdaHomReport(witness is None, witness, t1, rb)


# ---------------------------------------------------------------------------
# two-sided braces and 1-cocycles


@dataclass(frozen=True)
class TwoSidedReport:
    two_sided: Check
    cocycle_law: Check

    @property
    def agree(self) -> bool:
        return bool(self.two_sided) == bool(self.cocycle_law)


def cocycle_law(op: RbOperator) -> Check:
    """ψ_{c^-1}(ab) = ψ_{c^-1}(a)^b ψ_{c^-1}(b) with ψ_g(x) = [B(x)^-1, g]; witness (c, a, b)."""
    G, B = op.group, op.images
    n = G.order
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    for c in range(n):
        g = int(G.inv[c])
        psi = G.comm(G.inv[B], g)                 # ψ_g as an array over x
        lhs = psi[G.table[a, b]]
        rhs = G.table[G.conj(psi[a], b), psi[b]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            return Check(False, (c, int(bad[0][0]), int(bad[0][1])))
    return Check(True)


def two_sided_cocycle_check(op: RbOperator) -> TwoSidedReport:
    A = brace_from_rb(op)
    return TwoSidedReport(right_brace_check(A.add, A.circ), cocycle_law(op))


# ---------------------------------------------------------------------------
# isomorphism


def brace_isomorphisms(A: SkewBrace, A2: SkewBrace, first_only: bool = False):
    """Bijections preserving both products, found among additive isomorphisms."""
    if A.order != A2.order:
        return
    phi0 = isomorphic(A.add, A2.add)
    if phi0 is None:
        return
    C, C2 = A.circ_table, A2.circ_table
    for alpha in automorphisms(A.add, max(24, A.order)):
        phi = phi0[alpha]
        if np.array_equal(phi[C], C2[phi[:, None], phi[None, :]]):
            yield phi
            if first_only:
                return


def brace_isomorphic(A: SkewBrace, A2: SkewBrace) -> np.ndarray | None:
    return next(brace_isomorphisms(A, A2, first_only=True), None)


# ---------------------------------------------------------------------------
# the integer brace a∘b = a + (-1)^a b, checked on a window


def parity_circ(a: int, b: int) -> int:
    return a + (-1) ** (a % 2) * b


def parity_circ_inverse(a: int) -> int:
    return (-1) ** ((a + 1) % 2) * a


def tilde_star(p: tuple[int, int], q: tuple[int, int]) -> tuple[int, int]:
    """(a, b) * (c, d) = (a + (-1)^a c, b + (-1)^a d)."""
    a, b = p
    c, d = q
    s = (-1) ** (a % 2)
    return (a + s * c, b + s * d)


def tilde_general(p, q):
    """(x, y) * (z, t) = (x∘z, y λ_x(t)) with λ_x(t) = -x + x∘t."""
    x, y = p
    z, t = q
    return (parity_circ(x, z), y + (-x + parity_circ(x, t)))


def tilde_inverse(p):
    a, b = p
    s = (-1) ** (a % 2)
    return (-s * a, -s * b)


def splitting_operator_z(p):
    """The splitting operator of G~ = H*L read off the decomposition: B(h*l) = l^{*-1}."""
    x, y = p
    l = (parity_circ(parity_circ_inverse(y), x), 0)
    return tilde_inverse(l)


def printed_splitting_formula(p):
    """Closed form B((g, h)) = ((-1)^{g+1}(h - g), 0) as it appears in the literature."""
    g, h = p
    return ((-1) ** ((g + 1) % 2) * (h - g), 0)


@dataclass
class ParityWindowReport:
    N: int
    checks: dict

    @property
    def ok(self) -> bool:
        return all(bool(c) for c in self.checks.values())


def parity_brace_window(N: int = 50) -> ParityWindowReport:
    """Check the ℤ brace a∘b = a + (-1)^a b and its enveloping RB group on [-N, N]."""
    if N < 2:
        raise PreconditionError("window needs N >= 2")
    R = range(-N, N + 1)
    lim = 3 * N
    checks: dict[str, Check] = {}

    def first_failure(it):
        for w in it:
            return Check(False, w)
        return Check(True)

    def brace_fail():
        for a in R:
            for b in R:
                for c in R:
                    if abs(b + c) > lim:
                        continue
                    ab, ac = parity_circ(a, b), parity_circ(a, c)
                    if max(abs(ab), abs(ac)) > lim:
                        continue
                    if parity_circ(a, b + c) != ab - a + ac:
                        yield (a, b, c)

    checks["left_brace"] = first_failure(brace_fail())
    checks["circ_group"] = first_failure(
        (a, b, c) for a in R for b in R for c in range(-2, 3)
        if parity_circ(parity_circ(a, b), c) != parity_circ(a, parity_circ(b, c)))
    checks["circ_inverse"] = first_failure(
        (a,) for a in R
        if parity_circ(a, parity_circ_inverse(a)) != 0 or parity_circ(parity_circ_inverse(a), a) != 0)
    checks["identity"] = first_failure((b,) for b in R if parity_circ(0, b) != b or parity_circ(b, 0) != b)
    small = range(-min(N, 12), min(N, 12) + 1)
    pairs = [(x, y) for x in small for y in small]
    checks["tilde_product"] = first_failure(
        (p, q) for p in pairs for q in pairs if tilde_star(p, q) != tilde_general(p, q))
    checks["tilde_inverse"] = first_failure(
        (a,) for a in R if tilde_inverse((a, 0)) != (parity_circ_inverse(a), 0)
        or tilde_star((a, 0), tilde_inverse((a, 0))) != (0, 0))
    checks["decomposition"] = first_failure(
        (x, y) for x in R for y in R
        if tilde_star((y, y), ((-1) ** ((y + 1) % 2) * (y - x), 0)) != (x, y)
        or (-1) ** ((y + 1) % 2) * (y - x) != parity_circ(parity_circ_inverse(y), x))

    def rb_fail(B):
        for g in pairs:
            bg = B(g)
            for h in pairs:
                arg = tilde_star(tilde_star(tilde_star(g, bg), h), tilde_inverse(bg))
                if tilde_star(bg, B(h)) != B(arg):
                    yield (g, h)

    checks["splitting_is_rb"] = first_failure(rb_fail(splitting_operator_z))
    checks["printed_formula_matches_splitting"] = first_failure(
        (g, h) for g in R for h in R
        if printed_splitting_formula((g, h)) != splitting_operator_z((g, h)))
    checks["embedding"] = first_failure(
        (g, h) for g in small for h in small
        if tilde_star((0, g), (0, h)) != (0, g + h))
    return ParityWindowReport(N, checks)
