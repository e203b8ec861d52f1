"""Finite groups as multiplication tables over element indices.

Every group keeps its identity at index 0.  Conventions used throughout the
package::

    conj(a, b) = a^b   = b^-1 a b
    comm(a, b) = [a,b] = a^-1 b^-1 a b

so that ``y x = x y [y, x]`` holds.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import BoundExceeded, Check, PreconditionError, ValidationError

AUT_BOUND = 24
HOL_GROUP_BOUND = 8
HOL_ORDER_BOUND = 400


# ---------------------------------------------------------------------------
# table validation


@dataclass(frozen=True)
class TableDiagnostics:
    ok: bool
    axiom: str | None = None
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok

    @property
    def message(self) -> str:
        if self.ok:
            return "group table ok"
        return f"{self.axiom} fails at {self.witness}"


def verify_group_table(table) -> TableDiagnostics:
    """Report the first violated group axiom of ``table`` (identity expected at 0).

    Axioms are tested in the order closure, associativity, identity, inverse.
    """
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        return TableDiagnostics(False, "shape", tuple(t.shape))
    n = t.shape[0]
    if not np.issubdtype(t.dtype, np.integer):
        return TableDiagnostics(False, "closure", ("non-integer entries",))
    bad = np.argwhere((t < 0) | (t >= n))
    if len(bad):
        return TableDiagnostics(False, "closure", tuple(int(i) for i in bad[0]))
    # chunked over the first argument to keep memory flat for the larger holomorphs
    for a in range(n):
        left = t[t[a]]            # (a*b)*c  indexed [b, c]
        right = t[a][t]           # a*(b*c)
        diff = np.argwhere(left != right)
        if len(diff):
            b, c = diff[0]
            return TableDiagnostics(False, "associativity", (a, int(b), int(c)))
    ar = np.arange(n)
    bad = np.flatnonzero((t[0] != ar) | (t[:, 0] != ar))
    if len(bad):
        return TableDiagnostics(False, "identity", (int(bad[0]),))
    for a in range(n):
        right = np.flatnonzero(t[a] == 0)
        if len(right) != 1 or t[right[0], a] != 0:
            return TableDiagnostics(False, "inverse", (a,))
    return TableDiagnostics(True)


# ---------------------------------------------------------------------------
# the group type


class FiniteGroup:
    """A finite group given by its Cayley table.

    ``table[a, b]`` is the index of ``a*b``.  The table is validated on
    construction unless ``validate=False`` (used by constructors whose output is
    correct by design and re-checked in the test-suite).
    """

    def __init__(self, table, labels: Sequence[str] | None = None, name: str = "G",
                 validate: bool = True):
        t = np.array(table, dtype=np.int64)
        if validate:
            diag = verify_group_table(t)
            if not diag:
                raise ValidationError(f"{name}: {diag.message}")
        t.setflags(write=False)
        self.table = t
        self.order = int(t.shape[0])
        self.name = name
        if labels is None:
            labels = [str(i) for i in range(self.order)]
        if len(labels) != self.order:
            raise ValidationError(f"{name}: {len(labels)} labels for order {self.order}")
        self.labels = [str(x) for x in labels]
        inv = np.argmax(t == 0, axis=1).astype(np.int64)
        inv.setflags(write=False)
        self.inv = inv
        self.rows = t.tolist()
        self._cache: dict = {}

    # -- element arithmetic (all accept numpy index arrays too) --

    def mul(self, a, b):
        return self.table[a, b]

    def inverse(self, a):
        return self.inv[a]

    def conj(self, a, b):
        """a^b = b^-1 a b."""
        t = self.table
        return t[t[self.inv[b], a], b]

    def comm(self, a, b):
        """[a, b] = a^-1 b^-1 a b."""
        t, i = self.table, self.inv
        return t[t[i[a], i[b]], t[a, b]]

    def prod(self, *elements):
        r = 0
        for x in elements:
            r = self.rows[r][x]
        return r

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = int(self.inv[a]), -k
        r = 0
        for _ in range(k):
            r = self.rows[r][a]
        return r

    @property
    def element_orders(self) -> np.ndarray:
        if "orders" not in self._cache:
            orders = np.zeros(self.order, dtype=np.int64)
            for a in range(self.order):
                x, k = a, 1
                while x != 0:
                    x = self.rows[x][a]
                    k += 1
                orders[a] = k
            self._cache["orders"] = orders
        return self._cache["orders"]

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"{self.name} has no element labelled {label!r}") from None

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash(self.table.tobytes())

    # -- structural predicates --

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def closure(self, elements: Iterable[int]) -> "Subgroup":
        return Subgroup(self, _closure(self.rows, elements))

    def center(self) -> "Subgroup":
        t = self.table
        members = [a for a in range(self.order) if np.array_equal(t[a], t[:, a])]
        return Subgroup(self, frozenset(members))

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, frozenset([0]))

    def whole(self) -> "Subgroup":
        return Subgroup(self, frozenset(range(self.order)))

    def subgroups(self) -> list["Subgroup"]:
        """All subgroups, sorted by (order, members)."""
        if "subgroups" not in self._cache:
            found = {frozenset([0])}
            frontier = [frozenset([0])]
            while frontier:
                nxt = []
                for s in frontier:
                    for g in range(self.order):
                        if g in s:
                            continue
                        c = _closure(self.rows, itertools.chain(s, [g]))
                        if c not in found:
                            found.add(c)
                            nxt.append(c)
                frontier = nxt
            subs = [Subgroup(self, s) for s in found]
            subs.sort(key=lambda s: (s.order, s.members))
            self._cache["subgroups"] = subs
        return list(self._cache["subgroups"])

    def generating_set(self) -> list[int]:
        """Greedy small generating set: repeatedly add the highest-order element not yet covered."""
        if "gens" not in self._cache:
            orders = self.element_orders
            by_order = sorted(range(1, self.order), key=lambda a: (-orders[a], a))
            gens: list[int] = []
            cur = frozenset([0])
            for a in by_order:
                if len(cur) == self.order:
                    break
                if a not in cur:
                    gens.append(a)
                    cur = _closure(self.rows, gens)
            self._cache["gens"] = gens
        return list(self._cache["gens"])

    def relabel(self, perm: Sequence[int], name: str | None = None) -> "FiniteGroup":
        """Group with element ``perm[i]`` of the new group playing the role of ``i`` here.

        ``perm[0]`` must be 0.
        """
        p = np.asarray(perm, dtype=np.int64)
        if p[0] != 0 or sorted(p.tolist()) != list(range(self.order)):
            raise ValidationError("relabelling must be a permutation fixing 0")
        q = np.argsort(p)
        new = p[self.table[q][:, q]]
        labels = [self.labels[int(i)] for i in q]
        return FiniteGroup(new, labels, name or self.name)


def _closure(rows, elements: Iterable[int]) -> frozenset:
    gens = sorted(set(int(x) for x in elements) - {0})
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        r = rows[x]
        for g in gens:
            y = r[g]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return frozenset(seen)


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup = field(compare=False, repr=False)
    members: tuple

    def __init__(self, parent: FiniteGroup, members: Iterable[int]):
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "members", tuple(sorted(int(m) for m in members)))

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, a) -> bool:
        return int(a) in self._set

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    @property
    def _set(self) -> frozenset:
        s = self.__dict__.get("_s")
        if s is None:
            s = frozenset(self.members)
            object.__setattr__(self, "_s", s)
        return s

    def is_subgroup(self) -> bool:
        if 0 not in self._set:
            return False
        return _closure(self.parent.rows, self.members) == self._set

    def is_normal(self) -> bool:
        return is_normal(self.parent, self.members)

    def as_group(self, name: str | None = None) -> FiniteGroup:
        idx = {m: i for i, m in enumerate(self.members)}
        t = [[idx[self.parent.rows[a][b]] for b in self.members] for a in self.members]
        return FiniteGroup(t, [self.parent.labels[m] for m in self.members],
                           name or f"sub({self.parent.name})")

    def labels(self) -> list[str]:
        return [self.parent.labels[m] for m in self.members]


# ---------------------------------------------------------------------------
# subgroup operations


def closure(G: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    elements = list(elements)
    if not elements:
        raise PreconditionError("closure of an empty set")
    return G.closure(elements)


def is_normal(G: FiniteGroup, members: Iterable[int]) -> bool:
    s = frozenset(int(m) for m in members)
    arr = np.fromiter(s, dtype=np.int64)
    for g in range(G.order):
        if not all(int(x) in s for x in G.conj(arr, g)):
            return False
    return True


def cosets(G: FiniteGroup, N: Subgroup) -> list[tuple[int, ...]]:
    """Left cosets gN sorted by their minimal element."""
    seen: set[int] = set()
    out = []
    for g in range(G.order):
        if g in seen:
            continue
        c = tuple(sorted(G.rows[g][n] for n in N.members))
        seen.update(c)
        out.append(c)
    return out


def quotient(G: FiniteGroup, N: Subgroup) -> FiniteGroup:
    """G/N with cosets labelled by their minimal-index representative."""
    if not is_normal(G, N.members):
        raise PreconditionError(f"{N.labels()} is not normal in {G.name}")
    cs = cosets(G, N)
    where = {}
    for i, c in enumerate(cs):
        for x in c:
            where[x] = i
    t = [[where[G.rows[a[0]][b[0]]] for b in cs] for a in cs]
    labels = [f"{G.labels[c[0]]}N" if c[0] else "N" for c in cs]
    return FiniteGroup(t, labels, f"{G.name}/N")


def derived_subgroup(G: FiniteGroup, H: Subgroup | None = None, K: Subgroup | None = None) -> Subgroup:
    """[H, K], the subgroup generated by all commutators (default H = K = G)."""
    H = H or G.whole()
    K = K or G.whole()
    h = np.array(H.members)[:, None]
    k = np.array(K.members)[None, :]
    return G.closure(np.unique(G.comm(h, k)).tolist())


def exact_factorizations(G: FiniteGroup, max_order: int = AUT_BOUND) -> list[tuple[Subgroup, Subgroup]]:
    """All ordered pairs (H, L) of subgroups with HL = G and H ∩ L = {e}."""
    if G.order > max_order:
        raise BoundExceeded(f"|G| = {G.order} exceeds bound {max_order}")
    subs = G.subgroups()
    out = []
    for H in subs:
        for L in subs:
            if H.order * L.order == G.order and set(H.members) & set(L.members) == {0}:
                out.append((H, L))
    return out


# ---------------------------------------------------------------------------
# structure


@dataclass(frozen=True)
class StructureReport:
    is_abelian: bool
    is_nilpotent: bool
    is_solvable: bool
    is_metabelian: bool
    center: Subgroup
    is_complete: bool | None
    derived_series: list
    lower_central_series: list
    upper_central_series: list


def upper_central_series(G: FiniteGroup) -> list[Subgroup]:
    """Z_0 = {e} < Z_1 = Z(G) < ... until it stabilises."""
    series = [G.trivial_subgroup()]
    while True:
        cur = series[-1]
        s = set(cur.members)
        nxt = [a for a in range(G.order)
               if all(int(c) in s for c in G.comm(a, np.arange(G.order)))]
        if len(nxt) == cur.order:
            return series
        series.append(Subgroup(G, nxt))


def structure_report(G: FiniteGroup, max_aut_order: int = AUT_BOUND) -> StructureReport:
    derived = [G.whole()]
    while True:
        d = derived_subgroup(G, derived[-1], derived[-1])
        if d.order == derived[-1].order:
            break
        derived.append(d)
    lower = [G.whole()]
    while True:
        d = derived_subgroup(G, lower[-1], G.whole())
        if d.order == lower[-1].order:
            break
        lower.append(d)
    Z = G.center()
    complete = None
    if G.order <= max_aut_order:
        # Inn(G) ≅ G/Z(G); complete means Z trivial and Aut = Inn
        complete = Z.order == 1 and len(automorphisms(G, max_aut_order)) == G.order
    return StructureReport(
        is_abelian=G.is_abelian(),
        is_nilpotent=lower[-1].order == 1,
        is_solvable=derived[-1].order == 1,
        is_metabelian=len(derived) < 2 or derived_subgroup(G, derived[1], derived[1]).order == 1,
        center=Z,
        is_complete=complete,
        derived_series=derived,
        lower_central_series=lower,
        upper_central_series=upper_central_series(G),
    )


# ---------------------------------------------------------------------------
# homomorphisms, automorphisms, isomorphism


def extend_homomorphism(G: FiniteGroup, H: FiniteGroup, gens: Sequence[int],
                        images: Sequence[int]) -> np.ndarray | None:
    """Extend ``gens[i] -> images[i]`` to a homomorphism G -> H, or None if inconsistent.

    Every edge x -> x*s of the Cayley graph is checked, which is enough for the
    extension to be multiplicative.
    """
    phi = [-1] * G.order
    phi[0] = 0
    queue = deque([0])
    grows, hrows = G.rows, H.rows
    while queue:
        x = queue.popleft()
        px = hrows[phi[x]]
        gx = grows[x]
        for s, t in zip(gens, images):
            y = gx[s]
            v = px[t]
            if phi[y] == -1:
                phi[y] = v
                queue.append(y)
            elif phi[y] != v:
                return None
    if -1 in phi:
        return None
    return np.array(phi, dtype=np.int64)


def homomorphisms(G: FiniteGroup, H: FiniteGroup) -> list[np.ndarray]:
    """All homomorphisms G -> H, lexicographic by image array."""
    gens = G.generating_set()
    go, ho = G.element_orders, H.element_orders
    cands = [[b for b in range(H.order) if go[g] % ho[b] == 0] for g in gens]
    out = []
    for imgs in itertools.product(*cands):
        phi = extend_homomorphism(G, H, gens, imgs)
        if phi is not None:
            out.append(phi)
    out.sort(key=lambda a: a.tolist())
    return out


def _isomorphisms(G: FiniteGroup, H: FiniteGroup, first_only: bool):
    gens = G.generating_set()
    go, ho = G.element_orders, H.element_orders
    cands = [[b for b in range(H.order) if ho[b] == go[g]] for g in gens]
    for imgs in itertools.product(*cands):
        if len(set(imgs)) != len(imgs):
            continue
        phi = extend_homomorphism(G, H, gens, imgs)
        if phi is not None and len(np.unique(phi)) == G.order:
            yield phi
            if first_only:
                return


def automorphisms(G: FiniteGroup, max_order: int = AUT_BOUND) -> list[np.ndarray]:
    """Aut(G) as image arrays, sorted lexicographically (identity first)."""
    if G.order > max_order:
        raise BoundExceeded(f"automorphisms: |G| = {G.order} exceeds bound {max_order}")
    if "aut" not in G._cache:
        auts = list(_isomorphisms(G, G, first_only=False))
        auts.sort(key=lambda a: a.tolist())
        for a in auts:
            a.setflags(write=False)
        G._cache["aut"] = auts
    return list(G._cache["aut"])


def automorphisms_bruteforce(G: FiniteGroup) -> list[np.ndarray]:
    """Oracle: scan every bijection fixing the identity (use only for |G| <= 8)."""
    n = G.order
    out = []
    t = G.table
    for rest in itertools.permutations(range(1, n)):
        phi = np.array((0,) + rest)
        if np.array_equal(phi[t], t[phi[:, None], phi[None, :]]):
            out.append(phi)
    return out


def _invariants(G: FiniteGroup):
    return (G.order, G.is_abelian(), tuple(sorted(G.element_orders.tolist())), G.center().order)


def isomorphic(G: FiniteGroup, H: FiniteGroup) -> np.ndarray | None:
    """An isomorphism G -> H as an image array, or None."""
    if _invariants(G) != _invariants(H):
        return None
    return next(_isomorphisms(G, H, first_only=True), None)


def is_homomorphism(G: FiniteGroup, H: FiniteGroup, phi) -> Check:
    phi = np.asarray(phi)
    lhs = phi[G.table]
    rhs = H.table[phi[:, None], phi[None, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return Check(False, tuple(int(i) for i in bad[0]))
    return Check(True)


def is_automorphism(G: FiniteGroup, phi) -> bool:
    phi = np.asarray(phi)
    return len(phi) == G.order and len(np.unique(phi)) == G.order and bool(is_homomorphism(G, G, phi))


def compose(f, g) -> np.ndarray:
    """(f g)(x) = f(g(x))."""
    return np.asarray(f)[np.asarray(g)]


def inverse_map(f) -> np.ndarray:
    return np.argsort(np.asarray(f))


# ---------------------------------------------------------------------------
# holomorph and regular subgroups


@dataclass
class HolomorphGroup:
    """Hol(G) = Aut(G) ⋉ G; element index ``f * |G| + a`` stands for (auts[f], a)."""

    group: FiniteGroup
    base: FiniteGroup
    auts: list

    def decode(self, idx: int) -> tuple[int, int]:
        return divmod(int(idx), self.base.order)

    def encode(self, f: int, a: int) -> int:
        return int(f) * self.base.order + int(a)

    def act(self, idx: int, b: int) -> int:
        """(f, a) . b = a f(b)."""
        f, a = self.decode(idx)
        return self.base.rows[a][int(self.auts[f][b])]

    def aut_index(self, phi) -> int:
        key = tuple(int(x) for x in phi)
        return self._aut_pos[key]

    def __post_init__(self):
        self._aut_pos = {tuple(a.tolist()): i for i, a in enumerate(self.auts)}

    @property
    def order(self) -> int:
        return self.group.order


def holomorph(G: FiniteGroup, max_order: int = HOL_ORDER_BOUND,
              max_aut_order: int = AUT_BOUND) -> HolomorphGroup:
    auts = automorphisms(G, max_aut_order)
    na, n = len(auts), G.order
    if na * n > max_order:
        raise BoundExceeded(f"|Hol({G.name})| = {na * n} exceeds bound {max_order}")
    A = np.stack(auts)
    pos = {tuple(a.tolist()): i for i, a in enumerate(auts)}
    comp = np.array([[pos[tuple(A[f][A[g]].tolist())] for g in range(na)] for f in range(na)])
    f = np.repeat(np.arange(na), n)
    a = np.tile(np.arange(n), na)
    # (f,a)(g,b) = (fg, a f(b))
    fg = comp[f[:, None], f[None, :]]
    afb = G.table[a[:, None], A[f[:, None], a[None, :]]]
    table = fg * n + afb
    labels = [f"(f{fi},{G.labels[ai]})" for fi, ai in zip(f, a)]
    grp = FiniteGroup(table, labels, f"Hol({G.name})", validate=False)
    return HolomorphGroup(grp, G, auts)


def regular_subgroups(G: FiniteGroup, max_group_order: int = HOL_GROUP_BOUND,
                      max_hol_order: int = HOL_ORDER_BOUND,
                      hol: HolomorphGroup | None = None) -> list[Subgroup]:
    """All regular subgroups of Hol(G), sorted by member list.

    Search: always extend by an element (f, a) where a is the smallest element of G
    not yet reached from the identity; the closure is abandoned as soon as two of
    its elements send e to the same point.  Since a regular subgroup contains
    exactly one element over each a, every subgroup is produced exactly once.
    """
    if G.order > max_group_order:
        raise BoundExceeded(f"regular_subgroups: |G| = {G.order} exceeds bound {max_group_order}")
    hol = hol or holomorph(G, max_hol_order)
    n, na = G.order, len(hol.auts)
    rows = hol.group.rows
    out: list[Subgroup] = []

    def grow(members: frozenset, proj: dict, new: int):
        # closure of members ∪ {new}, failing fast on a repeated projection
        seen = set(members)
        pr = dict(proj)
        gens = sorted(seen | {new})
        queue = deque(seen | {new})
        if new % n in pr:
            return None
        seen.add(new)
        pr[new % n] = new
        while queue:
            x = queue.popleft()
            rx = rows[x]
            for g in gens:
                for y in (rx[g], rows[g][x]):
                    if y not in seen:
                        a = y % n
                        if a in pr:
                            return None
                        seen.add(y)
                        pr[a] = y
                        queue.append(y)
        return frozenset(seen), pr

    def search(members: frozenset, proj: dict):
        if len(members) == n:
            out.append(Subgroup(hol.group, members))
            return
        a = min(set(range(n)) - proj.keys())
        for f in range(na):
            r = grow(members, proj, f * n + a)
            if r is not None:
                search(*r)

    search(frozenset([0]), {0: 0})
    out.sort(key=lambda s: s.members)
    return out


def is_regular(hol: HolomorphGroup, H: Subgroup) -> bool:
    n = hol.base.order
    if H.order != n or not H.is_subgroup():
        return False
    return sorted(hol.act(h, 0) for h in H.members) == list(range(n))


# ---------------------------------------------------------------------------
# constructors


def from_elements(elements: Sequence, mul: Callable, identity, labels=None, name="G",
                  key: Callable | None = None) -> FiniteGroup:
    """Tabulate ``mul`` on ``elements`` (hashable), moving ``identity`` to index 0."""
    elements = list(elements)
    elements.remove(identity)
    elements.insert(0, identity)
    pos = {e: i for i, e in enumerate(elements)}
    table = [[pos[mul(a, b)] for b in elements] for a in elements]
    if labels is None:
        labels = [str(e) for e in elements]
    elif callable(labels):
        labels = [labels(e) for e in elements]
    return FiniteGroup(table, labels, name)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise PreconditionError("cyclic(n) needs n >= 1")
    a = np.arange(n)
    labels = ["e"] + [f"a^{k}" if k > 1 else "a" for k in range(1, n)]
    return FiniteGroup((a[:, None] + a[None, :]) % n, labels, f"C{n}", validate=False)


def _cycle_label(p: tuple) -> str:
    seen, parts = set(), []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            seen.add(i)
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(str(j + 1))
            j = p[j]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "e"


def symmetric(n: int) -> FiniteGroup:
    """S_n on {1..n}; product (p q)(i) = p(q(i)), elements labelled in cycle notation."""
    if not 1 <= n <= 5:
        raise PreconditionError("symmetric(n) supports 1 <= n <= 5")
    perms = list(itertools.permutations(range(n)))
    return from_elements(perms, lambda p, q: tuple(p[q[i]] for i in range(n)),
                         tuple(range(n)), _cycle_label, f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if not 1 <= n <= 5:
        raise PreconditionError("alternating(n) supports 1 <= n <= 5")

    def even(p):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        return inv % 2 == 0

    perms = [p for p in itertools.permutations(range(n)) if even(p)]
    return from_elements(perms, lambda p, q: tuple(p[q[i]] for i in range(n)),
                         tuple(range(n)), _cycle_label, f"A{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon (order 2n): r^k s^j with s r s = r^-1."""
    if n < 1:
        raise PreconditionError("dihedral(n) needs n >= 1")
    els = [(k, j) for j in range(2) for k in range(n)]

    def mul(x, y):
        (a, i), (b, j) = x, y
        return ((a + (b if i == 0 else -b)) % n, (i + j) % 2)

    def label(x):
        k, j = x
        r = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
        s = "s" if j else ""
        return (r + s) or "e"

    return from_elements(els, mul, (0, 0), label, f"D{n}")


def quaternion8() -> FiniteGroup:
    units = {"1": (1, 0, 0, 0), "i": (0, 1, 0, 0), "j": (0, 0, 1, 0), "k": (0, 0, 0, 1)}
    els = []
    for s in (1, -1):
        for u in units.values():
            els.append(tuple(s * x for x in u))

    def mul(p, q):
        a1, b1, c1, d1 = p
        a2, b2, c2, d2 = q
        return (a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2)

    names = {v: k for k, v in units.items()}

    def label(q):
        if q in names:
            return names[q]
        return "-" + names[tuple(-x for x in q)]

    return from_elements(els, mul, (1, 0, 0, 0), label, "Q8")


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """G × H with (a, b) stored at index a*|H| + b."""
    m = H.order
    a = np.repeat(np.arange(G.order), m)
    b = np.tile(np.arange(m), G.order)
    table = G.table[a[:, None], a[None, :]] * m + H.table[b[:, None], b[None, :]]
    labels = [f"({G.labels[x]},{H.labels[y]})" for x, y in zip(a, b)]
    return FiniteGroup(table, labels, name or f"{G.name}x{H.name}", validate=False)


def direct_power(G: FiniteGroup, k: int) -> FiniteGroup:
    """G^k with (g_1, ..., g_k) at mixed-radix index, g_1 most significant."""
    if k < 1:
        raise PreconditionError("direct_power needs k >= 1")
    P = G
    for _ in range(k - 1):
        P = direct_product(G, P)
    n = G.order
    labels = ["(" + ",".join(G.labels[d] for d in power_digits(i, n, k)) + ")" for i in range(P.order)]
    return FiniteGroup(P.table, labels, f"{G.name}^{k}", validate=False)


def power_digits(idx: int, n: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(k):
        idx, r = divmod(idx, n)
        out.append(r)
    return tuple(reversed(out))


def semidirect_product(H: FiniteGroup, L: FiniteGroup, action: Sequence,
                       name: str | None = None) -> FiniteGroup:
    """H ⋊ L where ``action[l]`` is the automorphism of H by which l acts.

    (h, l)(h', l') = (h · action[l](h'), l l'); stored at index h*|L| + l.
    """
    act = [np.asarray(a, dtype=np.int64) for a in action]
    if len(act) != L.order:
        raise PreconditionError("action must give one automorphism per element of L")
    for l, phi in enumerate(act):
        if not is_automorphism(H, phi):
            raise PreconditionError(f"action[{L.labels[l]}] is not an automorphism of {H.name}")
    for l1 in range(L.order):
        for l2 in range(L.order):
            if not np.array_equal(act[L.rows[l1][l2]], act[l1][act[l2]]):
                raise PreconditionError(
                    f"action is not a homomorphism at ({L.labels[l1]}, {L.labels[l2]})")
    A = np.stack(act)
    m = L.order
    h = np.repeat(np.arange(H.order), m)
    l = np.tile(np.arange(m), H.order)
    hh = H.table[h[:, None], A[l[:, None], h[None, :]]]
    ll = L.table[l[:, None], l[None, :]]
    labels = [f"({H.labels[x]},{L.labels[y]})" for x, y in zip(h, l)]
    return FiniteGroup(hh * m + ll, labels, name or f"{H.name}:{L.name}")


def opposite(G: FiniteGroup) -> FiniteGroup:
    """G^op with a*b := b·a."""
    return FiniteGroup(G.table.T.copy(), G.labels, f"{G.name}^op", validate=False)


_CONSTRUCTORS = {
    "cyclic": cyclic,
    "symmetric": symmetric,
    "alternating": alternating,
    "dihedral": dihedral,
    "quaternion8": quaternion8,
    "direct_product": direct_product,
    "opposite": opposite,
}


def build_group(descriptor: str) -> FiniteGroup:
    """Parse a constructor descriptor such as ``"direct_product(cyclic(2), cyclic(3))"``.

    ``semidirect_product`` needs an action and is only available from Python.
    """
    expr, rest = _parse(descriptor.replace(" ", ""))
    if rest:
        raise PreconditionError(f"trailing input in group descriptor: {rest!r}")
    return expr


def _parse(s: str):
    m = re.match(r"([a-z_0-9]+)", s)
    if not m:
        raise PreconditionError(f"cannot parse group descriptor at {s!r}")
    head = m.group(1)
    s = s[m.end():]
    if head not in _CONSTRUCTORS:
        raise PreconditionError(f"unknown group constructor {head!r}")
    args: list = []
    if s.startswith("("):
        s = s[1:]
        while not s.startswith(")"):
            if re.match(r"-?\d", s):
                num = re.match(r"-?\d+", s).group(0)
                args.append(int(num))
                s = s[len(num):]
            else:
                g, s = _parse(s)
                args.append(g)
            if s.startswith(","):
                s = s[1:]
            elif not s.startswith(")"):
                raise PreconditionError(f"expected ',' or ')' at {s!r}")
        s = s[1:]
    return _CONSTRUCTORS[head](*args), s
