"""Rota–Baxter operators on finite groups.

Weight 1:   B(g) B(h) = B(g B(g) h B(g)^-1)
Weight -1:  C(g) C(h) = C(C(g) h C(g)^-1 g)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import BoundExceeded, Check, InternalError, PreconditionError, ValidationError, check_equal
from .groups import (AUT_BOUND, FiniteGroup, Subgroup, automorphisms, homomorphisms,
                     inverse_map, is_automorphism, is_normal)

RB_ENUM_BOUND = 12


@dataclass(frozen=True, eq=False)
class RbOperator:
    group: FiniteGroup = field(repr=False)
    images: np.ndarray
    weight: int = 1

    def __post_init__(self):
        imgs = np.array(self.images, dtype=np.int64)
        if imgs.shape != (self.group.order,):
            raise ValidationError(f"operator needs {self.group.order} images, got {imgs.shape}")
        if np.any((imgs < 0) | (imgs >= self.group.order)):
            raise ValidationError("operator image out of range")
        if self.weight not in (1, -1):
            raise ValidationError("weight must be 1 or -1")
        imgs.setflags(write=False)
        object.__setattr__(self, "images", imgs)

    def __call__(self, g):
        return self.images[g]

    def key(self) -> tuple:
        return tuple(self.images.tolist())

    def __eq__(self, other):
        if not isinstance(other, RbOperator):
            return NotImplemented
        return (self.weight == other.weight and self.group == other.group
                and np.array_equal(self.images, other.images))

    def __hash__(self):
        return hash((self.weight, self.key()))

    def describe(self) -> dict[str, str]:
        G = self.group
        return {G.labels[g]: G.labels[int(b)] for g, b in enumerate(self.images)}

    def is_bijective(self) -> bool:
        return len(np.unique(self.images)) == self.group.order


def is_rb_operator(G: FiniteGroup, images, weight: int = 1) -> Check:
    """Check the weight-appropriate identity on all pairs; witness is (g, h)."""
    B = np.asarray(images, dtype=np.int64)
    t, inv = G.table, G.inv
    g = np.arange(G.order)[:, None]
    h = np.arange(G.order)[None, :]
    Bg = B[g]
    lhs = t[Bg, B[h]]
    if weight == 1:
        arg = t[t[t[g, Bg], h], inv[Bg]]
    elif weight == -1:
        arg = t[t[t[Bg, h], inv[Bg]], g]
    else:
        raise ValidationError("weight must be 1 or -1")
    return check_equal(lhs, B[arg])


def _check_op(op: RbOperator) -> RbOperator:
    c = is_rb_operator(op.group, op.images, op.weight)
    if not c:
        raise InternalError(f"constructed map is not an RB operator of weight {op.weight} "
                            f"(witness {c.witness})")
    return op


def trivial_operator(G: FiniteGroup) -> RbOperator:
    """B_0(g) = e."""
    return RbOperator(G, np.zeros(G.order, dtype=np.int64))


def inversion_operator(G: FiniteGroup) -> RbOperator:
    """B_-1(g) = g^-1."""
    return RbOperator(G, G.inv.copy())


# ---------------------------------------------------------------------------
# enumeration


def _search(rows, inv, n, B, assigned, out, first_choices=None):
    """Depth-first search with constraint propagation.

    Every time B(x) and B(y) are both known, B must send x B(x) y B(x)^-1 to
    B(x) B(y); unknown targets are forced, known ones are checked.
    """

    def assign(g, v, trail):
        stack = [(g, v)]
        while stack:
            g, v = stack.pop()
            cur = B[g]
            if cur != -1:
                if cur != v:
                    return False
                continue
            B[g] = v
            trail.append(g)
            assigned.append(g)
            for h in assigned:
                pairs = ((g, h), (h, g)) if h != g else ((g, g),)
                for x, y in pairs:
                    bx = B[x]
                    k = rows[rows[rows[x][bx]][y]][inv[bx]]
                    target = rows[bx][B[y]]
                    bk = B[k]
                    if bk == -1:
                        stack.append((k, target))
                    elif bk != target:
                        return False
        return True

    def undo(trail):
        for g in trail:
            B[g] = -1
        del assigned[len(assigned) - len(trail):]

    def rec(choices=None):
        try:
            g = B.index(-1)
        except ValueError:
            out.append(tuple(B))
            return
        for v in (choices if choices is not None else range(n)):
            trail: list[int] = []
            if assign(g, v, trail):
                rec()
            undo(trail)

    rec(first_choices)


def _enumerate_branch(args):
    table, inv, choice = args
    rows = [list(r) for r in table]
    n = len(rows)
    B = [-1] * n
    assigned: list[int] = []
    out: list[tuple] = []
    B[0] = 0
    assigned.append(0)
    _search(rows, list(inv), n, B, assigned, out, first_choices=[choice])
    return out


def enumerate_rb_operators(G: FiniteGroup, max_order: int = RB_ENUM_BOUND, jobs: int = 1) -> list[RbOperator]:
    """All weight-1 RB operators on G, sorted by image array.

    B(e) = e is forced (set g = h = e).  With ``jobs > 1`` the search is split on
    the image of the first non-identity element and run in a process pool.
    """
    if G.order > max_order:
        raise BoundExceeded(f"enumerate_rb_operators: |G| = {G.order} exceeds bound {max_order}")
    n = G.order
    if n == 1:
        return [RbOperator(G, [0])]
    args = [(G.rows, G.inv.tolist(), v) for v in range(n)]
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_enumerate_branch, args))
    else:
        parts = [_enumerate_branch(a) for a in args]
    found = sorted(set(t for p in parts for t in p))
    return [RbOperator(G, np.array(t)) for t in found]


def enumerate_rb_bruteforce(G: FiniteGroup) -> list[RbOperator]:
    """Oracle: test every map with B(e) = e.  Only sensible for |G| <= 6."""
    import itertools

    n = G.order
    out = []
    for rest in itertools.product(range(n), repeat=n - 1):
        imgs = np.array((0,) + rest)
        if is_rb_operator(G, imgs):
            out.append(RbOperator(G, imgs))
    return out


def is_rb_operator_weight_neg1(G, images) -> Check:
    return is_rb_operator(G, images, -1)


# ---------------------------------------------------------------------------
# transformations


def tilde(op: RbOperator) -> RbOperator:
    """B~(g) = g^-1 B(g^-1)."""
    G = op.group
    g = np.arange(G.order)
    return _check_op(RbOperator(G, G.table[G.inv[g], op.images[G.inv[g]]], op.weight))


def aut_conjugate(op: RbOperator, phi) -> RbOperator:
    """B^(φ) = φ^-1 B φ."""
    G = op.group
    phi = np.asarray(phi, dtype=np.int64)
    if not is_automorphism(G, phi):
        raise PreconditionError("φ is not an automorphism")
    return _check_op(RbOperator(G, inverse_map(phi)[op.images[phi]], op.weight))


def weight_swap(op: RbOperator) -> RbOperator:
    """C(g) = B(g^-1); the same formula maps weight -1 back to weight 1."""
    G = op.group
    return _check_op(RbOperator(G, op.images[G.inv], -op.weight))


def transform_rb(op: RbOperator, kind: str, phi=None) -> RbOperator:
    if kind == "tilde":
        return tilde(op)
    if kind == "aut_conj":
        if phi is None:
            raise PreconditionError("aut_conj needs an automorphism")
        return aut_conjugate(op, phi)
    if kind == "weight_swap":
        return weight_swap(op)
    raise PreconditionError(f"unknown transformation {kind!r}")


# ---------------------------------------------------------------------------
# constructions


def factorize(G: FiniteGroup, parts: Sequence[Subgroup]) -> dict[int, tuple[int, ...]]:
    """Unique expression g = p_1 p_2 ... p_k with p_i in parts[i], or PreconditionError."""
    decomp: dict[int, tuple[int, ...]] = {}
    combos: list[tuple[tuple[int, ...], int]] = [((), 0)]
    for P in parts:
        combos = [(c + (p,), G.rows[x][p]) for c, x in combos for p in P.members]
    for c, x in combos:
        if x in decomp:
            raise PreconditionError(
                f"{G.labels[x]} has two factorizations; the subgroups do not give an exact product")
        decomp[x] = c
    if len(decomp) != G.order:
        raise PreconditionError("the product of the subgroups is not the whole group")
    return decomp


def _require_subgroup(S: Subgroup, what: str):
    if not S.is_subgroup():
        raise PreconditionError(f"{what} is not a subgroup")


def splitting(G: FiniteGroup, H: Subgroup, L: Subgroup) -> RbOperator:
    """B(hl) = l^-1 for an exact factorization G = HL."""
    _require_subgroup(H, "H")
    _require_subgroup(L, "L")
    if set(H.members) & set(L.members) != {0}:
        raise PreconditionError("H ∩ L is not trivial")
    dec = factorize(G, [H, L])
    imgs = np.zeros(G.order, dtype=np.int64)
    for g, (h, l) in dec.items():
        imgs[g] = G.inv[l]
    return _check_op(RbOperator(G, imgs))


def _restricted_rb_check(G: FiniteGroup, L: Subgroup, C) -> Check:
    rows, inv = G.rows, G.inv
    for g in L.members:
        for h in L.members:
            cg = int(C[g])
            if rows[cg][int(C[h])] != int(C[rows[rows[rows[g][cg]][h]][inv[cg]]]):
                return Check(False, (g, h))
    return Check(True)


def _as_map(C, G: FiniteGroup) -> np.ndarray:
    if isinstance(C, RbOperator):
        return C.images
    if isinstance(C, dict):
        out = np.zeros(G.order, dtype=np.int64)
        for k, v in C.items():
            out[k] = v
        return out
    return np.asarray(C, dtype=np.int64)


def triangular(G: FiniteGroup, H: Subgroup, L: Subgroup, M: Subgroup, C) -> RbOperator:
    """B(hlm) = C(l) m^-1 for G = HLM, [H, L] = [C(L), M] = e, C an RB operator on L.

    ``C`` maps elements of L (as indices of G) into L; given as an array over G
    (only entries at L are read) or a dict.
    """
    C = _as_map(C, G)
    for S, nm in ((H, "H"), (L, "L"), (M, "M")):
        _require_subgroup(S, nm)
    for (A, a), (B_, b) in (((H, "H"), (L, "L")), ((H, "H"), (M, "M")), ((L, "L"), (M, "M"))):
        if set(A.members) & set(B_.members) != {0}:
            raise PreconditionError(f"{a} ∩ {b} is not trivial")
    if any(int(C[l]) not in L for l in L.members):
        raise PreconditionError("C does not map L into L")
    c = _restricted_rb_check(G, L, C)
    if not c:
        raise PreconditionError(f"C is not an RB operator on L (witness {c.witness})")
    if any(G.comm(h, l) != 0 for h in H.members for l in L.members):
        raise PreconditionError("[H, L] is not trivial")
    CL = {int(C[l]) for l in L.members}
    if any(G.comm(x, m) != 0 for x in CL for m in M.members):
        raise PreconditionError("[C(L), M] is not trivial")
    dec = factorize(G, [H, L, M])
    imgs = np.zeros(G.order, dtype=np.int64)
    for g, (h, l, m) in dec.items():
        imgs[g] = G.rows[int(C[l])][int(G.inv[m])]
    return _check_op(RbOperator(G, imgs))


def semidirect(G: FiniteGroup, H: Subgroup, L: Subgroup, C) -> RbOperator:
    """B(hl) = C(l) for G = H ⋊ L (H normal) and C an RB operator on L."""
    C = _as_map(C, G)
    _require_subgroup(H, "H")
    _require_subgroup(L, "L")
    if not is_normal(G, H.members):
        raise PreconditionError("H is not normal in G")
    if set(H.members) & set(L.members) != {0}:
        raise PreconditionError("H ∩ L is not trivial")
    if any(int(C[l]) not in L for l in L.members):
        raise PreconditionError("C does not map L into L")
    c = _restricted_rb_check(G, L, C)
    if not c:
        raise PreconditionError(f"C is not an RB operator on L (witness {c.witness})")
    dec = factorize(G, [H, L])
    imgs = np.zeros(G.order, dtype=np.int64)
    for g, (h, l) in dec.items():
        imgs[g] = C[l]
    return _check_op(RbOperator(G, imgs))


def hom_to_abelian(G: FiniteGroup, f) -> RbOperator:
    """Any homomorphism or antihomomorphism of G with abelian image is an RB operator."""
    f = np.asarray(f, dtype=np.int64)
    img = sorted(set(f.tolist()))
    if any(G.rows[a][b] != G.rows[b][a] for a in img for b in img):
        raise PreconditionError("image of f is not abelian")
    t = G.table
    hom = np.array_equal(f[t], t[f[:, None], f[None, :]])
    anti = np.array_equal(f[t], t[f[None, :], f[:, None]])
    if not (hom or anti):
        raise PreconditionError("f is neither a homomorphism nor an antihomomorphism")
    return _check_op(RbOperator(G, f))


def construct_rb(kind: str, G: FiniteGroup, *args) -> RbOperator:
    builders = {"splitting": splitting, "triangular": triangular,
                "semidirect": semidirect, "hom_to_abelian": hom_to_abelian}
    if kind not in builders:
        raise PreconditionError(f"unknown construction {kind!r}")
    return builders[kind](G, *args)


# ---------------------------------------------------------------------------
# derived product and criteria


def circle_table(op: RbOperator) -> np.ndarray:
    """g ∘ h = g B(g) h B(g)^-1."""
    G, B = op.group, op.images
    t = G.table
    g = np.arange(G.order)[:, None]
    h = np.arange(G.order)[None, :]
    return t[t[t[g, B[g]], h], G.inv[B[g]]]


def derived_circle_group(op: RbOperator) -> FiniteGroup:
    """(G, ∘_B), checked to be a group on which B is again RB and B: (G,∘) -> (G,·) a homomorphism."""
    if op.weight != 1:
        raise PreconditionError("derived group needs a weight-1 operator")
    G, B = op.group, op.images
    circ = FiniteGroup(circle_table(op), G.labels, f"{G.name}_B", validate=False)
    from .groups import verify_group_table

    diag = verify_group_table(circ.table)
    if not diag:
        raise InternalError(f"derived product is not a group: {diag.message}")
    hom = check_equal(B[circ.table], G.table[B[:, None], B[None, :]])
    if not hom:
        raise InternalError(f"B is not a homomorphism (G,∘) -> (G,·) at {hom.witness}")
    again = is_rb_operator(circ, B)
    if not again:
        raise InternalError(f"B is not an RB operator on (G,∘) at {again.witness}")
    return circ


@dataclass(frozen=True)
class CriteriaReport:
    abelian_circ_identity: Check
    derived_group_abelian: bool
    homomorphism_to_additive: Check
    direct_solution_identity: Check

    def agreements(self) -> dict[str, bool]:
        return {"abelian_circ": bool(self.abelian_circ_identity) == self.derived_group_abelian}


def abelian_circ_identity(op: RbOperator) -> Check:
    """[y, B(x)^-1] [B(y)^-1, x] = [y, x] for all x, y; witness (x, y)."""
    G, B = op.group, op.images
    x = np.arange(G.order)[:, None]
    y = np.arange(G.order)[None, :]
    lhs = G.table[G.comm(y, G.inv[B[x]]), G.comm(G.inv[B[y]], x)]
    return check_equal(lhs, G.comm(y, x))


def direct_solution_identity(op: RbOperator) -> Check:
    """(B(b)^-1)^{B(c)} = B(b^{B(c)}) for all b, c; witness (b, c)."""
    G, B = op.group, op.images
    b = np.arange(G.order)[:, None]
    c = np.arange(G.order)[None, :]
    lhs = G.conj(G.inv[B[b]], B[c])
    rhs = B[G.conj(b, B[c])]
    return check_equal(lhs, rhs)


def rb_criteria(op: RbOperator) -> CriteriaReport:
    circ = circle_table(op)
    G, B = op.group, op.images
    return CriteriaReport(
        abelian_circ_identity=abelian_circ_identity(op),
        derived_group_abelian=bool(np.array_equal(circ, circ.T)),
        homomorphism_to_additive=check_equal(B[circ], G.table[B[:, None], B[None, :]]),
        direct_solution_identity=direct_solution_identity(op),
    )


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class OrbitPartition:
    group: FiniteGroup = field(repr=False)
    orbits: list               # each orbit: sorted list of image tuples
    tilde_merged: bool = False

    @property
    def count(self) -> int:
        return len(self.orbits)

    @property
    def representatives(self) -> list[tuple]:
        return [o[0] for o in self.orbits]


def classify_rb_orbits(G: FiniteGroup, ops: list[RbOperator] | None = None,
                       merge_tilde: bool = False, max_order: int = RB_ENUM_BOUND) -> OrbitPartition:
    """Partition RB operators on G into Aut(G)-orbits under B -> φ^-1 B φ.

    With ``merge_tilde`` an orbit and the orbit of its tilde-images are joined.
    Representatives are the lexicographically smallest image arrays.
    """
    if ops is None:
        ops = enumerate_rb_operators(G, max_order)
    keys = {op.key() for op in ops}
    auts = automorphisms(G, max(AUT_BOUND, G.order))
    invs = [inverse_map(a) for a in auts]
    parent = {k: k for k in keys}

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            lo, hi = min(ra, rb), max(ra, rb)
            parent[hi] = lo

    for k in sorted(keys):
        arr = np.array(k)
        for phi, phinv in zip(auts, invs):
            img = tuple(phinv[arr[phi]].tolist())
            if img not in keys:
                raise InternalError("Aut(G)-conjugate of an RB operator missing from the list")
            union(k, img)
        if merge_tilde:
            g = np.arange(G.order)
            t = tuple(G.table[G.inv[g], arr[G.inv[g]]].tolist())
            union(k, t)
    groups: dict[tuple, list] = {}
    for k in keys:
        groups.setdefault(find(k), []).append(k)
    orbits = sorted((sorted(v) for v in groups.values()), key=lambda o: o[0])
    return OrbitPartition(G, orbits, merge_tilde)


def endomorphism_operators(G: FiniteGroup) -> list[tuple]:
    """Image tuples of all endomorphisms (the RB operators when G is abelian)."""
    return [tuple(h.tolist()) for h in homomorphisms(G, G)]


__all__ = [
    "RbOperator", "is_rb_operator", "enumerate_rb_operators", "enumerate_rb_bruteforce",
    "trivial_operator", "inversion_operator", "tilde", "aut_conjugate", "weight_swap",
    "transform_rb", "splitting", "triangular", "semidirect", "hom_to_abelian", "construct_rb",
    "factorize", "circle_table", "derived_circle_group", "rb_criteria", "CriteriaReport",
    "abelian_circ_identity", "direct_solution_identity", "classify_rb_orbits", "OrbitPartition",
    "endomorphism_operators",
]
