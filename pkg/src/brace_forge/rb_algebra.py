"""Weight-1 Rota–Baxter operators on the split algebra k^n = k e_1 ⊕ ... ⊕ k e_n.

An operator is stored as the integer matrix ``r`` with ``R(e_i) = sum_k r[i][k] e_k``.
Valid operators have entries in {-1, 0, 1}.  Two independent tests are provided:
the combinatorial sign-pattern conditions (``check_conditions``) and the operator
identity evaluated on basis pairs (``check_rb_identity_algebra``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

import numpy as np

from .errors import BoundExceeded, InternalError, PreconditionError, ValidationError
from .groups import FiniteGroup, direct_power, is_automorphism, power_digits

MAX_ENUM_N = 4


@dataclass(frozen=True)
class RbMatrix:
    n: int
    r: tuple

    def __init__(self, r):
        arr = np.asarray(r, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValidationError("RB matrix must be square")
        if np.any((arr < -1) | (arr > 1)):
            raise ValidationError("RB matrix entries must lie in {-1, 0, 1}")
        object.__setattr__(self, "n", int(arr.shape[0]))
        object.__setattr__(self, "r", tuple(tuple(int(x) for x in row) for row in arr))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.r, dtype=np.int64)

    def flat(self) -> tuple:
        return tuple(x for row in self.r for x in row)

    def is_upper_triangular(self) -> bool:
        return all(self.r[i][k] == 0 for i in range(self.n) for k in range(i))

    def permuted(self, perm) -> "RbMatrix":
        """Simultaneous row/column permutation: r'[i][k] = r[perm[i]][perm[k]]."""
        a = self.array
        p = list(perm)
        return RbMatrix(a[np.ix_(p, p)])


def check_conditions(m: RbMatrix) -> bool:
    r, n = m.r, m.n
    for i in range(n):
        off = [r[i][k] for k in range(n) if k != i]
        if r[i][i] == 0:
            if any(x not in (0, 1) for x in off):
                return False
        elif r[i][i] == -1:
            if any(x not in (0, -1) for x in off):
                return False
        else:
            return False
    for i in range(n):
        for k in range(n):
            if i == k:
                continue
            others = [l for l in range(n) if l not in (i, k)]
            if r[i][k] == 0 and r[k][i] == 0:
                if any(r[i][l] * r[k][l] != 0 for l in others):
                    return False
            if r[i][k] != 0:
                if r[k][i] != 0:
                    return False
                if any(r[k][l] != 0 and r[i][l] != r[i][k] for l in others):
                    return False
    return True


def _identity_defect(r: np.ndarray) -> np.ndarray:
    """R(e_i)R(e_j) - R(R(e_i)e_j + e_iR(e_j) + e_ie_j) as coefficients [..., i, j, k].

    With e_i e_j = δ_ij e_i the right-hand argument is r_ij e_j + r_ji e_i + δ_ij e_i.
    Works on a stack of matrices (leading batch axes).
    """
    n = r.shape[-1]
    lhs = r[..., :, None, :] * r[..., None, :, :]
    rij = r[..., :, :, None]                    # r_ij, broadcast over k
    rji = np.swapaxes(r, -1, -2)[..., :, :, None]
    rhs = rij * r[..., None, :, :] + rji * r[..., :, None, :]
    eye = np.eye(n, dtype=r.dtype)[:, :, None]
    rhs = rhs + eye * r[..., :, None, :]
    return lhs - rhs


def check_rb_identity_algebra(m: RbMatrix | np.ndarray) -> bool:
    r = m.array if isinstance(m, RbMatrix) else np.asarray(m, dtype=np.int64)
    return not np.any(_identity_defect(r))


def rb_identity_mask(stack: np.ndarray) -> np.ndarray:
    """Vectorised ``check_rb_identity_algebra`` over a (M, n, n) stack."""
    d = _identity_defect(stack)
    return ~np.any(d.reshape(d.shape[0], -1), axis=1)


def all_candidate_matrices(n: int) -> np.ndarray:
    """Every n×n matrix over {-1, 0, 1}, as a (3^(n²), n, n) stack in lexicographic order."""
    vals = np.array([-1, 0, 1], dtype=np.int64)
    grid = np.array(list(itertools.product(vals, repeat=n * n)), dtype=np.int64)
    return grid.reshape(-1, n, n)


def enumerate_algebra_rb(n: int) -> list[RbMatrix]:
    """All weight-1 RB operators on k^n, lexicographic by flattened matrix.

    Rows are generated from the diagonal/sign dichotomy of condition (1), so only
    (2^n)^n candidates are filtered.
    """
    if not 1 <= n <= MAX_ENUM_N:
        raise BoundExceeded(f"enumerate_algebra_rb supports 1 <= n <= {MAX_ENUM_N}")
    row_choices = []
    for i in range(n):
        rows = []
        for d in (0, -1):
            s = 1 if d == 0 else -1
            for bits in itertools.product((0, 1), repeat=n - 1):
                it = iter(bits)
                rows.append(tuple(d if k == i else s * next(it) for k in range(n)))
        rows.sort()
        row_choices.append(rows)
    out = []
    for rows in itertools.product(*row_choices):
        m = RbMatrix(rows)
        if check_conditions(m):
            out.append(m)
    out.sort(key=RbMatrix.flat)
    return out


def expected_count(n: int) -> int:
    return 2 ** n * (n + 1) ** (n - 1)


@dataclass(frozen=True)
class OrbitReport:
    n: int
    count: int
    representatives: list
    orbit_sizes: list


def canonical_form(m: RbMatrix) -> RbMatrix:
    return min((m.permuted(p) for p in itertools.permutations(range(m.n))), key=RbMatrix.flat)


def algebra_rb_orbits(n: int) -> OrbitReport:
    """Orbits of RB operators on k^n under Aut(k^n) ≅ S_n."""
    mats = enumerate_algebra_rb(n)
    orbits: dict[tuple, int] = {}
    for m in mats:
        key = canonical_form(m).flat()
        orbits[key] = orbits.get(key, 0) + 1
    reps = sorted(orbits)
    sizes = [orbits[k] for k in reps]
    assert sum(sizes) == len(mats)
    assert all(factorial(n) % s == 0 for s in sizes)
    return OrbitReport(n, len(reps), [RbMatrix(np.array(k).reshape(n, n)) for k in reps], sizes)


# ---------------------------------------------------------------------------
# lifting to G^n


def group_rb_from_matrix(m: RbMatrix, G: FiniteGroup, psis=None, verify: bool = True):
    """RB operator on the direct power G^n built from an upper-triangular RB matrix.

    ``psis`` lists automorphisms ψ_2, ..., ψ_n of G (default: identity).  The i-th
    coordinate of B(g_1, ..., g_n) is u_i where u_1 = g_1^{r_1i} and
    u_j = g_j^{r_ji} ψ_j(u_{j-1}).

    Returns ``(power_group, operator)``.
    """
    from .rota_baxter import RbOperator, is_rb_operator

    n = m.n
    if not check_conditions(m):
        raise PreconditionError("matrix does not define an RB operator on k^n")
    if not m.is_upper_triangular():
        raise PreconditionError("matrix must be upper-triangular")
    if psis is None:
        psis = [np.arange(G.order)] * (n - 1)
    psis = [np.asarray(p, dtype=np.int64) for p in psis]
    if len(psis) != n - 1:
        raise PreconditionError(f"need {n - 1} automorphisms ψ_2..ψ_n")
    for j, p in enumerate(psis, start=2):
        if not is_automorphism(G, p):
            raise PreconditionError(f"ψ_{j} is not an automorphism of {G.name}")
    P = direct_power(G, n)
    r = m.r
    k = G.order

    def pw(g, e):
        return g if e == 1 else (0 if e == 0 else int(G.inv[g]))

    images = np.zeros(P.order, dtype=np.int64)
    for idx in range(P.order):
        g = power_digits(idx, k, n)
        t = []
        for i in range(n):
            u = pw(g[0], r[0][i])
            for j in range(1, i + 1):
                u = G.rows[pw(g[j], r[j][i])][int(psis[j - 1][u])]
            t.append(u)
        code = 0
        for x in t:
            code = code * k + x
        images[idx] = code
    op = RbOperator(P, images, 1)
    if verify and not is_rb_operator(P, images):
        raise InternalError("lifted map failed the RB identity")
    return P, op
