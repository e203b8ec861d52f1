"""Set-theoretic Yang–Baxter solutions, racks and quandles.

A solution on X = {0..n-1} is stored as ``pairs[x, y] = (σ_x(y), τ_y(x))``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .braces import SkewBrace, brace_from_rb
from .errors import Check, InternalError, PreconditionError, ValidationError, check_equal
from .groups import FiniteGroup
from .rota_baxter import RbOperator


class YbeSolution:
    def __init__(self, pairs, name: str = "S"):
        arr = np.asarray(pairs, dtype=np.int64)
        if arr.ndim != 3 or arr.shape[0] != arr.shape[1] or arr.shape[2] != 2:
            raise ValidationError("solution table must have shape (n, n, 2)")
        n = arr.shape[0]
        if n == 0 or arr.min() < 0 or arr.max() >= n:
            raise ValidationError("solution entries out of range")
        arr.setflags(write=False)
        self.pairs = arr
        self.name = name

    @property
    def order(self) -> int:
        return self.pairs.shape[0]

    @property
    def sigma(self) -> np.ndarray:
        """sigma[x, y] = σ_x(y)."""
        return self.pairs[:, :, 0]

    @property
    def tau(self) -> np.ndarray:
        """tau[y, x] = τ_y(x)."""
        return self.pairs[:, :, 1].T

    def flat(self) -> np.ndarray:
        """S as a map on codes x·n + y."""
        n = self.order
        return (self.pairs[:, :, 0] * n + self.pairs[:, :, 1]).reshape(-1)

    @classmethod
    def from_flat(cls, m, n: int, name: str = "S") -> "YbeSolution":
        m = np.asarray(m, dtype=np.int64).reshape(n, n)
        return cls(np.stack([m // n, m % n], axis=-1), name)

    @classmethod
    def from_maps(cls, sigma, tau_xy, name: str = "S") -> "YbeSolution":
        """Build from sigma[x, y] = σ_x(y) and tau_xy[x, y] = τ_y(x)."""
        return cls(np.stack([np.asarray(sigma), np.asarray(tau_xy)], axis=-1), name)

    def __eq__(self, other) -> bool:
        return isinstance(other, YbeSolution) and np.array_equal(self.pairs, other.pairs)

    def __hash__(self):
        return hash(self.pairs.tobytes())

    def __repr__(self) -> str:
        return f"YbeSolution({self.name!r}, order={self.order})"


def _is_perm_rows(m: np.ndarray) -> np.ndarray:
    n = m.shape[1]
    s = np.sort(m, axis=1)
    return np.all(s == np.arange(n)[None, :], axis=1)


def _inverse_rows(m: np.ndarray) -> np.ndarray:
    """Row-wise inverse permutations."""
    return np.argsort(m, axis=1)


@dataclass(frozen=True)
class SolutionReport:
    braid: Check                 # witness (x, y, z)
    bijective: bool
    left_nondegenerate: Check    # witness (x,) with σ_x not bijective
    right_nondegenerate: Check   # witness (y,) with τ_y not bijective
    involutive: Check            # witness (x, y) with S²(x, y) ≠ (x, y)

    @property
    def nondegenerate(self) -> bool:
        return bool(self.left_nondegenerate) and bool(self.right_nondegenerate)

    @property
    def is_solution(self) -> bool:
        return bool(self.braid) and self.bijective

    @property
    def ok(self) -> bool:
        """Bijective, braid relation, non-degenerate."""
        return self.is_solution and self.nondegenerate

    def as_dict(self) -> dict:
        return {
            "braid": self.braid.as_dict(),
            "bijective": self.bijective,
            "left_nondegenerate": self.left_nondegenerate.as_dict(),
            "right_nondegenerate": self.right_nondegenerate.as_dict(),
            "involutive": self.involutive.as_dict(),
        }


def braid_check(S: YbeSolution) -> Check:
    n = S.order
    m = S.flat()
    x, y, z = (a.reshape(-1) for a in np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij"))

    def s12(x, y, z):
        c = m[x * n + y]
        return c // n, c % n, z

    def s23(x, y, z):
        c = m[y * n + z]
        return x, c // n, c % n

    lhs = s12(*s23(*s12(x, y, z)))
    rhs = s23(*s12(*s23(x, y, z)))
    bad = np.flatnonzero((lhs[0] != rhs[0]) | (lhs[1] != rhs[1]) | (lhs[2] != rhs[2]))
    if len(bad):
        i = bad[0]
        return Check(False, (int(x[i]), int(y[i]), int(z[i])))
    return Check(True)


def verify_solution(S: YbeSolution) -> SolutionReport:
    n = S.order
    m = S.flat()
    bij = len(np.unique(m)) == n * n
    ls = _is_perm_rows(S.sigma)
    rs = _is_perm_rows(S.tau)
    left = Check(True) if ls.all() else Check(False, (int(np.flatnonzero(~ls)[0]),))
    right = Check(True) if rs.all() else Check(False, (int(np.flatnonzero(~rs)[0]),))
    sq = m[m]
    bad = np.flatnonzero(sq != np.arange(n * n))
    inv = Check(True) if not len(bad) else Check(False, divmod(int(bad[0]), n))
    return SolutionReport(braid_check(S), bij, left, right, inv)


def flip(n: int) -> YbeSolution:
    x, y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    return YbeSolution.from_maps(y, x, "P")


def shift_flip(n: int) -> YbeSolution:
    """S(x, y) = (y + 1 mod n, x)."""
    x, y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    return YbeSolution.from_maps((y + 1) % n, x, f"shift{n}")


# ---------------------------------------------------------------------------
# solutions from braces and RB groups


def solution_from_brace(A: SkewBrace, verify: bool = True) -> YbeSolution:
    """S(a, b) = (λ_a(b), λ^-1_{λ_a(b)}((a∘b)^-1 a (a∘b)))."""
    n = A.order
    T, L = A.add_table, A.lam
    Linv = _inverse_rows(L)
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    first = L[a, b]
    ab = A.circ_table
    inner = T[T[A.add.inv[ab], a], ab]
    second = Linv[first, inner]
    S = YbeSolution.from_maps(first, second, f"S[{A.name}]")
    if verify:
        r = verify_solution(S)
        if not r.ok:
            raise InternalError(f"brace solution failed verification: {r.as_dict()}")
    return S


def solution_from_rb(op: RbOperator, check_against_brace: bool = True) -> YbeSolution:
    """S(a, b) = (λ_a(b), a^{λ_a(b) B(λ_a(b))}) with λ_a(b) = B(a) b B(a)^-1."""
    if op.weight != 1:
        raise PreconditionError("operator must have weight 1")
    G, B = op.group, op.images
    t = G.table
    n = G.order
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    lam = t[t[B[a], b], G.inv[B[a]]]
    second = G.conj(np.broadcast_to(a, (n, n)), t[lam, B[lam]])
    S = YbeSolution.from_maps(lam, second, f"S[{G.name}(B)]")
    if check_against_brace:
        ref = solution_from_brace(brace_from_rb(op))
        if S != ref:
            raise InternalError("closed-form RB solution differs from the brace solution")
    return S


# ---------------------------------------------------------------------------
# conjugation and rack form


@dataclass(frozen=True)
class ConjugationResult:
    solution: YbeSolution
    report: SolutionReport


def conjugate_solution(S: YbeSolution, T) -> ConjugationResult:
    """T S T^-1 for a bijection T of X × X given as a map on codes x·n + y."""
    n = S.order
    T = np.asarray(T, dtype=np.int64).reshape(-1)
    if T.shape != (n * n,) or len(np.unique(T)) != n * n or T.min() < 0 or T.max() >= n * n:
        raise PreconditionError("T is not a bijection of X × X")
    Tinv = np.argsort(T)
    m = T[S.flat()[Tinv]]
    out = YbeSolution.from_flat(m, n, f"T{S.name}T^-1")
    return ConjugationResult(out, verify_solution(out))


def flip_map(n: int) -> np.ndarray:
    x, y = np.divmod(np.arange(n * n), n)
    return y * n + x


def sigma_straightening(S: YbeSolution) -> np.ndarray:
    """T(x, y) = (x, σ_x(y)) as a code map."""
    n = S.order
    x, y = np.divmod(np.arange(n * n), n)
    return x * n + S.sigma[x, y]


@dataclass(frozen=True)
class RackFormResult:
    solution: YbeSolution
    report: SolutionReport
    formula: Check                # matches (y, σ_y(τ_{σ_x^-1(y)}(x)))
    uniqueness_condition: Check   # witness (a,) where x ↦ τ_{σ_x^-1(a)}(x) is not bijective
    rack: "Rack | None"
    rack_report: "RackReport | None"


def rack_form(S: YbeSolution) -> RackFormResult:
    n = S.order
    if not _is_perm_rows(S.sigma).all():
        raise PreconditionError("solution is not left non-degenerate")
    conj = conjugate_solution(S, sigma_straightening(S))
    out = conj.solution
    sig, tau = S.sigma, S.tau
    sinv = _inverse_rows(sig)
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    expect_second = sig[y, tau[sinv[x, y], x]]
    formula = check_equal(out.pairs, np.stack([np.broadcast_to(y, (n, n)), expect_second], axis=-1))
    # val[x, a] = τ_{σ_x^-1(a)}(x); the condition asks that each column be a bijection
    val = tau[sinv[x, y], x]
    cols = _is_perm_rows(val.T)
    cond = Check(True) if cols.all() else Check(False, (int(np.flatnonzero(~cols)[0]),))
    rack = rep = None
    if formula and bool(cond):
        rack = Rack(out.pairs[:, :, 1])
        rep = rack_quandle_check(rack.table)
        if not rep.r1:
            raise InternalError("uniqueness condition holds but the groupoid fails (r1)")
    return RackFormResult(out, conj.report, formula, cond, rack, rep)


# ---------------------------------------------------------------------------
# racks


class Rack:
    """A finite groupoid x*y = table[x, y]; validated as a rack only on request."""

    def __init__(self, table, name: str = "R"):
        t = np.asarray(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise ValidationError("rack table must be square and non-empty")
        if t.min() < 0 or t.max() >= t.shape[0]:
            raise ValidationError("rack table entries out of range")
        t.setflags(write=False)
        self.table = t
        self.name = name

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __eq__(self, other) -> bool:
        return isinstance(other, Rack) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())


@dataclass(frozen=True)
class RackReport:
    r1: Check           # witness (x,) with I_x not bijective
    r2: Check           # witness (x, y, z)
    quandle: Check      # witness (x,) with x*x ≠ x
    inner_relation: Check | None   # I_{x*y} = I_y I_x I_y^-1; witness (x, y, z); only for racks

    @property
    def is_rack(self) -> bool:
        return bool(self.r1) and bool(self.r2)

    @property
    def is_quandle(self) -> bool:
        return self.is_rack and bool(self.quandle)

    def as_dict(self) -> dict:
        d = {"r1": self.r1.as_dict(), "r2": self.r2.as_dict(), "quandle": self.quandle.as_dict(),
             "is_rack": self.is_rack, "is_quandle": self.is_quandle}
        if self.inner_relation is not None:
            d["inner_relation"] = self.inner_relation.as_dict()
        return d


def rack_quandle_check(table) -> RackReport:
    t = table.table if isinstance(table, Rack) else np.asarray(table, dtype=np.int64)
    n = t.shape[0]
    cols = _is_perm_rows(t.T)       # I_x is column x
    r1 = Check(True) if cols.all() else Check(False, (int(np.flatnonzero(~cols)[0]),))
    x, y, z = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    bad = np.argwhere(t[t[x, y], z] != t[t[x, z], t[y, z]])
    r2 = Check(True) if not len(bad) else Check(False, tuple(int(v) for v in bad[0]))
    d = np.diagonal(t)
    badq = np.flatnonzero(d != np.arange(n))
    q = Check(True) if not len(badq) else Check(False, (int(badq[0]),))
    inner = None
    if bool(r1):
        Iinv = np.argsort(t, axis=0)                # Iinv[w, y] = I_y^-1(w)
        # I_{x*y}(z) = z*(x*y)  vs  I_y I_x I_y^-1(z) = ((I_y^-1 z) * x) * y
        lhs = t[z, t[x, y]]
        rhs = t[t[Iinv[z, y], x], y]
        badi = np.argwhere(lhs != rhs)
        inner = Check(True) if not len(badi) else Check(False, tuple(int(v) for v in badi[0]))
    return RackReport(r1, r2, q, inner)


def conj_quandle(G: FiniteGroup) -> Rack:
    """x*y = y^-1 x y."""
    x = np.arange(G.order)[:, None]
    y = np.arange(G.order)[None, :]
    return Rack(G.conj(x, y), f"Conj({G.name})")


def trivial_quandle(n: int) -> Rack:
    return Rack(np.repeat(np.arange(n)[:, None], n, axis=1), f"T{n}")


def shift_rack(n: int) -> Rack:
    """y*x = y + 1 mod n."""
    return Rack((np.arange(n)[:, None] + np.zeros(n, dtype=np.int64)[None, :] + 1) % n, f"shift{n}")


def solution_from_rack(R: Rack | np.ndarray) -> YbeSolution:
    """S(x, y) = (y, x*y)."""
    t = R.table if isinstance(R, Rack) else np.asarray(R, dtype=np.int64)
    n = t.shape[0]
    x, y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    return YbeSolution.from_maps(y, t, "S[rack]")


def rack_iff_sweep(n: int, sample: int | None = None, seed: int = 0) -> Check:
    """(x, y) ↦ (y, x*y) is a non-degenerate solution ⟺ (X, *) is a rack.

    Exhaustive over all n^(n²) tables unless ``sample`` is given.  Witness is the
    flattened table of the first disagreement.
    """
    if sample is None:
        tables = (np.array(c).reshape(n, n) for c in itertools.product(range(n), repeat=n * n))
    else:
        rng = np.random.default_rng(seed)
        tables = (rng.integers(0, n, size=(n, n)) for _ in range(sample))
    for t in tables:
        rep = rack_quandle_check(t)
        sol = verify_solution(solution_from_rack(t))
        if rep.is_rack != sol.ok:
            return Check(False, tuple(int(v) for v in t.reshape(-1)))
    return Check(True)


# ---------------------------------------------------------------------------
# S(x, y) = (y, B(y) x B(y)^-1)


@dataclass(frozen=True)
class DirectRbResult:
    solution: YbeSolution
    report: SolutionReport
    printed_identity: Check     # (B(b)^-1)^{B(c)} = B(b^{B(c)}); witness (b, c)
    central_criterion: Check    # B(y*z)^-1 B(z) B(y) B(z)^-1 ∈ Z(G); witness (y, z)

    @property
    def valid(self) -> bool:
        return self.report.ok

    @property
    def printed_agrees(self) -> bool:
        return self.valid == bool(self.printed_identity)

    @property
    def central_agrees(self) -> bool:
        return self.valid == bool(self.central_criterion)


def direct_rb_solution(op: RbOperator) -> DirectRbResult:
    G, B = op.group, op.images
    t, inv = G.table, G.inv
    n = G.order
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    second = t[t[B[y], x], inv[B[y]]]           # B(y) x B(y)^-1
    S = YbeSolution.from_maps(np.broadcast_to(y, (n, n)), second, f"D[{G.name}(B)]")
    report = verify_solution(S)
    b, c = x, y
    lhs = G.conj(inv[B[b]], B[c])
    rhs = B[G.conj(b, B[c])]
    printed = check_equal(lhs, np.broadcast_to(rhs, (n, n)))
    star = second                               # star[y, z] = y*z = B(z) y B(z)^-1
    Z = np.zeros(n, dtype=bool)
    Z[list(G.center().members)] = True
    yy, zz = x, y
    val = t[t[t[inv[B[star]], B[zz]], B[yy]], inv[B[zz]]]
    badc = np.argwhere(~Z[val])
    central = Check(True) if not len(badc) else Check(False, tuple(int(v) for v in badc[0]))
    return DirectRbResult(S, report, printed, central)
