import numpy as np
import pytest

import oracles
from brace_forge import braces as br
from brace_forge import embedding as em
from brace_forge import groups as g
from brace_forge import rota_baxter as rb
from brace_forge.catalog import catalog_groups, get_group
from brace_forge.errors import PreconditionError


def tilde_oracle(A):
    """(x,y)*(z,t) = (x∘z, y λ_x(t)) on index x*n+y, with λ_x(t) = x^-1 (x∘t)."""
    add, circ = A.add_table.tolist(), A.circ_table.tolist()
    n = len(add)
    inv = oracles.inverses(add)
    lam = [[add[inv[x]][circ[x][t]] for t in range(n)] for x in range(n)]
    return [[circ[x][z] * n + add[y][lam[x][t]]
             for z in range(n) for t in range(n)]
            for x in range(n) for y in range(n)]


def small_braces():
    for G in catalog_groups(6):
        yield from br.enumerate_braces(G)


def test_tilde_table_matches_oracle():
    for A in small_braces():
        t = tilde_oracle(A)
        assert em.tilde_table(A).tolist() == t
        assert oracles.is_group(t)


def test_trivial_brace_tilde_is_direct_square(S3):
    T = em.build_tilde(br.trivial_brace(S3))
    assert np.array_equal(T.group.table, g.direct_product(S3, S3).table)


def test_tilde_factorization_exact(B1):
    T = em.build_tilde(br.brace_from_rb(B1))
    assert T.group.order == 36
    assert set(T.H.members) & set(T.L.members) == {0}
    prods = {T.group.mul(h, l) for h in T.H for l in T.L}
    assert prods == set(range(36))
    assert oracles.rb_identity(T.group.table.tolist(), T.operator.images.tolist())


def test_embedding_examples(S3, B1):
    for A in (br.trivial_brace(g.cyclic(2)), br.brace_from_rb(B1)):
        r = em.verify_embedding(A)
        assert r.additive and r.multiplicative and r.injective and r.commutator and r.rb_commutator
    r = em.verify_embedding(br.opposite_brace(S3))
    assert r.additive and r.multiplicative and r.injective and r.rb_commutator


def test_tilde_commutator_in_terms_of_lambda():
    # [(e,h),(g,e)] = (e, h^-1 λ_{g'}(h)) where g' is the ∘-inverse of g
    for A in small_braces():
        T = em.build_tilde(A)
        n = A.order
        G = T.group
        for gg in range(n):
            gi = int(A.circ_inv[gg])
            for h in range(n):
                c = G.comm(T.psi[h], gg * n)
                assert c == A.add.mul(A.add.inv[h], A.lam[gi][h])


def test_embedding_sweep_definitional_checks():
    for G in catalog_groups(8):
        for op in rb.enumerate_rb_operators(G):
            r = em.verify_embedding(br.brace_from_rb(op))
            assert r.additive and r.multiplicative and r.injective and r.rb_commutator


def test_psi_normality_iff_strong_left_ideal():
    for A in small_braces():
        assert em.psi_normality_agrees(A)


def test_zeta_trivial_abelian():
    A = br.trivial_brace(get_group("C2xC2"))
    z = em.zeta_series(A)
    assert z.series[0] == frozenset(range(4)) and z.is_strong_left_nilpotent


def test_zeta_trivial_nilpotent_is_upper_central_series():
    for name in ("D4", "Q8"):
        G = get_group(name)
        z = em.zeta_series(br.trivial_brace(G))
        ucs = [frozenset(S.members) for S in g.upper_central_series(G)]
        ucs = [Z for Z in ucs if Z != frozenset({0})]      # Z_1, Z_2, ...
        assert z.is_strong_left_nilpotent
        assert z.series[:len(ucs)] == ucs and ucs[-1] == frozenset(range(G.order))


def test_zeta_trivial_s3_not_nilpotent(S3):
    z = em.zeta_series(br.trivial_brace(S3))
    assert z.series[0] == frozenset({0}) and not z.is_strong_left_nilpotent


def test_zeta_properties_small_braces():
    for A in small_braces():
        z = em.zeta_series(A)
        assert z.strong_left_ideals and z.psi_normal
        assert z.nilpotency_consequences is not False
        assert z.meets_left_center is not False


def test_recover_examples(S3, B1):
    assert em.recover_rb_complete(br.brace_from_rb(B1)) == B1
    assert em.recover_rb_complete(br.trivial_brace(S3)) == rb.trivial_operator(S3)
    for A in br.enumerate_braces(S3):
        assert br.brace_from_rb(em.recover_rb_complete(A)) == A


def test_recover_round_trip_all_s3_operators(S3):
    for op in rb.enumerate_rb_operators(S3):
        assert em.recover_rb_complete(br.brace_from_rb(op)) == op


def test_recover_requires_complete_group():
    with pytest.raises(PreconditionError):
        em.recover_rb_complete(br.trivial_brace(g.cyclic(3)))
