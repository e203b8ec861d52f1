import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from brace_forge import braces as br
from brace_forge import groups as g
from brace_forge import rota_baxter as rb
from brace_forge import ybe
from brace_forge.catalog import catalog_groups, get_group
from brace_forge.errors import ValidationError


def pairs(S):
    return [[tuple(int(v) for v in S.pairs[x, y]) for y in range(S.order)] for x in range(S.order)]


def test_trivial_brace_solution_formula(S3):
    S = ybe.solution_from_brace(br.trivial_brace(S3))
    for a in range(6):
        for b in range(6):
            assert tuple(S.pairs[a, b]) == (b, S3.conj(a, b))


def test_trivial_abelian_brace_gives_flip():
    S = ybe.solution_from_brace(br.trivial_brace(get_group("C2xC2")))
    assert np.array_equal(S.pairs, ybe.flip(4).pairs)


def test_b1_solution_verified(B1):
    S = ybe.solution_from_brace(br.brace_from_rb(B1))
    assert ybe.verify_solution(S).ok and oracles.braid_relation(pairs(S))


def test_solution_from_rb_examples(S3, B1):
    S = ybe.solution_from_rb(rb.trivial_operator(S3))
    assert all(tuple(S.pairs[a, b]) == (b, S3.conj(a, b)) for a in range(6) for b in range(6))
    assert ybe.verify_solution(ybe.solution_from_rb(rb.inversion_operator(S3))).ok
    assert ybe.solution_from_rb(B1) == ybe.solution_from_brace(br.brace_from_rb(B1))


def test_verify_solution_examples(S3):
    rep = ybe.verify_solution(ybe.flip(5))
    assert rep.ok and rep.involutive
    for n in range(2, 7):
        rep = ybe.verify_solution(ybe.shift_flip(n))
        assert rep.ok and rep.nondegenerate and not rep.involutive
    rep = ybe.verify_solution(ybe.solution_from_brace(br.trivial_brace(S3)))
    assert rep.ok and not rep.involutive


def test_braid_failure_has_witness():
    # S(x, y) = (x+1, y): the two sides of the braid relation shift x by 2 and y by 1 or 2
    p = np.array([[((x + 1) % 3, y) for y in range(3)] for x in range(3)])
    rep = ybe.verify_solution(ybe.YbeSolution(p))
    assert not rep.braid and rep.braid.witness is not None
    assert not oracles.braid_relation(pairs(ybe.YbeSolution(p)))


def test_solution_pairs_validated():
    with pytest.raises(ValidationError):
        ybe.YbeSolution(np.full((2, 2, 2), 5))


def test_brace_solutions_sweep():
    for G in catalog_groups(8):
        for op in rb.enumerate_rb_operators(G):
            A = br.brace_from_rb(op)
            S = ybe.solution_from_brace(A)
            rep = ybe.verify_solution(S)
            assert rep.ok and rep.nondegenerate
            assert bool(rep.involutive) == G.is_abelian()
            assert S == ybe.solution_from_rb(op, check_against_brace=False)


def test_braid_check_matches_oracle_on_brace_solutions():
    for G in catalog_groups(6):
        for A in br.enumerate_braces(G):
            S = ybe.solution_from_brace(A)
            assert oracles.braid_relation(pairs(S))


def test_conjugation_examples(S3):
    S = ybe.solution_from_brace(br.enumerate_braces(S3)[2])
    ident = np.arange(36)
    assert ybe.conjugate_solution(S, ident).solution == S
    rf = ybe.rack_form(S)
    P = ybe.flip_map(6)
    psp = ybe.conjugate_solution(rf.solution, P)
    tau = rf.solution.tau
    assert all(tuple(psp.solution.pairs[x, y]) == (tau[x, y], x) for x in range(6) for y in range(6))
    assert psp.report.nondegenerate
    T = ybe.sigma_straightening(S)
    assert ybe.conjugate_solution(S, T).solution == rf.solution


def test_rack_form_examples(S3):
    rf = ybe.rack_form(ybe.solution_from_brace(br.trivial_brace(S3)))
    assert rf.formula and rf.uniqueness_condition
    assert np.array_equal(rf.rack.table, ybe.conj_quandle(S3).table)
    rf = ybe.rack_form(ybe.flip(4))
    assert rf.solution == ybe.flip(4)
    assert np.array_equal(rf.rack.table, ybe.trivial_quandle(4).table)
    for n in range(2, 13):
        rf = ybe.rack_form(ybe.shift_flip(n))
        assert rf.report.ok
        assert rf.uniqueness_condition.ok in (True, False)


def test_rack_form_of_brace_solutions():
    for G in catalog_groups(6):
        for A in br.enumerate_braces(G):
            rf = ybe.rack_form(ybe.solution_from_brace(A))
            assert rf.report.ok
            assert np.array_equal(rf.solution.sigma, np.tile(np.arange(A.order), (A.order, 1)))
            if br.verify_brace(A).trivial == "equal":
                assert all(tuple(rf.solution.pairs[a, b]) == (b, A.add.conj(a, b))
                           for a in range(A.order) for b in range(A.order))


def test_rack_examples(S3):
    rep = ybe.rack_quandle_check(ybe.trivial_quandle(4).table)
    assert rep.is_rack and rep.quandle
    rep = ybe.rack_quandle_check(ybe.conj_quandle(S3).table)
    assert rep.is_rack and rep.quandle and rep.inner_relation
    for n in range(2, 8):
        rep = ybe.rack_quandle_check(ybe.shift_rack(n).table)
        assert rep.is_rack and not rep.quandle


def test_solution_from_rack_examples(S3):
    assert ybe.solution_from_rack(ybe.trivial_quandle(3)) == ybe.flip(3)
    S = ybe.solution_from_rack(ybe.conj_quandle(S3))
    assert S == ybe.solution_from_brace(br.trivial_brace(S3))
    bad = np.array([[0, 0, 0], [1, 1, 2], [2, 2, 1]])     # right translations not bijective
    assert not oracles.is_rack(bad.tolist())
    rep = ybe.verify_solution(ybe.solution_from_rack(bad))
    assert not rep.ok


def test_self_distributivity_failure_breaks_braid():
    t = np.array([[0, 1, 0], [1, 0, 2], [2, 2, 1]])
    assert not oracles.is_rack(t.tolist())
    assert not ybe.rack_quandle_check(t).is_rack
    rep = ybe.verify_solution(ybe.solution_from_rack(t))
    assert not rep.braid or not rep.bijective


@pytest.mark.parametrize("n", [1, 2])
def test_rack_iff_braid_exhaustive_oracle(n):
    for flat in itertools.product(range(n), repeat=n * n):
        t = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        S = ybe.solution_from_rack(np.array(t))
        assert oracles.is_rack(t) == ybe.verify_solution(S).ok
        assert oracles.is_rack(t) == ybe.rack_quandle_check(np.array(t)).is_rack


def test_rack_iff_sweep():
    assert ybe.rack_iff_sweep(3)
    assert ybe.rack_iff_sweep(4, sample=300, seed=1)


def test_rack_type_implies_trivial_brace():
    for G in catalog_groups(6):
        for A in br.enumerate_braces(G):
            S = ybe.solution_from_brace(A)
            n = A.order
            rack_type = all(S.pairs[x, y, 0] == y for x in range(n) for y in range(n))
            if rack_type:
                assert br.verify_brace(A).trivial == "equal"


def test_direct_rb_examples(S3, B1):
    d = ybe.direct_rb_solution(rb.trivial_operator(S3))
    assert all(tuple(d.solution.pairs[x, y]) == (y, x) for x in range(6) for y in range(6))
    assert d.report.ok and d.printed_identity and d.central_criterion
    d = ybe.direct_rb_solution(B1)
    assert d.report.ok == bool(d.central_criterion) == bool(d.printed_identity) == False


def test_direct_rb_central_criterion_matches_rack_oracle():
    for G in catalog_groups(8):
        for op in rb.enumerate_rb_operators(G):
            d = ybe.direct_rb_solution(op)
            B, t = op.images, G.table
            star = [[int(t[t[B[z], y], G.inv[B[z]]]) for z in range(G.order)] for y in range(G.order)]
            assert d.report.ok == oracles.is_rack(star) == bool(d.central_criterion)


def test_direct_rb_printed_identity_counterexample():
    # inversion on C3: the solution is valid but the displayed identity fails at (b, c) = (1, 1)
    d = ybe.direct_rb_solution(rb.inversion_operator(g.cyclic(3)))
    assert d.report.ok and not d.printed_identity


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 3), st.data())
def test_random_tables_rack_iff_braid(n, data):
    flat = data.draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n))
    t = [flat[i * n:(i + 1) * n] for i in range(n)]
    S = ybe.solution_from_rack(np.array(t))
    assert oracles.is_rack(t) == ybe.verify_solution(S).ok
