import itertools

import numpy as np
import pytest

import oracles
from brace_forge import cyclic, symmetric
from brace_forge.errors import BoundExceeded, PreconditionError
from brace_forge.rb_algebra import (RbMatrix, algebra_rb_orbits, check_conditions,
                                    check_rb_identity_algebra, enumerate_algebra_rb, expected_count,
                                    group_rb_from_matrix)
from brace_forge.rota_baxter import is_rb_operator


def M(rows):
    return RbMatrix(np.array(rows))


def test_condition_examples():
    assert check_conditions(M([[0, 0], [0, 0]]))
    assert check_conditions(M([[-1, 0], [0, -1]]))
    assert not check_conditions(M([[0, 1], [1, 0]]))


def test_identity_examples():
    assert check_rb_identity_algebra(M([[0]]))
    assert not check_rb_identity_algebra(M([[1]]))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_conditions_match_identity_oracle(n):
    for flat in itertools.product((-1, 0, 1), repeat=n * n):
        r = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        assert check_conditions(M(r)) == oracles.algebra_rb_identity(r), r


def test_enumeration_counts():
    assert [len(enumerate_algebra_rb(n)) for n in (1, 2, 3)] == [2, 12, 128]
    assert {m.flat() for m in enumerate_algebra_rb(1)} == {(0,), (-1,)}
    assert [expected_count(n) for n in (1, 2, 3, 4)] == [2, 12, 128, 2000]


def test_enumeration_deterministic():
    a = [m.flat() for m in enumerate_algebra_rb(3)]
    assert a == [m.flat() for m in enumerate_algebra_rb(3)]
    assert len(set(a)) == len(a)


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        enumerate_algebra_rb(5)


def test_orbit_counts():
    assert algebra_rb_orbits(1).count == 2
    assert algebra_rb_orbits(2).count == 7
    assert algebra_rb_orbits(3).count == 26


def test_orbit_representatives_are_minimal():
    rep = algebra_rb_orbits(2)
    assert sum(rep.orbit_sizes) == 12
    for m in rep.representatives:
        perms = [m.permuted(p).flat() for p in itertools.permutations(range(2))]
        assert m.flat() == min(perms)


def test_lift_zero_and_minus_identity():
    G = cyclic(3)
    P, op = group_rb_from_matrix(M([[0, 0], [0, 0]]), G)
    assert P.order == 9 and not op.images.any()
    P, op = group_rb_from_matrix(M([[-1, 0], [0, -1]]), G)
    assert np.array_equal(op.images, P.inv)


def test_lift_s3_upper_triangular():
    P, op = group_rb_from_matrix(M([[-1, -1], [0, -1]]), symmetric(3))
    assert P.order == 36
    assert is_rb_operator(P, op.images)
    assert oracles.rb_identity(P.table.tolist(), op.images.tolist())


def test_lift_every_upper_triangular_matrix_n2():
    G = symmetric(3)
    for m in enumerate_algebra_rb(2):
        if m.is_upper_triangular():
            P, op = group_rb_from_matrix(m, G)
            assert is_rb_operator(P, op.images)


def test_lift_rejects_lower_triangular():
    with pytest.raises(PreconditionError):
        group_rb_from_matrix(M([[0, 0], [1, 0]]), cyclic(2))


def test_lift_rejects_non_automorphism():
    with pytest.raises(PreconditionError):
        group_rb_from_matrix(M([[-1, -1], [0, -1]]), cyclic(3), [np.array([0, 0, 0])])
