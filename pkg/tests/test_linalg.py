"""Exact linear algebra over the Gaussian rationals."""

from fractions import Fraction

from crsing import GaussRational, I, ONE, ZERO
from crsing.linalg import (
    det,
    identity,
    mat_mul,
    mat_vec,
    nullspace,
    nullspace_sparse,
    rank,
    rank_sparse,
    rref_sparse,
    solve,
    solve_many_sparse,
    to_sparse,
    transpose,
    conj_transpose,
    zeros,
)


def g(re, im=0):
    return GaussRational(Fraction(re), Fraction(im))


def test_rank_and_det():
    M = [[g(1), g(2)], [g(2), g(4)]]
    assert rank(M) == 1
    assert det(M) == ZERO
    N = [[g(1), I], [g(0), g(3)]]
    assert rank(N) == 2
    assert det(N) == g(3)


def test_identity_and_mul():
    M = [[g(1), g(2)], [g(3), g(4)]]
    assert mat_mul(M, identity(2)) == M
    assert mat_mul(identity(2), M) == M
    v = [g(1), g(-1)]
    assert mat_vec(M, v) == [g(-1), g(-1)]


def test_transpose_and_conj_transpose():
    M = [[g(1), I], [g(0), g(2)]]
    assert transpose(M) == [[g(1), g(0)], [I, g(2)]]
    assert conj_transpose(M) == [[g(1), g(0)], [-I, g(2)]]


def test_nullspace_orthogonality():
    M = [[g(1), g(2), g(3)], [g(2), g(4), g(6)]]
    basis = nullspace(M)
    assert len(basis) == 2
    for v in basis:
        assert mat_vec(M, v) == [ZERO, ZERO]


def test_solve_consistent_and_inconsistent():
    M = [[g(1), g(1)], [g(0), g(1)]]
    x, unique = solve(M, [g(3), g(1)])
    assert x == [g(2), g(1)]
    assert unique
    # rank-deficient, incompatible right-hand side
    M2 = [[g(1), g(1)], [g(2), g(2)]]
    assert solve(M2, [g(1), g(3)]) is None
    # rank-deficient but consistent: a solution exists, not unique
    x2, unique2 = solve(M2, [g(1), g(2)])
    assert mat_vec(M2, x2) == [g(1), g(2)]
    assert not unique2


def test_sparse_matches_dense():
    M = [
        [g(1), g(0), g(2)],
        [g(0), g(0), g(0)],
        [g(1), I, g(0)],
        [g(2), I, g(2)],
    ]
    assert rank_sparse(to_sparse(M), 3) == rank(M)
    for v in nullspace_sparse(to_sparse(M), 3):
        assert mat_vec(M, v) == [ZERO] * 4


def test_rref_sparse_pivots():
    rows = to_sparse([[g(0), g(2)], [g(1), g(1)]])
    reduced, pivots = rref_sparse(rows, 2)
    assert pivots == [0, 1]
    # reduced rows are unit in their pivot column
    for r, p in zip(reduced, pivots):
        assert r[p] == ONE


def test_solve_many_sparse():
    M = to_sparse([[g(1), g(0)], [g(0), g(1)], [g(1), g(1)]])
    rhs_good = [g(1), g(2), g(3)]
    rhs_bad = [g(1), g(2), g(4)]
    sols, unique = solve_many_sparse(M, 2, [rhs_good, rhs_bad])
    assert unique
    assert sols[0] == [g(1), g(2)]
    assert sols[1] is None


def test_zeros():
    assert zeros(2) == [[ZERO, ZERO], [ZERO, ZERO]]
    assert zeros(1, 3) == [[ZERO, ZERO, ZERO]]
