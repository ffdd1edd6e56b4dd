from fractions import Fraction as F
import random

from hypothesis import given, settings, strategies as st

from interpcat.linalg import (rref, rank, nullspace, solve, in_span, matmul, identity, det_bareiss,
                              sparse_nullspace)
from interpcat.scalar import Poly, T

small = st.integers(-4, 4).map(F)
mats = st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)))


def _mv(M, v):
    return [sum((a * b for a, b in zip(row, v)), F(0)) for row in M]


@given(mats)
def test_nullspace_is_kernel(M):
    n = len(M[0])
    basis, free = nullspace(M, n)
    assert len(basis) + rank(M, n) == n
    for v in basis:
        assert all(x == 0 for x in _mv(M, v))


@given(mats)
def test_sparse_nullspace_matches_dense(M):
    n = len(M[0])
    rows = [{j: x for j, x in enumerate(r) if x} for r in M]
    sb, sfree = sparse_nullspace(rows, n)
    db, dfree = nullspace(M, n)
    assert list(sfree) == list(dfree)
    assert [list(v) for v in sb] == [list(v) for v in db]


@given(mats)
def test_solve_consistent(M):
    n = len(M[0])
    rng = random.Random(len(M))
    x = [F(rng.randint(-3, 3)) for _ in range(n)]
    b = _mv(M, x)
    sol = solve(M, b)
    assert sol is not None and _mv(M, sol) == b


def test_det_bareiss_rational_and_poly():
    M = [[F(2), F(1)], [F(1), F(3)]]
    assert det_bareiss(M) == 5
    P = [[T, Poly((1,))], [Poly((1,)), T]]
    assert det_bareiss(P) == T * T - 1
    I3 = identity(3)
    assert det_bareiss(I3) == 1
    assert matmul(I3, I3) == I3


def test_in_span():
    R, _ = rref([[F(1), F(1), F(0)]], 3)
    assert in_span(R, [F(2), F(2), F(0)])
    assert not in_span(R, [F(1), F(0), F(0)])
