from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from interpcat.partcomb import (SetPartition, Recollement, bell, enumerate_partitions, enumerate_recollements,
                                count_recollements_2, coarser_or_equal, common_refinement, mobius, restrict,
                                enumerate_compose_fibers, generated_closure, outer_restriction,
                                enumerate_tensor_fibers, interval, ResourceLimit)
import oracles


@pytest.mark.parametrize("n", range(8))
def test_bell_against_triangle(n):
    assert bell(n) == oracles.bell_triangle(n)
    assert len(enumerate_partitions(n)) == bell(n)


@pytest.mark.parametrize("sizes", [(1,), (2,), (1, 1), (2, 2), (3, 2), (1, 1, 1), (2, 1, 1), (2, 2, 1)])
def test_recollements_brute_force(sizes):
    got = [r.rgs for r in enumerate_recollements(sizes)]
    assert got == oracles.recollements(sizes)
    assert got == sorted(got)


@pytest.mark.parametrize("m,n", [(0, 0), (1, 1), (2, 2), (3, 3), (2, 3), (4, 1)])
def test_count_two_factors(m, n):
    assert count_recollements_2(m, n) == len(enumerate_recollements((m, n)))


def test_known_counts():
    assert count_recollements_2(2, 2) == 7
    assert count_recollements_2(3, 3) == 34
    assert len(enumerate_recollements((1,) * 6)) == 203


def test_limit():
    with pytest.raises(ResourceLimit):
        enumerate_partitions(13)
    assert len(enumerate_partitions(3, limit=3)) == 5


def test_recollement_rejects_glued_factor():
    with pytest.raises(ValueError):
        Recollement((2,), (0, 0))


def test_canonical_labels():
    r = Recollement((1, 1), ("b", "a"))
    assert r.rgs == (0, 1)
    assert Recollement.from_blocks((2, 2), [[0, 3], [1, 2]]).rgs == (0, 1, 1, 0)


recs = st.sampled_from(enumerate_recollements((2, 2)))


@given(recs, recs)
def test_refinement_lattice(p, q):
    m = common_refinement(p, q)
    assert coarser_or_equal(p, m) and coarser_or_equal(q, m)
    if coarser_or_equal(p, q) and coarser_or_equal(q, p):
        assert p == q


def _mobius_brute(s, r, allr):
    # recursive definition: mu(s,s)=1, sum_{s<=u<=r} mu(s,u) = 0
    memo = {}

    def mu(u):
        if u in memo:
            return memo[u]
        if u == s:
            memo[u] = 1
            return 1
        v = -sum(mu(w) for w in interval(s, u, allr) if w != u)
        memo[u] = v
        return v
    return mu(r)


@pytest.mark.parametrize("sizes", [(2, 2), (1, 1, 1), (2, 1)])
def test_mobius_against_recursion(sizes):
    allr = enumerate_recollements(sizes)
    for s in allr:
        for r in allr:
            if coarser_or_equal(s, r):
                assert mobius(s, r) == _mobius_brute(s, r, allr)


def test_restrict_and_outer():
    r = Recollement((1, 1, 1), (0, 0, 1))
    assert restrict(r, [0, 2]).rgs == (0, 1)
    assert outer_restriction(r, 1, 1).rgs == (0, 1)


@pytest.mark.parametrize("r_rgs,s_rgs", [((0, 1), (0, 0)), ((0, 0), (0, 1)), ((0, 1), (0, 1))])
def test_compose_fibers_restrict(r_rgs, s_rgs):
    r = Recollement((1, 1), r_rgs)
    s = Recollement((1, 1), s_rgs)
    fibers = enumerate_compose_fibers(r, s)
    assert fibers
    for u in fibers:
        assert restrict(u, [0, 1]) == r
        assert restrict(u, [1, 2]) == s


def test_compose_fibers_brute():
    # every u on (1,1,1) restricting to r on factors (0,1) and s on (1,2)
    for r in enumerate_recollements((1, 1)):
        for s in enumerate_recollements((1, 1)):
            brute = [u for u in enumerate_recollements((1, 1, 1))
                     if restrict(u, [0, 1]) == r and restrict(u, [1, 2]) == s]
            assert sorted(u.rgs for u in enumerate_compose_fibers(r, s)) == sorted(u.rgs for u in brute)


def test_tensor_fibers_brute():
    for r in enumerate_recollements((1, 1)):
        for s in enumerate_recollements((1, 1)):
            got = enumerate_tensor_fibers(r, s)
            brute = [u for u in enumerate_recollements((1, 1, 1, 1))
                     if restrict(u, [0, 2]) == r and restrict(u, [1, 3]) == s]
            assert sorted(u.rgs for u in got) == sorted(u.rgs for u in brute)


def test_set_partition_text():
    p = SetPartition.from_blocks([[0, 2], [1]], 3)
    assert p.rgs == (0, 1, 0)
    assert len(p) == 2
