from fractions import Fraction as F
from itertools import product, permutations

import pytest
from hypothesis import given, settings, strategies as st

from interpcat.basecat import builtin
from interpcat.scalar import Ring
from interpcat.partcomb import Recollement
from interpcat.interp import (bracket, singletons, identity, compose, tensor, InterpMorphism, random_morphism,
                              random_family, make_rng)
from interpcat.wreath import (WreathObject, specialize_morphism, specialize_object, compose_wreath, tensor_wreath,
                              identity_wreath, permute_slots, specialization_rank, oracle_check, oracle_suite)


def equality_patterns(m, n, d):
    """S_d-orbits on pairs of injective tuples (length m, n) in range(d), by brute force"""
    seen = set()
    for a in permutations(range(d), m):
        for b in permutations(range(d), n):
            lab, pat = {}, []
            for v in a + b:
                pat.append(lab.setdefault(v, len(lab)))
            seen.add(tuple(pat))
    return len(seen)


@pytest.mark.parametrize("d", [0, 1, 2, 3, 4, 5])
def test_specialization_rank_deligne(d):
    T = builtin("triv")
    A = bracket((), ())
    rk, total, low = specialization_rank(A, A, T, Ring(), d)
    assert total == 7
    assert rk == low == equality_patterns(2, 2, d)


def test_specialization_rank_frozen():
    T = builtin("triv")
    A = bracket((), ())
    assert [specialization_rank(A, A, T, Ring(), d)[0] for d in (1, 2, 3, 4)] == [0, 2, 6, 7]


def test_x_is_J_minus_I():
    T = builtin("triv")
    A = bracket(())
    x = InterpMorphism(A, A, T, Ring(), {(Recollement((1, 1), (0, 1)), (0, 0)): 1})
    M = specialize_morphism(x, 3).scalar_matrix()
    assert M == [[F(int(i != j)) for j in range(3)] for i in range(3)]
    assert specialize_morphism(identity(A, T, Ring()), 3) == identity_wreath(WreathObject(A, 3, T))


def test_specialized_ring_must_match():
    T = builtin("triv")
    A = bracket(())
    with pytest.raises(ValueError):
        specialize_morphism(identity(A, T, Ring(2)), 3)
    assert specialize_morphism(identity(A, T, Ring(3)), 3) == specialize_morphism(identity(A, T, Ring()), 3)


def test_zero_object_below_length():
    assert specialize_object(bracket((), (), ()), 2, builtin("triv")).is_zero()


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(1, 3))
def test_specialization_is_monoidal_functor(seed, d):
    rng = make_rng(seed)
    base = builtin(rng.choice(["triv", "graded2", "kz2"]))
    R = Ring()
    A, B, C = (bracket(*random_family(base, rng, 2)) for _ in range(3))
    f = random_morphism(A, B, base, R, rng)
    g = random_morphism(B, C, base, R, rng)
    assert oracle_check(g, f, d)["ok"]
    lhs = specialize_morphism(tensor(f, g), d)
    rhs = tensor_wreath(specialize_morphism(f, d), specialize_morphism(g, d))
    assert lhs == rhs


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_specialized_morphisms_are_equivariant(seed):
    rng = make_rng(seed)
    base = builtin("kz2")
    A, B = (bracket(*random_family(base, rng, 2)) for _ in range(2))
    W = specialize_morphism(random_morphism(A, B, base, Ring(), rng), 3)
    for g in permutations(range(3)):
        assert permute_slots(W, list(g)) == W


@pytest.mark.parametrize("name", ["triv", "graded2", "kz2"])
@pytest.mark.parametrize("d", [1, 2, 3])
def test_oracle_suite(name, d):
    rep = oracle_suite(builtin(name), d, 60, seed=d)
    assert rep["ok"], rep["failures"]


def test_wreath_shape_mismatch():
    T = builtin("triv")
    a = identity_wreath(WreathObject(bracket(()), 2, T))
    b = identity_wreath(WreathObject(bracket((), ()), 2, T))
    with pytest.raises(ValueError):
        compose_wreath(b, a)
