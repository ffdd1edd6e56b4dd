from fractions import Fraction as F

import pytest

from interpcat.basecat import builtin
from interpcat.scalar import Ring, Poly
from interpcat.interp import bracket, singletons, double, InterpMorphism
from interpcat.partcomb import Recollement
from interpcat.karoubi import direct_sum, image, MatrixMorphism
from interpcat.algtools import (AlgebraTable, end_algebra, group_algebra_table, product_algebra, gram_det,
                                gram_matrix, rational_roots, radical, check_ideal, is_nilpotent_ideal,
                                quotient_by_ideal, count_simples, count_simples_bruteforce, NotSemisimple,
                                locality, is_local, filtration_ideal, symmetric_quotient, center,
                                formal_end_algebra)
import oracles

T = builtin("triv")


def E(m, ring):
    return end_algebra(bracket(*[()] * m), T, ring)


@pytest.fixture(scope="module")
def E2():
    return E(2, Ring())


def test_tables_are_associative(E2):
    assert E2.validate() == []
    assert E(2, Ring()).n == 7
    assert end_algebra(bracket((), ()), T, Ring(), basis="double").validate() == []
    assert group_algebra_table(3).validate() == []


def test_gram_dets_frozen(E2):
    t = Poly.var()
    assert gram_det(E(1, Ring())) == t * t
    ref = Poly([0, 0, 0, 0, 0, 0, -1024, 4096, -6656, 5632, -2624, 640, -64])
    assert gram_det(E2) == ref
    assert rational_roots(ref) == [0, 1, 2]


@pytest.mark.parametrize("m", [1, 2])
def test_gram_roots_natural(m):
    roots = rational_roots(gram_det(E(m, Ring())))
    assert roots and all(r.denominator == 1 and r >= 0 for r in roots)


@pytest.mark.parametrize("m", [1, 2])
def test_radical_generic_vs_integer(m):
    for t0 in (F(7, 2), F(-1), F(1, 3)):
        assert radical(E(m, Ring(t0))) == []
    assert any(radical(E(m, Ring(k))) for k in range(0, 2 * m + 1))


def test_gram_specializes(E2):
    for t0 in (F(7, 2), 0, 3):
        assert gram_det(E2.specialize(t0)) == gram_det(E2)(t0)


def test_ideal_and_quotient(E2):
    I = filtration_ideal(E2, 3)
    assert len(I) == 5
    assert check_ideal(E2, I) is None
    Q, I2, rep = symmetric_quotient(E2)
    assert len(I2) == 5 and Q.n == 2 and rep["ok"]


@pytest.mark.parametrize("m", [1, 2, 3])
def test_symmetric_quotient_all_m(m):
    Q, I, rep = symmetric_quotient(E(m, Ring(F(7, 2))))
    assert rep["ok"] and Q.n == len(list(__import__("itertools").permutations(range(m))))


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_filtration_ideals_two_sided(E2, d):
    assert check_ideal(E2, filtration_ideal(E2, d)) is None


def test_non_ideal_witness(E2):
    # the span of the identity is not an ideal
    x = [Poly.const(0)] * E2.n
    x[1] = Poly.const(1)
    assert check_ideal(E2, [x]) is not None


def test_radical_is_nilpotent_at_integer():
    A = E(2, Ring(1))
    rad = radical(A)
    assert rad and is_nilpotent_ideal(A, rad)
    Q = quotient_by_ideal(A, rad)
    assert Q.validate() == []
    with pytest.raises(NotSemisimple):
        count_simples(A)


def test_count_simples_fixtures():
    assert count_simples(group_algebra_table(3)) == (3, [1, 1, 2])
    assert count_simples(product_algebra(4)) == (4, [1, 1, 1, 1])
    assert len(center(group_algebra_table(3))) == 3


@pytest.mark.parametrize("m", [1, 2, 3])
def test_count_simples_generic(m):
    A = E(m, Ring(F(7, 2)))
    k, dims = count_simples(A)
    assert k == oracles.young_count(m) == {1: 2, 2: 4, 3: 7}[m]
    assert sum(d * d for d in dims) == A.n
    assert count_simples_bruteforce(A) == dims


def test_count_simples_needs_specialized(E2):
    with pytest.raises(ValueError):
        count_simples(E2)


def test_locality():
    R = Ring(F(7, 2))
    A = bracket(())
    x = InterpMorphism(A, A, T, R, {(Recollement((1, 1), (0, 1)), (0, 0)): 1})
    X = direct_sum([A], T, R)
    P = image(MatrixMorphism(X, X, [[double(x).scale(F(2, 7))]], check=False))
    End = formal_end_algebra(P)
    assert End.n == 1 and End.validate() == []
    assert locality(End) == ("local (split)", True)
    assert not is_local(E(1, R))
    assert locality(product_algebra(2))[1] is False


def test_table_specialize_roundtrip(E2):
    S = E2.specialize(F(7, 2))
    assert S.ring == Ring(F(7, 2)) and S.validate() == []
