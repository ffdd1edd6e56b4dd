from fractions import Fraction as F
import random

import pytest
from hypothesis import given, settings, strategies as st

from interpcat.basecat import builtin
from interpcat.scalar import Ring, Poly
from interpcat.partcomb import Recollement, enumerate_recollements
from interpcat.interp import singletons, bracket, identity, to_double_bracket, InterpMorphism, UNIT
from interpcat.diagrams import (TermError, Id, Gen, Mu, Delta, Braid, BraidInv, Iota, Eps, Compose, Tensor, Scale,
                                Sum, evaluate, parse_term, default_shape, Shape, standard_term, standard_sum,
                                standard_coordinates, from_standard_coordinates, relation_suite, RELATIONS)

KZ = builtin("kz2")
TRIV = builtin("triv")


def test_basic_evaluations(R):
    assert evaluate(Compose(Eps(), Iota()), TRIV, R) == R.t * identity(UNIT, TRIV, R)
    U = ("R",)
    W = KZ.tensor_objects([U, U])
    assert evaluate(Compose(Mu(U, U), Delta(U, U)), KZ, R) == identity(bracket(W), KZ, R)


EXAMPLE = """
; phi, psi on the crossed strands, xi born from the unit, then a second crossing
(compose
  (tensor (id R) (braid R R))
  (tensor (id R R) (compose (gen 1 R 5) (iota)))
  (tensor (gen R R 1 2) (gen R R 3 -1))
  (braid R R))
"""


def test_example_diagram_top_component(R):
    term = parse_term(EXAMPLE, R)
    f = evaluate(term, KZ, R)
    assert f.source == singletons(("R",), ("R",))
    assert f.target == singletons(("R",), ("R",), ("R",))
    # strand a ends at d3 through psi, strand b at d1 through phi, d2 comes from xi
    p = Recollement((1, 1, 1, 1, 1), (0, 1, 1, 2, 0))
    phi, psi, xi = {0: 1, 1: 2}, {0: 3, 1: -1}, {0: 5}
    expect = {(i, j, k): a * b * c for i, a in psi.items() for j, b in phi.items() for k, c in xi.items()}
    comps = f.components()
    assert comps[p] == expect
    assert all(len(r) < len(p) for r in comps if r != p)


def random_coords(p, U, V, base, rng):
    ent = list(U) + list(V)
    m = len(U)
    dims = []
    for b in p.blocks:
        s = base.tensor_objects([ent[x] for x in b if x < m])
        t = base.tensor_objects([ent[x] for x in b if x >= m])
        dims.append(base.hom_dim(s, t))
    from itertools import product
    idxs = list(product(*[range(d) for d in dims]))
    if not idxs:
        return {}
    return {i: F(rng.randint(-4, 4) or 1, rng.randint(1, 3)) for i in rng.sample(idxs, min(2, len(idxs)))}


@pytest.mark.parametrize("m,n", [(0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2), (0, 2)])
def test_standard_round_trip(base, m, n):
    rng = random.Random(100 * m + n)
    R = Ring()
    objs = [w for w in base.sample_objects()]
    for p in enumerate_recollements((1,) * (m + n)):
        for _ in range(2):
            U = [rng.choice(objs) for _ in range(m)]
            V = [rng.choice(objs) for _ in range(n)]
            c = random_coords(p, U, V, base, rng)
            if not c:
                continue
            s = standard_sum(p, c, U, V, base)
            f = evaluate(s, base, R)
            assert standard_coordinates(f) == {p: c}


def test_deligne_x_coordinates_match_double_brackets(R):
    A = singletons(())
    split = Recollement((1, 1), (0, 1))
    pair = Recollement((1, 1), (0, 0))
    x = InterpMorphism(A, A, TRIV, R, {(split, (0, 0)): 1})
    sc = standard_coordinates(x)
    dd = to_double_bracket(x).components()
    assert sc == dd == {split: {(0, 0): 1}, pair: {(0,): -1}}


def test_missing_shape_raises(R):
    A = singletons(())
    with pytest.raises(ValueError):
        standard_coordinates(identity(A, TRIV, R), shapes={})


def test_custom_shape_changes_term_not_value(R):
    p = Recollement((1, 1, 1, 1), (0, 1, 1, 0))
    U = [("R",), ("R",)]
    c = {(0, 1): F(2)}
    a = evaluate(standard_sum(p, c, U, U, KZ, Shape(p, (0, 1))), KZ, R)
    b = evaluate(standard_sum(p, c, U, U, KZ, Shape(p, (1, 0))), KZ, R)
    assert a.components()[p] == b.components()[p] == c
    with pytest.raises(ValueError):
        Shape(p, (0, 0))


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_linearity(seed):
    rng = random.Random(seed)
    R = Ring()
    U = ("R",)
    s = Gen(U, U, {0: rng.randint(-3, 3), 1: rng.randint(-3, 3)})
    u = Compose(Gen(U, U, {1: 1}), Gen(U, U, {0: 2, 1: 1}))
    a, b = Poly([rng.randint(-3, 3), 1]), F(rng.randint(-5, 5), 2)
    lhs = evaluate(Sum(Scale(a, s), Scale(b, u)), KZ, R)
    assert lhs == evaluate(s, KZ, R).scale(a) + evaluate(u, KZ, R).scale(b)


# ---------------------------------------------------------------------------
# rewrite pairs


def words(base):
    return [w for w in base.sample_objects()]


@pytest.mark.parametrize("name", ["triv", "graded2", "kz2"])
def test_reidemeister_moves(name):
    base = builtin(name)
    R = Ring()
    rng = random.Random(3)
    for _ in range(6):
        U, V, W = (rng.choice(words(base)) for _ in range(3))
        # II
        assert evaluate(Compose(BraidInv(V, U), Braid(U, V)), base, R) == evaluate(Id(U, V), base, R)
        # III
        lhs = Compose(Tensor(Braid(V, W), Id(U)), Tensor(Id(V), Braid(U, W)), Tensor(Braid(U, V), Id(W)))
        rhs = Compose(Tensor(Id(W), Braid(U, V)), Tensor(Braid(U, W), Id(V)), Tensor(Id(U), Braid(V, W)))
        assert evaluate(lhs, base, R) == evaluate(rhs, base, R)
        # a merge passes under a strand
        UV = base.tensor_objects([U, V])
        lhs = Compose(Braid(UV, W), Tensor(Mu(U, V), Id(W)))
        rhs = Compose(Tensor(Id(W), Mu(U, V)), Tensor(Braid(U, W), Id(V)), Tensor(Id(U), Braid(V, W)))
        assert evaluate(lhs, base, R) == evaluate(rhs, base, R)
        # a box jumps over a strand
        d = base.hom_dim(U, U)
        box = Gen(U, U, {d - 1: 1})
        lhs = Compose(Braid(U, W), Tensor(box, Id(W)))
        rhs = Compose(Tensor(Id(W), box), Braid(U, W))
        assert evaluate(lhs, base, R) == evaluate(rhs, base, R)


# ---------------------------------------------------------------------------
# text and typing errors


@pytest.mark.parametrize("text,where", [
    ("(compose (id R) (bogus R))", "1:18"),
    ("(gen R R x)", "1:10"),
    ("(mu R)", "1:2"),
    ("(id R)\n  (id R)", "2:3"),
    ("id R", "1:1"),
])
def test_parse_errors_carry_position(text, where):
    with pytest.raises(TermError) as e:
        parse_term(text)
    assert str(e.value).startswith(where)


def test_type_errors_name_subterm(R):
    with pytest.raises(TermError) as e:
        evaluate(Compose(Id(("R",), ("R",)), Id(("R",))), KZ, R)
    assert "(id R)" in str(e.value)
    with pytest.raises(TermError):
        evaluate(Sum(Id(("R",)), Id(())), KZ, R)
    with pytest.raises(TermError):
        evaluate(Gen(("R",), ("R",), {5: 1}), KZ, R)


def test_sexp_round_trip(R):
    term = parse_term(EXAMPLE, R)
    again = parse_term(term.sexp(), R)
    assert again.sexp() == term.sexp()
    assert evaluate(again, KZ, R) == evaluate(term, KZ, R)
    assert evaluate(parse_term("(compose (scale t (eps)) (iota))", R),
                    TRIV, R) == (R.t * R.t) * identity(UNIT, TRIV, R)


# ---------------------------------------------------------------------------
# relation suite


@pytest.mark.parametrize("R", [Ring(), Ring(F(7, 2)), Ring(2)], ids=["symbolic", "7/2", "2"])
def test_relation_suite(base, R):
    rep = relation_suite(base, R)
    assert sorted(rep) == sorted(RELATIONS)
    for name, r in rep.items():
        assert r["pass"], (name, r["failures"][:2])
        assert r["instances"] > 0
    assert rep["9-dimension"]["rank"] == R.t
