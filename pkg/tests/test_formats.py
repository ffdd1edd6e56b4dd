from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from interpcat.basecat import builtin, trivial_linear
from interpcat.scalar import Ring, Poly
from interpcat.interp import bracket, singletons, random_morphism, random_family, make_rng, to_double_bracket
from interpcat.algtools import end_algebra
from interpcat.diagrams import parse_term, evaluate
from interpcat.formats import (FormatError, write_presentation, read_presentation, write_bialgebra, read_bialgebra,
                               write_morphism, read_morphism, write_term, read_term, write_table, read_table,
                               parse_object, object_text, parse_rank, rank_text, resolve_base)


def test_presentation_round_trip():
    P = trivial_linear()
    text = write_presentation(P)
    Q = read_presentation(text)
    assert write_presentation(Q) == text
    assert Q.validate() == []


@pytest.mark.parametrize("name", ["triv", "graded2", "graded3", "kz2", "kz3"])
def test_bialgebra_round_trip(name):
    C = builtin(name)
    text = write_bialgebra(C)
    D = read_bialgebra(text)
    assert write_bialgebra(D) == text
    for U in C.sample_objects():
        for V in C.sample_objects():
            assert D.hom_dim(U, V) == C.hom_dim(U, V)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_morphism_round_trip(seed):
    rng = make_rng(seed)
    name = rng.choice(["triv", "graded2", "kz2"])
    base = builtin(name)
    ring = rng.choice([Ring(), Ring(F(7, 2)), Ring(-2)])
    A = bracket(*random_family(base, rng, 2)) @ bracket(*random_family(base, rng, 1))
    B = bracket(*random_family(base, rng, 2))
    f = random_morphism(A, B, base, ring, rng, nterms=5, deg=2)
    if rng.random() < 0.3 and len(A.factors) <= 1:
        f = to_double_bracket(f)
    text = write_morphism(f, name)
    g = read_morphism(text)
    assert g == f
    assert write_morphism(g, name) == text


def test_term_round_trip():
    R = Ring(F(1, 3))
    term = parse_term("(compose (scale 1/2 (mu R R)) (tensor (gen R R 1 -2/3) (id R)))", R)
    text = write_term(term, "kz2", R)
    name, ring, t2 = read_term(text)
    assert (name, ring) == ("kz2", R)
    assert write_term(t2, name, ring) == text
    assert evaluate(t2, builtin(name), ring) == evaluate(term, builtin("kz2"), R)


@pytest.mark.parametrize("R", [Ring(), Ring(F(7, 2))], ids=["symbolic", "7/2"])
def test_table_round_trip(R):
    T = end_algebra(bracket((), ()), builtin("triv"), R)
    text = write_table(T)
    U = read_table(text)
    assert write_table(U) == text
    assert U.consts == T.consts and U.unit == T.unit and U.labels == T.labels


@pytest.mark.parametrize("kind,text", [
    ("presentation", "interpcat-presentation 2\nobjects 1\nunit 1\nend\n"),
    ("bialgebra", "interpcat-bialgebra 0\ndim 1\nend\n"),
    ("morphism", "interpcat-morphism 1.1\nend\n"),
    ("term", "interpcat-term 9\nbase triv\nrank t\n(iota)\n"),
    ("table", "interpcat-table 2\nend\n"),
])
def test_unknown_versions_rejected(kind, text):
    reader = {"presentation": read_presentation, "bialgebra": read_bialgebra, "morphism": read_morphism,
              "term": read_term, "table": read_table}[kind]
    with pytest.raises(FormatError) as e:
        reader(text)
    assert "version" in str(e.value) and e.value.line == 1


def test_wrong_header():
    with pytest.raises(FormatError):
        read_morphism("interpcat-table 1\nend\n")
    with pytest.raises(FormatError):
        read_table("")


def test_morphism_errors_have_positions():
    good = write_morphism(random_morphism(bracket(("R",)), bracket(("R",)), builtin("kz2"), Ring(), make_rng(1)),
                          "kz2")
    lines = good.splitlines()
    k = next(i for i, l in enumerate(lines) if l.startswith("term"))
    bad = list(lines)
    bad[k] = "term 0,x 0 1"
    with pytest.raises(FormatError) as e:
        read_morphism("\n".join(bad))
    assert e.value.line == k + 1 and e.value.col == 6
    bad = list(lines)
    bad[k] = "term 1,0 0 1"
    with pytest.raises(FormatError) as e:
        read_morphism("\n".join(bad))
    assert "canonical" in str(e.value)
    with pytest.raises(FormatError):
        read_morphism("\n".join(lines[:-1]))


def test_term_errors_map_to_file_lines():
    text = "interpcat-term 1\nbase triv\nrank t\n(compose\n  (id 1)\n  (frob 1))\n"
    with pytest.raises(FormatError) as e:
        read_term(text)
    assert (e.value.line, e.value.col) == (6, 4)


def test_object_syntax():
    kz = builtin("kz2")
    A = parse_object("<1,R> (x) <R.R>", kz)
    assert A == bracket((), ("R",)) @ bracket(("R", "R"))
    assert parse_object(object_text(A), kz) == A
    assert parse_object("1,1") == bracket((), ())
    assert parse_object("<>") == bracket()
    with pytest.raises(ValueError):
        parse_object("<Q>", kz)
    assert rank_text(parse_rank("-7/2")) == "-7/2"
    assert parse_rank("symbolic").is_symbolic


def test_resolve_base_from_file(tmp_path):
    p = tmp_path / "lin.txt"
    p.write_text(write_presentation(trivial_linear()))
    assert resolve_base(str(p)).objects == trivial_linear().objects
    with pytest.raises(KeyError):
        resolve_base("no-such-base")
