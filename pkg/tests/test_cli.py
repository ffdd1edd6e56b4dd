import subprocess
import sys

import pytest

from interpcat import partcomb
from interpcat.cli import main
from interpcat.basecat import builtin, trivial_linear
from interpcat.scalar import Ring
from interpcat.interp import bracket, random_morphism, make_rng, compose, tensor
from interpcat.formats import write_morphism, write_presentation, write_bialgebra, read_morphism, read_table


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_bases(capsys):
    code, out, _ = run(capsys, "bases")
    assert code == 0
    assert "kz2" in out and "triv" in out and "linear only" in out


def test_relations(capsys):
    code, out, _ = run(capsys, "relations", "--base", "triv", "--t", "symbolic")
    assert code == 0
    assert out.count(" pass ") == 9 and "value t" in out and out.rstrip().endswith("result: pass")


def test_relations_needs_tensor(capsys, tmp_path):
    p = tmp_path / "lin.txt"
    p.write_text(write_presentation(trivial_linear()))
    code, _, err = run(capsys, "relations", "--base", str(p))
    assert code == 2 and "capability" in err


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "--base", "triv", "--rank", "2", "--trials", "50", "--seed", "7")
    assert code == 0 and "seed=7" in out and "(50/50 agree)" in out


def test_endalg_simples(capsys):
    code, out, _ = run(capsys, "endalg", "--object", "1,1", "--t", "7/2", "--analyze", "simples")
    assert code == 0
    assert "simples: 4 blocks, dims 1,1,1,2, sum of squares 7" in out


def test_endalg_defaults_and_export(capsys, tmp_path):
    code, out, _ = run(capsys, "endalg", "--object", "<1,1>")
    assert code == 0 and "rational roots: 0, 1, 2" in out
    code, out, _ = run(capsys, "endalg", "--object", "1,1", "--t", "1")
    assert code == 0 and "radical dim:" in out and "radical dim: 0" not in out
    code, out, _ = run(capsys, "endalg", "--object", "1,1", "--t", "1", "--analyze", "simples")
    assert code == 1 and "not semisimple" in out
    dest = tmp_path / "e2.txt"
    code, out, _ = run(capsys, "endalg", "--object", "1,1", "--t", "7/2", "--analyze", "quotient",
                       "--export", str(dest))
    assert code == 0 and "ideal dim: 5, quotient dim: 2" in out and "match" in out
    assert read_table(dest.read_text()).n == 7


def test_dim(capsys):
    code, out, _ = run(capsys, "dim", "--base", "kz2", "--object", "<R> (x) <R>", "--t", "3")
    assert code == 0 and out.strip() == "dim <R> (x) <R> = 36"


def _files(tmp_path):
    base = builtin("kz2")
    rng = make_rng(5)
    R = Ring()
    A, B = bracket(("R",)), bracket(("R",), ())
    f = random_morphism(A, B, base, R, rng)
    g = random_morphism(B, A, base, R, rng)
    pf, pg = tmp_path / "f.txt", tmp_path / "g.txt"
    pf.write_text(write_morphism(f, "kz2"))
    pg.write_text(write_morphism(g, "kz2"))
    return f, g, str(pf), str(pg)


def test_compose_and_tensor(capsys, tmp_path):
    f, g, pf, pg = _files(tmp_path)
    code, out, _ = run(capsys, "compose", pg, pf)
    assert code == 0 and read_morphism(out) == compose(g, f)
    code, out, _ = run(capsys, "tensor", pf, pg)
    assert code == 0 and read_morphism(out) == tensor(f, g)
    code, _, err = run(capsys, "compose", pf, pf)
    assert code == 2 and "cannot compose" in err


def test_eval(capsys, tmp_path):
    p = tmp_path / "t.txt"
    p.write_text("interpcat-term 1\nbase triv\nrank symbolic\n(compose (eps) (iota))\n")
    code, out, _ = run(capsys, "eval", str(p))
    assert code == 0 and "term - - [0,1]" in out
    p.write_text("interpcat-term 1\nbase triv\nrank symbolic\n(compose (eps)\n   (iota x))\n")
    code, _, err = run(capsys, "eval", str(p))
    assert code == 2 and "line 5, col 5" in err


def test_validate(capsys, tmp_path):
    p = tmp_path / "b.txt"
    p.write_text(write_bialgebra(builtin("kz2")))
    code, out, _ = run(capsys, "validate", str(p))
    assert code == 0 and "result: pass" in out
    bad = write_bialgebra(builtin("kz2")).replace("act 1 0,1;1,0", "act 1 0,2;1,0")
    p.write_text(bad)
    code, out, _ = run(capsys, "validate", str(p))
    assert code == 1 and "FAIL" in out
    p.write_text("interpcat-morphism 2\n")
    code, _, err = run(capsys, "validate", str(p))
    assert code == 2 and "version" in err


def test_limit_flag(capsys, monkeypatch):
    monkeypatch.setattr(partcomb, "DEFAULT_LIMIT", partcomb.DEFAULT_LIMIT)
    code, out, _ = run(capsys, "--limit", "12", "dim", "--object", "1,1,1")
    assert code == 0 and partcomb.DEFAULT_LIMIT == 12
    with pytest.raises(SystemExit):
        main(["--limit", "0", "bases"])


def test_reports_are_stable(capsys):
    a = run(capsys, "oracle", "--base", "kz2", "--rank", "3", "--trials", "10", "--seed", "11")
    b = run(capsys, "oracle", "--base", "kz2", "--rank", "3", "--trials", "10", "--seed", "11")
    assert a == b


def test_console_entry_point():
    p = subprocess.run([sys.executable, "-m", "interpcat.cli", "bases"], capture_output=True, text=True)
    assert p.returncode == 0 and "triv" in p.stdout
