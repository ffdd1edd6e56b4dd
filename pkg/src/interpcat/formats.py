"""
Plain-text file formats.  Every file starts with a header line
``interpcat-<kind> <version>``; only version 1 exists and anything else
is rejected.  Writers are canonical (sorted keys, reduced fractions), so
write(read(text)) == text for any text produced by a writer.

kinds: presentation (linear category), bialgebra (module category over a
bialgebra), morphism, term, table.  See docs in README for the grammar.
"""

from fractions import Fraction
import os

from .scalar import Ring, Poly, scalar_to_text, scalar_from_text, parse_rational, fmt_frac
from .basecat import (LinearCatPresentation, BialgebraPresentation, ModuleObject, ModuleCategory,
                      builtin, BUILTINS)
from .partcomb import Recollement

VERSION = 1


class FormatError(ValueError):
    def __init__(self, msg, line=None, col=None):
        where = "" if line is None else "line %d, col %d: " % (line, col or 1)
        super().__init__(where + msg)
        self.line, self.col = line, col


# ---------------------------------------------------------------------------
# line reader


class _Lines:
    def __init__(self, text, kind):
        self.rows = []
        for k, raw in enumerate(text.splitlines(), 1):
            s = raw.split("#", 1)[0].rstrip()
            if s.strip():
                self.rows.append((k, s))
        if not self.rows:
            raise FormatError("empty file, expected header 'interpcat-%s %d'" % (kind, VERSION), 1, 1)
        ln, head = self.rows[0]
        parts = head.split()
        if len(parts) != 2 or parts[0] != "interpcat-" + kind:
            raise FormatError("expected header 'interpcat-%s %d', found %r" % (kind, VERSION, head), ln, 1)
        if parts[1] != str(VERSION):
            raise FormatError("unsupported %s format version %r (this reader knows %d)"
                              % (kind, parts[1], VERSION), ln, len(parts[0]) + 2)
        self.pos = 1

    def __iter__(self):
        while self.pos < len(self.rows):
            ln, s = self.rows[self.pos]
            self.pos += 1
            yield ln, s, s.split()


def _col(line, tok, start=0):
    i = line.find(tok, start)
    return i + 1 if i >= 0 else 1


def _num(tok, ln, line):
    try:
        return int(tok)
    except ValueError:
        raise FormatError("expected an integer, found %r" % tok, ln, _col(line, tok))


def _rat(tok, ln, line):
    try:
        return parse_rational(tok)
    except (ValueError, ZeroDivisionError) as e:
        raise FormatError("bad rational %r (%s)" % (tok, e), ln, _col(line, tok))


def _scal(tok, ring, ln, line):
    try:
        return scalar_from_text(tok, ring)
    except (ValueError, ZeroDivisionError) as e:
        raise FormatError("bad scalar %r (%s)" % (tok, e), ln, _col(line, tok))


def _sparse(toks, ln, line, key=int, val=None):
    out = {}
    for tok in toks:
        if ":" not in tok:
            raise FormatError("expected key:value, found %r" % tok, ln, _col(line, tok))
        k, v = tok.split(":", 1)
        try:
            kk = key(k)
        except ValueError:
            raise FormatError("bad key %r" % k, ln, _col(line, tok))
        out[kk] = val(v) if val else _rat(v, ln, line)
    return out


def _sp_text(d, keyfmt=str):
    return " ".join("%s:%s" % (keyfmt(k), scalar_to_text(v)) for k, v in sorted(d.items()) if v)


# ---------------------------------------------------------------------------
# ranks, words and objects


def rank_text(ring):
    return "symbolic" if ring.is_symbolic else fmt_frac(ring.t0)


def parse_rank(text):
    text = text.strip()
    if text in ("symbolic", "t"):
        return Ring()
    return Ring(parse_rational(text))


def word_text(w):
    if isinstance(w, tuple):
        return ".".join(w) if w else "1"
    return str(w)


def parse_word(tok, base=None):
    if isinstance(base, LinearCatPresentation):
        if tok not in base.objects:
            raise ValueError("unknown object %r (have %s)" % (tok, ", ".join(base.objects)))
        return tok
    if tok == "1":
        return ()
    w = tuple(tok.split("."))
    if base is not None and hasattr(base, "gens"):
        bad = [g for g in w if g not in base.gens]
        if bad:
            raise ValueError("unknown generator %r (have %s)" % (bad[0], ", ".join(sorted(base.gens)) or "none"))
    return w


def object_text(A):
    if not A.factors:
        return "<>"
    return " (x) ".join("<%s>" % ",".join(word_text(w) for w in f) for f in A.factors)


def parse_object(text, base=None):
    """'<1,1> (x) <R>', '1,1' (one bracket) or '<>' for the unit"""
    from .interp import BracketObject
    text = text.strip()
    if text in ("<>", ""):
        return BracketObject()
    if "<" not in text:
        pieces = [text]
    else:
        pieces = [p.strip() for p in text.split("(x)")]
    facs = []
    for p in pieces:
        if p.startswith("<"):
            if not p.endswith(">"):
                raise ValueError("unbalanced bracket in %r" % p)
            p = p[1:-1]
        p = p.strip()
        facs.append(tuple(parse_word(w.strip(), base) for w in p.split(",")) if p else ())
    return BracketObject(facs)


def resolve_base(where):
    """a built-in name or a path to a presentation / bialgebra file"""
    if where in BUILTINS:
        return builtin(where)
    if os.path.exists(where):
        with open(where) as fh:
            text = fh.read()
        head = text.lstrip().split(None, 1)[0] if text.strip() else ""
        if head == "interpcat-presentation":
            return read_presentation(text)
        if head == "interpcat-bialgebra":
            return read_bialgebra(text)
        raise FormatError("%s: not a presentation or bialgebra file (header %r)" % (where, head), 1, 1)
    raise KeyError("unknown base %r: not a built-in (%s) and no such file" % (where, ", ".join(sorted(BUILTINS))))


# ---------------------------------------------------------------------------
# presentation files


def write_presentation(P):
    out = ["interpcat-presentation %d" % VERSION, "name %s" % P.name, "objects " + " ".join(P.objects),
           "unit %s" % P.unit]
    for (X, Y), d in sorted(P.dims.items()):
        if d:
            out.append("hom %s %s %d" % (X, Y, d))
    for X in P.objects:
        out.append(("ident %s " % X + _sp_text(P.ident.get(X, {}))).rstrip())
    for (X, Y, Z, g, f), v in sorted(P.comp.items()):
        if v:
            out.append("comp %s %s %s %d %d %s" % (X, Y, Z, g, f, _sp_text(v)))
    out.append("end")
    return "\n".join(out) + "\n"


def read_presentation(text):
    L = _Lines(text, "presentation")
    name, objects, unit = "linear", None, None
    dims, ident, comp = {}, {}, {}
    ended = False
    for ln, line, t in L:
        if ended:
            raise FormatError("content after 'end'", ln, 1)
        kw = t[0]
        if kw == "name":
            name = t[1] if len(t) > 1 else name
        elif kw == "objects":
            objects = t[1:]
        elif kw == "unit":
            unit = t[1]
        elif kw == "hom":
            if len(t) != 4:
                raise FormatError("hom needs: hom X Y dim", ln, 1)
            dims[(t[1], t[2])] = _num(t[3], ln, line)
        elif kw == "ident":
            ident[t[1]] = _sparse(t[2:], ln, line)
        elif kw == "comp":
            if len(t) < 6:
                raise FormatError("comp needs: comp X Y Z g f k:c ...", ln, 1)
            comp[(t[1], t[2], t[3], _num(t[4], ln, line), _num(t[5], ln, line))] = _sparse(t[6:], ln, line)
        elif kw == "end":
            ended = True
        else:
            raise FormatError("unknown keyword %r" % kw, ln, _col(line, kw))
    if objects is None or unit is None:
        raise FormatError("presentation needs 'objects' and 'unit' lines", L.rows[0][0], 1)
    if not ended:
        raise FormatError("missing 'end'", L.rows[-1][0], 1)
    for X, Y in dims:
        for Z in (X, Y):
            if Z not in objects:
                raise FormatError("hom mentions unknown object %r" % Z, None)
    return LinearCatPresentation(objects, unit, dims, comp, ident, name=name)


# ---------------------------------------------------------------------------
# bialgebra files


def write_bialgebra(C):
    B = C.B
    out = ["interpcat-bialgebra %d" % VERSION, "name %s" % C.name, "algebra %s" % B.name, "dim %d" % B.n]
    for (i, j), v in sorted(B.mult.items()):
        if v:
            out.append("mult %d %d %s" % (i, j, _sp_text(v)))
    out.append("unit " + _sp_text(B.unit))
    for i, v in sorted(B.comult.items()):
        if v:
            out.append("comult %d %s" % (i, _sp_text(v, lambda k: "%d,%d" % k)))
    out.append("counit " + _sp_text(B.counit))
    if B.antipode is not None:
        for i, v in sorted(B.antipode.items()):
            out.append(("antipode %d %s" % (i, _sp_text(v))).rstrip())
    for nm in sorted(C.gens):
        if nm.endswith("*") and C.has_duals:
            continue
        M = C.gens[nm]
        out.append("module %s %d" % (M.name, M.dim))
        for i, A in enumerate(M.action):
            out.append("act %d %s" % (i, ";".join(",".join(fmt_frac(Fraction(x)) for x in row) for row in A)))
    out.append("end")
    return "\n".join(out) + "\n"


def read_bialgebra(text, check=True):
    L = _Lines(text, "bialgebra")
    name, aname, n = "modules", "bialgebra", None
    mult, unit, comult, counit, antipode = {}, {}, {}, {}, None
    modules = []
    ended = False

    def pair(k):
        a, b = k.split(",")
        return (int(a), int(b))

    for ln, line, t in L:
        if ended:
            raise FormatError("content after 'end'", ln, 1)
        kw = t[0]
        if kw == "name":
            name = t[1]
        elif kw == "algebra":
            aname = t[1]
        elif kw == "dim":
            n = _num(t[1], ln, line)
        elif kw == "mult":
            mult[(_num(t[1], ln, line), _num(t[2], ln, line))] = _sparse(t[3:], ln, line)
        elif kw == "unit":
            unit = _sparse(t[1:], ln, line)
        elif kw == "comult":
            comult[_num(t[1], ln, line)] = _sparse(t[2:], ln, line, key=pair)
        elif kw == "counit":
            counit = _sparse(t[1:], ln, line)
        elif kw == "antipode":
            antipode = antipode or {}
            antipode[_num(t[1], ln, line)] = _sparse(t[2:], ln, line)
        elif kw == "module":
            modules.append([t[1], _num(t[2], ln, line), {}])
        elif kw == "act":
            if not modules:
                raise FormatError("'act' before any 'module'", ln, 1)
            M = modules[-1]
            rows = [[_rat(x, ln, line) for x in r.split(",")] for r in t[2].split(";")] if len(t) > 2 else []
            if len(rows) != M[1] or any(len(r) != M[1] for r in rows):
                raise FormatError("action matrix of %s must be %dx%d" % (M[0], M[1], M[1]), ln, _col(line, t[2]))
            M[2][_num(t[1], ln, line)] = rows
        elif kw == "end":
            ended = True
        else:
            raise FormatError("unknown keyword %r" % kw, ln, _col(line, kw))
    if n is None:
        raise FormatError("missing 'dim'", L.rows[0][0], 1)
    if not ended:
        raise FormatError("missing 'end'", L.rows[-1][0], 1)
    B = BialgebraPresentation(n, mult, unit, comult, counit, antipode, name=aname)
    mods = []
    for nm, d, acts in modules:
        if sorted(acts) != list(range(n)):
            raise FormatError("module %s needs one 'act' line per basis element 0..%d" % (nm, n - 1))
        mods.append(ModuleObject(nm, d, [acts[i] for i in range(n)]))
    return ModuleCategory(B, mods, name=name, check=check)


# ---------------------------------------------------------------------------
# morphism files


def _ints(tok, ln, line):
    if tok == "-":
        return ()
    try:
        return tuple(int(x) for x in tok.split(","))
    except ValueError:
        raise FormatError("expected comma-separated integers, found %r" % tok, ln, _col(line, tok))


def write_morphism(f, base_name=None):
    out = ["interpcat-morphism %d" % VERSION, "base %s" % (base_name or f.base.name),
           "rank %s" % rank_text(f.ring), "basis %s" % f.basis,
           "source %s" % object_text(f.source), "target %s" % object_text(f.target)]
    for (r, idx), c in sorted(f.terms.items(), key=lambda kv: (kv[0][0].rgs, kv[0][1])):
        out.append("term %s %s %s" % (",".join(map(str, r.rgs)) or "-", ",".join(map(str, idx)) or "-",
                                      scalar_to_text(c)))
    out.append("end")
    return "\n".join(out) + "\n"


def read_morphism(text, base=None):
    from .interp import InterpMorphism
    L = _Lines(text, "morphism")
    head = {}
    terms = []
    ended = False
    for ln, line, t in L:
        if ended:
            raise FormatError("content after 'end'", ln, 1)
        kw = t[0]
        if kw in ("base", "rank", "basis"):
            head[kw] = (t[1] if len(t) > 1 else "", ln)
        elif kw in ("source", "target"):
            head[kw] = (line.split(None, 1)[1] if len(t) > 1 else "<>", ln)
        elif kw == "term":
            if len(t) != 4:
                raise FormatError("term needs: term <rgs> <idx> <coeff>", ln, 1)
            terms.append((ln, line, t))
        elif kw == "end":
            ended = True
        else:
            raise FormatError("unknown keyword %r" % kw, ln, _col(line, kw))
    for k in ("base", "rank", "source", "target"):
        if k not in head:
            raise FormatError("missing '%s' line" % k, L.rows[0][0], 1)
    if not ended:
        raise FormatError("missing 'end'", L.rows[-1][0], 1)
    if base is None:
        base = resolve_base(head["base"][0])
    try:
        ring = parse_rank(head["rank"][0])
    except (ValueError, ZeroDivisionError) as e:
        raise FormatError("bad rank (%s)" % e, head["rank"][1], 6)
    basis = head.get("basis", ("bracket", 0))[0]
    if basis not in ("bracket", "double"):
        raise FormatError("basis must be 'bracket' or 'double'", head["basis"][1], 7)
    try:
        S = parse_object(head["source"][0], base)
        T = parse_object(head["target"][0], base)
    except ValueError as e:
        raise FormatError(str(e), head["source"][1], 8)
    out = {}
    for ln, line, t in terms:
        rgs = _ints(t[1], ln, line)
        try:
            r = Recollement(S.sizes + T.sizes, rgs)
        except ValueError as e:
            raise FormatError(str(e), ln, _col(line, t[1]))
        if tuple(rgs) != r.rgs:
            raise FormatError("recollement labels %r are not in canonical form" % t[1], ln, _col(line, t[1]))
        idx = _ints(t[2], ln, line)
        if len(idx) != len(r):
            raise FormatError("%d indices for %d blocks" % (len(idx), len(r)), ln, _col(line, t[2]))
        out[(r, idx)] = _scal(t[3], ring, ln, line)
    return InterpMorphism(S, T, base, ring, out, basis)


# ---------------------------------------------------------------------------
# term files


def write_term(term, base_name, ring):
    return "interpcat-term %d\nbase %s\nrank %s\n%s\n" % (VERSION, base_name, rank_text(ring), term.sexp())


def read_term(text):
    """(base name, ring, term)"""
    from .diagrams import parse_term, TermError
    L = _Lines(text, "term")
    base_name, ring = None, None
    body_start = None
    for k in range(1, len(L.rows)):
        ln, line = L.rows[k]
        t = line.split()
        if t[0] == "base":
            base_name = t[1]
        elif t[0] == "rank":
            ring = parse_rank(t[1])
        else:
            body_start = k
            break
    if base_name is None or ring is None or body_start is None:
        raise FormatError("term file needs 'base', 'rank' and a term", L.rows[0][0], 1)
    first = L.rows[body_start][0]
    body = "\n".join(text.splitlines()[first - 1:])
    try:
        term = parse_term(body, ring)
    except TermError as e:
        msg = str(e)
        parts = msg.split(":", 2)
        if len(parts) == 3 and parts[0].isdigit():
            raise FormatError(parts[2].strip(), int(parts[0]) + first - 1, int(parts[1]))
        raise FormatError(msg, first, 1)
    return base_name, ring, term


# ---------------------------------------------------------------------------
# table files


def write_table(T):
    out = ["interpcat-table %d" % VERSION, "rank %s" % rank_text(T.ring), "dim %d" % T.n]
    for i, lab in enumerate(T.labels):
        out.append("label %d %s" % (i, lab))
    out.append("unit " + _sp_text(T.unit))
    for (i, j), v in sorted(T.consts.items()):
        for k, c in sorted(v.items()):
            out.append("const %d %d %d %s" % (i, j, k, scalar_to_text(c)))
    out.append("end")
    return "\n".join(out) + "\n"


def read_table(text):
    from .algtools import AlgebraTable
    L = _Lines(text, "table")
    ring, n, labels, unit, consts = None, None, {}, {}, {}
    ended = False
    for ln, line, t in L:
        if ended:
            raise FormatError("content after 'end'", ln, 1)
        kw = t[0]
        if kw == "rank":
            ring = parse_rank(t[1])
        elif kw == "dim":
            n = _num(t[1], ln, line)
        elif kw == "label":
            labels[_num(t[1], ln, line)] = line.split(None, 2)[2] if len(t) > 2 else ""
        elif kw == "unit":
            if ring is None:
                raise FormatError("'rank' must precede 'unit'", ln, 1)
            unit = _sparse(t[1:], ln, line, val=lambda v: _scal(v, ring, ln, line))
        elif kw == "const":
            if ring is None:
                raise FormatError("'rank' must precede 'const'", ln, 1)
            if len(t) != 5:
                raise FormatError("const needs: const i j k c", ln, 1)
            i, j, k = (_num(x, ln, line) for x in t[1:4])
            consts.setdefault((i, j), {})[k] = _scal(t[4], ring, ln, line)
        elif kw == "end":
            ended = True
        else:
            raise FormatError("unknown keyword %r" % kw, ln, _col(line, kw))
    if ring is None or n is None:
        raise FormatError("table needs 'rank' and 'dim'", L.rows[0][0], 1)
    if not ended:
        raise FormatError("missing 'end'", L.rows[-1][0], 1)
    lab = [labels.get(i, "e%d" % i) for i in range(n)]
    return AlgebraTable(n, consts, unit, ring, lab)
