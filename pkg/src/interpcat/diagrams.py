"""
String-diagram terms over the generators <phi>, mu, Delta, iota, eps,
tau, tau^{-1}; evaluation into the engine, standard-form coordinates by
unitriangular extraction, and the relation suite.

Strings are labelled by base words (tuples of generator names).  A term
acts on tensor products of singleton brackets <U_1> (x) ... (x) <U_m>.
"""

import random
from fractions import Fraction

from .interp import (BracketObject, UNIT, singletons, bracket, identity, gen, mu, delta, iota, eps,
                     braiding, braiding_inv, compose, tensor, zero, InterpMorphism)
from .partcomb import Recollement, enumerate_recollements
from .basecat import CapabilityError


class TermError(ValueError):
    pass


class Term:
    def types(self, base):
        raise NotImplementedError

    def __matmul__(self, other):
        return Compose(self, other)

    def __add__(self, other):
        return Sum(self, other)

    def __rmul__(self, c):
        return Scale(c, self)

    def __sub__(self, other):
        return Sum(self, Scale(-1, other))


class Id(Term):
    def __init__(self, *words):
        self.words = tuple(tuple(w) for w in words)

    def types(self, base):
        A = singletons(*self.words)
        return A, A

    def sexp(self):
        return "(id%s)" % "".join(" " + _w(w) for w in self.words)


class Gen(Term):
    "<phi> for phi : U -> V given by sparse base coordinates"

    def __init__(self, U, V, vec):
        self.U, self.V = tuple(U), tuple(V)
        if isinstance(vec, (list, tuple)):
            vec = {i: c for i, c in enumerate(vec) if c}
        self.vec = dict(vec)

    def types(self, base):
        d = base.hom_dim(self.U, self.V)
        bad = [i for i in self.vec if not 0 <= i < d]
        if bad:
            raise TermError("gen %s -> %s: basis index %r outside 0..%d" % (_w(self.U), _w(self.V), bad[0], d - 1))
        return bracket(self.U), bracket(self.V)

    def sexp(self):
        d = max(self.vec) + 1 if self.vec else 0
        return "(gen %s %s%s)" % (_w(self.U), _w(self.V),
                                  "".join(" " + _c(self.vec.get(i, 0)) for i in range(d)))


class _Pair(Term):
    name = None

    def __init__(self, U, V):
        self.U, self.V = tuple(U), tuple(V)

    def sexp(self):
        return "(%s %s %s)" % (self.name, _w(self.U), _w(self.V))


class Mu(_Pair):
    name = "mu"

    def types(self, base):
        return singletons(self.U, self.V), bracket(base.tensor_objects([self.U, self.V]))


class Delta(_Pair):
    name = "delta"

    def types(self, base):
        return bracket(base.tensor_objects([self.U, self.V])), singletons(self.U, self.V)


class Braid(_Pair):
    name = "braid"

    def types(self, base):
        return singletons(self.U, self.V), singletons(self.V, self.U)


class BraidInv(_Pair):
    "tau(V, U)^{-1} : <U> (x) <V> -> <V> (x) <U>"
    name = "braid_inv"

    def types(self, base):
        return singletons(self.U, self.V), singletons(self.V, self.U)


class Iota(Term):
    def types(self, base):
        return UNIT, bracket(base.unit)

    def sexp(self):
        return "(iota)"


class Eps(Term):
    def types(self, base):
        return bracket(base.unit), UNIT

    def sexp(self):
        return "(eps)"


class Compose(Term):
    "parts[0] o parts[1] o ..."

    def __init__(self, *parts):
        if not parts:
            raise TermError("empty composite")
        self.parts = parts

    def types(self, base):
        ts = [p.types(base) for p in self.parts]
        for k in range(len(ts) - 1):
            if ts[k][0] != ts[k + 1][1]:
                raise TermError("composite mismatch at %s: source %r but the next factor %s lands in %r"
                                % (self.parts[k].sexp(), ts[k][0], self.parts[k + 1].sexp(), ts[k + 1][1]))
        return ts[-1][0], ts[0][1]

    def sexp(self):
        return "(compose %s)" % " ".join(p.sexp() for p in self.parts)


class Tensor(Term):
    def __init__(self, *parts):
        self.parts = parts

    def types(self, base):
        S, T = UNIT, UNIT
        for p in self.parts:
            a, b = p.types(base)
            S, T = S.tensor(a), T.tensor(b)
        return S, T

    def sexp(self):
        return "(tensor %s)" % " ".join(p.sexp() for p in self.parts)


class Scale(Term):
    def __init__(self, c, a):
        self.c, self.a = c, a

    def types(self, base):
        return self.a.types(base)

    def sexp(self):
        return "(scale %s %s)" % (_c(self.c), self.a.sexp())


class Sum(Term):
    def __init__(self, *parts):
        if not parts:
            raise TermError("empty sum has no type")
        self.parts = parts

    def types(self, base):
        ts = [p.types(base) for p in self.parts]
        for p, t in zip(self.parts[1:], ts[1:]):
            if t != ts[0]:
                raise TermError("sum of different hom spaces: %s has type %r -> %r, expected %r -> %r"
                                % (p.sexp(), t[0], t[1], ts[0][0], ts[0][1]))
        return ts[0]

    def sexp(self):
        return "(sum %s)" % " ".join(p.sexp() for p in self.parts)


def _w(U):
    return ".".join(U) if U else "1"


def _c(c):
    from .scalar import scalar_to_text
    return scalar_to_text(c)


# ---------------------------------------------------------------------------
# evaluation


def _flatten_sum(term, c, out):
    if isinstance(term, Sum):
        for p in term.parts:
            _flatten_sum(p, c, out)
    elif isinstance(term, Scale):
        _flatten_sum(term.a, c * term.c, out)
    else:
        out.append((c, term))


def evaluate(term, base, ring):
    term.types(base)
    return _ev(term, base, ring)


def _ev(term, base, ring):
    if isinstance(term, (Sum, Scale)):
        flat = []
        _flatten_sum(term, ring.one, flat)
        S, T = term.types(base)
        out = zero(S, T, base, ring)
        for c, t in flat:
            out = out + _ev(t, base, ring).scale(c)
        return out
    if isinstance(term, Id):
        return identity(singletons(*term.words), base, ring)
    if isinstance(term, Gen):
        return gen(base, ring, term.U, term.V, term.vec)
    if isinstance(term, Mu):
        return mu(base, ring, term.U, term.V)
    if isinstance(term, Delta):
        return delta(base, ring, term.U, term.V)
    if isinstance(term, Braid):
        return braiding(bracket(term.U), bracket(term.V), base, ring)
    if isinstance(term, BraidInv):
        return braiding_inv(bracket(term.U), bracket(term.V), base, ring)
    if isinstance(term, Iota):
        return iota(base, ring)
    if isinstance(term, Eps):
        return eps(base, ring)
    if isinstance(term, Compose):
        vals = [_ev(p, base, ring) for p in term.parts]
        out = vals[-1]
        for v in reversed(vals[:-1]):
            out = compose(v, out)
        return out
    if isinstance(term, Tensor):
        out = identity(UNIT, base, ring)
        for p in term.parts:
            out = tensor(out, _ev(p, base, ring))
        return out
    raise TermError("unknown term node %r" % (term,))


# ---------------------------------------------------------------------------
# s-expression text


def _tokens(text):
    out = []
    line, col, i = 1, 1, 0
    while i < len(text):
        ch = text[i]
        if ch == ";":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if ch == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch in "()":
            out.append((ch, line, col))
            i += 1
            col += 1
            continue
        j = i
        while j < len(text) and not text[j].isspace() and text[j] not in "();":
            j += 1
        out.append((text[i:j], line, col))
        col += j - i
        i = j
    return out


def _word(tok):
    s, line, col = tok
    if s == "1":
        return ()
    return tuple(s.split("."))


def parse_term(text, ring=None):
    """parse one s-expression term; errors carry line:column"""
    from .scalar import scalar_from_text, Ring
    ring = ring or Ring()

    def scalar(s):
        return ring.t if s == "t" else scalar_from_text(s, ring)
    toks = _tokens(text)
    pos = [0]

    def err(msg, tok):
        raise TermError("%d:%d: %s" % (tok[1], tok[2], msg))

    def nxt():
        if pos[0] >= len(toks):
            raise TermError("unexpected end of input")
        t = toks[pos[0]]
        pos[0] += 1
        return t

    def atoms_until_close():
        out = []
        while True:
            t = nxt()
            if t[0] == ")":
                return out
            if t[0] == "(":
                err("nested term not allowed here", t)
            out.append(t)

    def term():
        t = nxt()
        if t[0] != "(":
            err("expected '(' but found %r" % t[0], t)
        head = nxt()
        h = head[0]
        if h in ("compose", "tensor", "sum"):
            parts = []
            while toks[pos[0]][0] != ")" if pos[0] < len(toks) else False:
                parts.append(term())
            nxt()
            if h == "compose":
                if not parts:
                    err("empty compose", head)
                return Compose(*parts)
            if h == "sum":
                if not parts:
                    err("empty sum", head)
                return Sum(*parts)
            return Tensor(*parts)
        if h == "scale":
            c = nxt()
            try:
                val = scalar(c[0])
            except (ValueError, ZeroDivisionError) as e:
                err("bad scalar %r (%s)" % (c[0], e), c)
            a = term()
            close = nxt()
            if close[0] != ")":
                err("expected ')'", close)
            return Scale(val, a)
        args = atoms_until_close()
        if h == "id":
            return Id(*[_word(a) for a in args])
        if h == "gen":
            if len(args) < 2:
                err("gen needs source and target words", head)
            vec = {}
            for k, a in enumerate(args[2:]):
                try:
                    v = scalar(a[0])
                except (ValueError, ZeroDivisionError) as e:
                    err("bad coefficient %r (%s)" % (a[0], e), a)
                if v:
                    vec[k] = v
            return Gen(_word(args[0]), _word(args[1]), vec)
        cls = {"mu": Mu, "delta": Delta, "braid": Braid, "braid_inv": BraidInv}.get(h)
        if cls is not None:
            if len(args) != 2:
                err("%s takes two words" % h, head)
            return cls(_word(args[0]), _word(args[1]))
        if h in ("iota", "eps"):
            if args:
                err("%s takes no arguments" % h, head)
            return Iota() if h == "iota" else Eps()
        err("unknown generator %r" % h, head)

    out = term()
    if pos[0] != len(toks):
        err("trailing input after term", toks[pos[0]])
    return out


# ---------------------------------------------------------------------------
# standard form


class Shape:
    """order of the parts of p (as block indices of the recollement)"""

    def __init__(self, p, order):
        self.p = p
        self.order = tuple(order)
        if sorted(self.order) != list(range(len(p))):
            raise ValueError("shape order %r is not a permutation of the %d parts" % (self.order, len(p)))


def default_shape(p, m):
    """parts ordered by minimal upper index; parts without upper indices
    follow, ordered by minimal lower index"""
    blocks = p.blocks

    def key(k):
        up = [x for x in blocks[k] if x < m]
        return (0, min(up)) if up else (1, min(blocks[k]))
    return Shape(p, sorted(range(len(blocks)), key=key))


def _swaps(seq):
    """adjacent transpositions (positions) sorting range(n) into seq by bubble sort"""
    cur = list(range(len(seq)))
    target = {v: k for k, v in enumerate(seq)}
    out = []
    changed = True
    while changed:
        changed = False
        for i in range(len(cur) - 1):
            if target[cur[i]] > target[cur[i + 1]]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                out.append(i)
                changed = True
    return out


def _perm_term(words, seq, inverse=False):
    """
    tau^g : <w_0> (x) ... -> <w_seq[0]> (x) ... with positive crossings,
    or (inverse=True) its inverse <w_seq[0]> (x) ... -> <w_0> (x) ...
    """
    steps = []
    cur = list(range(len(words)))
    for i in _swaps(seq):
        a, b = words[cur[i]], words[cur[i + 1]]
        left = [words[x] for x in cur[:i]]
        right = [words[x] for x in cur[i + 2:]]
        steps.append((left, a, b, right))
        cur[i], cur[i + 1] = cur[i + 1], cur[i]
    parts = []
    for left, a, b, right in steps:
        if inverse:
            # tau(a, b)^{-1} : <b> (x) <a> -> <a> (x) <b>
            mid = BraidInv(b, a)
        else:
            mid = Braid(a, b)
        parts.append(_pad(left, mid, right))
    if not parts:
        return Id(*words)
    if inverse:
        return Compose(*parts)  # first step applied last
    return Compose(*reversed(parts))


def _pad(left, mid, right):
    pieces = []
    if left:
        pieces.append(Id(*left))
    pieces.append(mid)
    if right:
        pieces.append(Id(*right))
    return pieces[0] if len(pieces) == 1 else Tensor(*pieces)


def _merge_term(words, unit):
    "<w_1> (x) ... (x) <w_a> -> <w_1 ... w_a> by left-nested mu; iota when a = 0"
    if not words:
        return Iota()
    acc = list(words[0])
    parts = []
    for w in words[1:]:
        parts.append((tuple(acc), tuple(w), len(parts)))
        acc += list(w)
    steps = []
    for k, (a, b, _) in enumerate(parts):
        rest = [tuple(x) for x in words[k + 2:]]
        steps.append(_pad([], Mu(a, b), rest))
    if not steps:
        return Id(tuple(words[0]))
    return Compose(*reversed(steps))


def _split_term(words, unit):
    "<w_1 ... w_b> -> <w_1> (x) ... (x) <w_b> by left-nested Delta; eps when b = 0"
    if not words:
        return Eps()
    if len(words) == 1:
        return Id(tuple(words[0]))
    steps = []
    heads = []
    a = []
    for w in words:
        heads.append(tuple(a))
        a += list(w)
    for k in range(len(words) - 1, 0, -1):
        rest = [tuple(x) for x in words[k + 1:]]
        steps.append(_pad([], Delta(heads[k], tuple(words[k])), rest))
    return Compose(*reversed(steps))


def standard_term(p, idx, src_words, tgt_words, base, shape=None):
    """f_p applied to the basis tensor idx (one base basis index per block of p)"""
    m, n = len(src_words), len(tgt_words)
    shape = shape or default_shape(p, m)
    blocks = p.blocks
    ups, downs = [], []
    for k in shape.order:
        b = blocks[k]
        ups.append([x for x in b if x < m])
        downs.append([x - m for x in b if x >= m])
    seq_up = [x for u in ups for x in u]
    seq_dn = [y for d in downs for y in d]
    top = _perm_term([tuple(w) for w in src_words], seq_up)
    merges, boxes, splits = [], [], []
    for k, u, d in zip(shape.order, ups, downs):
        uw = [tuple(src_words[x]) for x in u]
        dw = [tuple(tgt_words[y]) for y in d]
        U = base.tensor_objects(uw)
        V = base.tensor_objects(dw)
        merges.append(_merge_term(uw, base.unit))
        boxes.append(Gen(U, V, {idx[k]: 1}))
        splits.append(_split_term(dw, base.unit))
    bottom = _perm_term([tuple(w) for w in tgt_words], seq_dn, inverse=True)
    return Compose(bottom, Tensor(*splits), Tensor(*boxes), Tensor(*merges), top)


def standard_sum(p, coords, src_words, tgt_words, base, shape=None):
    parts = [Scale(c, standard_term(p, idx, src_words, tgt_words, base, shape))
             for idx, c in sorted(coords.items())]
    if not parts:
        return None
    return Sum(*parts)


def _singleton_words(A):
    if any(len(f) != 1 for f in A.factors):
        raise ValueError("standard form needs a tensor product of singleton brackets, got %r" % (A,))
    return [f[0] for f in A.factors]


def standard_coordinates(f, shapes=None):
    """
    {p: {idx: coeff}} with f = sum_p f_p(coords_p), by descending block
    count (each f_p(Phi) is <Phi> plus terms at strictly coarser p).
    ``shapes`` maps p -> Shape; missing entries raise.
    """
    base, ring = f.base, f.ring
    U = _singleton_words(f.source)
    V = _singleton_words(f.target)
    m = len(U)
    rest = f
    out = {}
    while not rest.is_zero():
        comps = rest.components()
        p = max(comps, key=lambda r: (len(r), tuple(-x for x in r.rgs)))
        if shapes is None:
            sh = default_shape(p, m)
        else:
            if p not in shapes:
                raise ValueError("no shape given for partition %s" % p.block_text())
            sh = shapes[p]
        coords = comps[p]
        out[p] = dict(coords)
        rest = rest - evaluate(standard_sum(p, coords, U, V, base, sh), base, ring)
        if p in rest.components():
            raise ArithmeticError("unitriangularity failed at %s" % p.block_text())
    return out


def from_standard_coordinates(coords, A, B, base, ring, shapes=None):
    U, V = _singleton_words(A), _singleton_words(B)
    out = zero(A, B, base, ring)
    for p, c in coords.items():
        sh = shapes[p] if shapes else None
        s = standard_sum(p, c, U, V, base, sh)
        if s is not None:
            out = out + evaluate(s, base, ring)
    return out


# ---------------------------------------------------------------------------
# relation suite


def _rand_vec(base, U, V, rng):
    d = base.hom_dim(U, V)
    return {i: Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for i in range(d)}


def _words(base, max_len=2):
    gens = [w for w in base.sample_objects() if w != base.unit]
    out = [base.unit]
    layer = [base.unit]
    for _ in range(max_len):
        layer = [base.tensor_objects([a, g]) for a in layer for g in gens]
        out += layer
    seen, res = set(), []
    for w in out:
        if w not in seen:
            seen.add(w)
            res.append(w)
    return res


def _check(name, lhs, rhs, base, ring, report, label):
    rep = report[name]
    rep["instances"] += 1
    a, b = evaluate(lhs, base, ring), evaluate(rhs, base, ring)
    if a != b:
        rep["pass"] = False
        rep["failures"].append(label)


def relation_suite(base, ring, seed=0, max_len=2, triple_len=2, budget=64):
    """
    Evaluate both sides of the nine relations in RELATIONS on words up to
    ``max_len`` (``triple_len`` for the three-object relations).  Instances
    whose largest base object has dimension > ``budget`` are counted as
    skipped instead (None disables the cap).  Returns
    {name: {"pass", "instances", "skipped", "failures"}} plus "rank" for the
    dimension relation.
    """
    if not (base.has_tensor and base.has_braiding):
        raise CapabilityError("%s: the relation suite needs a tensor product and a braiding" % base.name)
    rng = random.Random(seed)
    W = _words(base, max_len)
    W3 = _words(base, triple_len)
    rep = {name: {"pass": True, "instances": 0, "skipped": 0, "failures": []} for name in RELATIONS[:-1]}
    dim_of = getattr(base, "dim_of", None)

    def fits(name, *objs):
        "objs: tuples of words, each tensored into one base object"
        if budget is None or dim_of is None:
            return True
        for ws in objs:
            d = 1
            for w in ws:
                d *= dim_of(w)
            if d > budget:
                rep[name]["skipped"] += 1
                return False
        return True
    # 1: functoriality and linearity of <.>
    for U in W:
        if not fits("1-functor", (U,)):
            continue
        _check("1-functor", Gen(U, U, base.identity(U)), Id(U), base, ring, rep, (U,))
        for V in W:
            if not fits("1-functor", (V,)) or not base.hom_dim(U, V):
                continue
            for X in W3:
                if not fits("1-functor", (U,), (V,), (X,)) or not base.hom_dim(V, X):
                    continue
                f, g = _rand_vec(base, U, V, rng), _rand_vec(base, V, X, rng)
                _check("1-functor", Gen(V, X, g) @ Gen(U, V, f), Gen(U, X, base.compose(U, V, X, g, f)),
                       base, ring, rep, (U, V, X))
            f, g = _rand_vec(base, U, V, rng), _rand_vec(base, U, V, rng)
            a, b = Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4), 3)
            lin = {i: a * f.get(i, 0) + b * g.get(i, 0) for i in set(f) | set(g)}
            _check("1-functor", Gen(U, V, lin), Sum(Scale(a, Gen(U, V, f)), Scale(b, Gen(U, V, g))),
                   base, ring, rep, (U, V))
    # 2: naturality of mu and Delta
    for U in W3:
        for V in W3:
            for U2 in W3:
                for V2 in W3:
                    if not (base.hom_dim(U, U2) and base.hom_dim(V, V2)):
                        continue
                    if not fits("2-natural", (U, V), (U2, V2)):
                        continue
                    f, g = _rand_vec(base, U, U2, rng), _rand_vec(base, V, V2, rng)
                    fg = _tensor_vec(base, U, U2, V, V2, f, g)
                    UV, UV2 = base.tensor_objects([U, V]), base.tensor_objects([U2, V2])
                    _check("2-natural", Mu(U2, V2) @ Tensor(Gen(U, U2, f), Gen(V, V2, g)),
                           Gen(UV, UV2, fg) @ Mu(U, V), base, ring, rep, (U, V, U2, V2))
                    _check("2-natural", Tensor(Gen(U, U2, f), Gen(V, V2, g)) @ Delta(U, V),
                           Delta(U2, V2) @ Gen(UV, UV2, fg), base, ring, rep, (U, V, U2, V2))
    T = base.tensor_objects
    # 3: associativity and coassociativity
    for U in W3:
        for V in W3:
            for X in W3:
                if not fits("3-assoc", (U, V, X)):
                    continue
                _check("3-assoc", Mu(T([U, V]), X) @ Tensor(Mu(U, V), Id(X)),
                       Mu(U, T([V, X])) @ Tensor(Id(U), Mu(V, X)), base, ring, rep, (U, V, X))
                _check("3-assoc", Tensor(Delta(U, V), Id(X)) @ Delta(T([U, V]), X),
                       Tensor(Id(U), Delta(V, X)) @ Delta(U, T([V, X])), base, ring, rep, (U, V, X))
    # 4: unit and counit
    one = base.unit
    for U in W:
        if not fits("4-unit", (U,)):
            continue
        _check("4-unit", Mu(U, one) @ Tensor(Id(U), Iota()), Id(U), base, ring, rep, (U,))
        _check("4-unit", Mu(one, U) @ Tensor(Iota(), Id(U)), Id(U), base, ring, rep, (U,))
        _check("4-unit", Tensor(Id(U), Eps()) @ Delta(U, one), Id(U), base, ring, rep, (U,))
        _check("4-unit", Tensor(Eps(), Id(U)) @ Delta(one, U), Id(U), base, ring, rep, (U,))
    # 5: compatibility with braidings
    if base.has_braiding:
        for U in W:
            for V in W:
                if not fits("5-braid", (U, V)):
                    continue
                s = base.braid(U, V)
                UV, VU = T([U, V]), T([V, U])
                _check("5-braid", Mu(V, U) @ Braid(U, V), Gen(UV, VU, s) @ Mu(U, V), base, ring, rep, (U, V))
                _check("5-braid", Delta(V, U) @ Gen(UV, VU, s), Braid(U, V) @ Delta(U, V), base, ring, rep, (U, V))
                si = base.braid_inv(U, V)
                _check("5-braid", Mu(V, U) @ BraidInv(U, V), Gen(UV, VU, si) @ Mu(U, V), base, ring, rep, (U, V))
    # 6: Frobenius compatibility
    for U in W3:
        for V in W3:
            for X in W3:
                if not fits("6-frobenius", (U, V, X)):
                    continue
                _check("6-frobenius", Tensor(Mu(U, V), Id(X)) @ Tensor(Id(U), Delta(V, X)),
                       Delta(T([U, V]), X) @ Mu(U, T([V, X])), base, ring, rep, (U, V, X))
                _check("6-frobenius", Tensor(Id(U), Mu(V, X)) @ Tensor(Delta(U, V), Id(X)),
                       Delta(U, T([V, X])) @ Mu(T([U, V]), X), base, ring, rep, (U, V, X))
    # 7: separability
    for U in W:
        for V in W:
            if not fits("7-separable", (U, V)):
                continue
            _check("7-separable", Mu(U, V) @ Delta(U, V), Id(T([U, V])), base, ring, rep, (U, V))
    # 8: quadratic relation
    if base.has_braiding:
        for U in W:
            for V in W:
                if not fits("8-quadratic", (U, V)):
                    continue
                UV, VU = T([U, V]), T([V, U])
                s, si = base.braid(U, V), base.braid_inv(U, V)
                diff = {i: s.get(i, 0) - si.get(i, 0) for i in set(s) | set(si)}
                _check("8-quadratic", Sum(Braid(U, V), Scale(-1, BraidInv(U, V))),
                       Delta(V, U) @ Gen(UV, VU, diff) @ Mu(U, V), base, ring, rep, (U, V))
    # 9: dimension
    val = evaluate(Eps() @ Iota(), base, ring)
    t_id = identity(UNIT, base, ring).scale(ring.t)
    rep["9-dimension"] = {"pass": val == t_id, "instances": 1, "skipped": 0, "failures": [] if val == t_id else ["eps o iota"],
                          "rank": _scalar_of(val)}
    return rep


def _scalar_of(f):
    if not f.terms:
        return f.ring.zero
    return next(iter(f.terms.values()))


def _tensor_vec(base, U1, V1, U2, V2, f, g):
    out = {}
    for a, x in f.items():
        for b, y in g.items():
            for c, z in base.tensor_basis(U1, V1, U2, V2, a, b).items():
                out[c] = out.get(c, 0) + x * y * z
    return {c: v for c, v in out.items() if v}


RELATIONS = ["1-functor", "2-natural", "3-assoc", "4-unit", "5-braid", "6-frobenius",
             "7-separable", "8-quadratic", "9-dimension"]
