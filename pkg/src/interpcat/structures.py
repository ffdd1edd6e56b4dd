"""
Duals, traces and twists on the interpolation category induced from the
corresponding structure on the base.
"""

from .basecat import CapabilityError
from .interp import (BracketObject, UNIT, bracket, singletons, identity, mu, delta, iota, eps, gen,
                     braiding, compose, tensor, zero, InterpMorphism, _prod_sparse)
from .partcomb import Recollement


class DualData:
    def __init__(self, obj, dual, ev, coev):
        self.obj = obj
        self.dual = dual
        self.ev = ev
        self.coev = coev

    def snakes(self):
        """(coev-side snake, ev-side snake) both compared to identities"""
        base, ring = self.ev.base, self.ev.ring
        A, D = self.obj, self.dual
        s1 = compose(tensor(identity(A, base, ring), self.ev), tensor(self.coev, identity(A, base, ring)))
        s2 = compose(tensor(self.ev, identity(D, base, ring)), tensor(identity(D, base, ring), self.coev))
        return s1 == identity(A, base, ring), s2 == identity(D, base, ring)

    def validate(self):
        a, b = self.snakes()
        issues = []
        if not a:
            issues.append("(id (x) ev) o (coev (x) id) != id on %r" % (self.obj,))
        if not b:
            issues.append("(ev (x) id) o (id (x) coev) != id on %r" % (self.dual,))
        return issues


def bracket_dual(U, base, ring):
    """
    <U*> as a left dual of <U>:
    ev = eps o <ev_U> o mu(U*, U),  coev = Delta(U, U*) o <coev_U> o iota.
    """
    if not base.has_duals:
        raise CapabilityError("%s: base has no duals" % base.name)
    Ud = base.dual(U)
    UdU = base.tensor_objects([Ud, U])
    UUd = base.tensor_objects([U, Ud])
    ev = compose(eps(base, ring), compose(gen(base, ring, UdU, base.unit, base.ev(U)), mu(base, ring, Ud, U)))
    coev = compose(delta(base, ring, U, Ud), compose(gen(base, ring, base.unit, UUd, base.coev(U)), iota(base, ring)))
    return DualData(bracket(U), bracket(Ud), ev, coev)


# ---------------------------------------------------------------------------
# trace


def bar(f, X):
    """(id_B (x) mu(X,1)) o (f (x) id_<1>) o (id_A (x) Delta(X,1))"""
    base, ring = f.base, f.ring
    A, B = _strip(f.source, X), _strip(f.target, X)
    one = base.unit
    pre = tensor(identity(A, base, ring), delta(base, ring, X, one))
    post = tensor(identity(B, base, ring), mu(base, ring, X, one))
    mid = tensor(f, identity(bracket(one), base, ring))
    return compose(post, compose(mid, pre))


def _strip(obj, X):
    if not obj.factors or obj.factors[-1] != (tuple(X),):
        raise ValueError("%r does not end with the singleton bracket <%s>" % (obj, ".".join(X) or "1"))
    return BracketObject(obj.factors[:-1])


def trace(f, X):
    """
    Tr_<X> of f : A (x) <X> -> B (x) <X>.  On the image of the bar
    idempotent every term joins the two X points into one block; that
    block is traced in the base, and if nothing else is left in it the
    term becomes (t - #r) Tr_X(psi) times the remaining part.
    """
    base, ring = f.base, f.ring
    if not base.has_trace:
        raise CapabilityError("%s: base has no trace" % base.name)
    X = tuple(X)
    A, B = _strip(f.source, X), _strip(f.target, X)
    fb = bar(f, X)
    ns = f.source.n
    xs, xt = ns - 1, ns + f.target.n - 1
    na = A.n
    ent = fb.source.entries + fb.target.entries
    out = {}
    for (r, idx), c in fb.terms.items():
        b = r.rgs[xs]
        if r.rgs[xt] != b:
            raise ArithmeticError("bar image term keeps the X strands apart: %s" % r.block_text())
        rest = [x for x in r.blocks[b] if x not in (xs, xt)]
        U = base.tensor_objects([ent[x] for x in rest if x < ns])
        V = base.tensor_objects([ent[x] for x in rest if x >= ns])
        tr = base.trace(U, V, X, {idx[b]: 1})
        # new recollement on A, B without the X points
        keep = [x for x in range(len(r.rgs)) if x not in (xs, xt)]
        lab = [r.rgs[x] for x in keep]
        r2 = Recollement(A.sizes + B.sizes, lab)
        old_blocks = [k for k in range(len(r.blocks)) if k != b or rest]
        # canonical order of r2 blocks follows the first appearance in lab
        order = []
        for v in lab:
            if v not in order:
                order.append(v)
        if rest:
            for t_i, t_c in tr.items():
                new_idx = tuple(t_i if k == b else idx[k] for k in order)
                key = (r2, new_idx)
                out[key] = out.get(key, ring.zero) + c * t_c
        else:
            s = tr.get(0, 0)
            if s:
                new_idx = tuple(idx[k] for k in order)
                key = (r2, new_idx)
                out[key] = out.get(key, ring.zero) + c * s * (ring.t - len(r2))
    return InterpMorphism(A, B, base, ring, out)


def trace_over(f, words):
    """Tr over <X_1> (x) ... (x) <X_k> (the last k singleton factors): innermost first"""
    for X in reversed(list(words)):
        f = trace(f, X)
    return f


def inclusion(A, base, ring):
    """<U_1, ..., U_m> -> <U_1> (x) ... (x) <U_m>"""
    fam = A.family()
    S = singletons(*fam)
    m = len(fam)
    rgs = tuple(range(m)) + tuple(range(m))
    r = Recollement(A.sizes + S.sizes, rgs)
    vecs = [base.identity(U) for U in fam]
    return InterpMorphism(A, S, base, ring, {(r, k): c for k, c in _prod_sparse(vecs).items()})


def projection(A, base, ring):
    fam = A.family()
    S = singletons(*fam)
    m = len(fam)
    rgs = tuple(range(m)) + tuple(range(m))
    r = Recollement(S.sizes + A.sizes, rgs)
    vecs = [base.identity(U) for U in fam]
    return InterpMorphism(S, A, base, ring, {(r, k): c for k, c in _prod_sparse(vecs).items()})


def categorical_dim(A, base, ring):
    """dim of a bracket object (or tensor of brackets) via traces of the summand idempotent"""
    if not A.factors:
        return ring.one
    if len(A.factors) > 1:
        out = ring.one
        for fam in A.factors:
            out = out * categorical_dim(BracketObject([fam]), base, ring)
        return out
    fam = A.family()
    e = compose(inclusion(A, base, ring), projection(A, base, ring))
    s = trace_over(e, fam)
    return s.terms.get((Recollement((), ()), ()), ring.zero) if s.terms else ring.zero


def twist(U, base, ring):
    """theta(<U>) = Tr_<U>(tau(<U>, <U>))"""
    A = bracket(U)
    return trace(braiding(A, A, base, ring), U)


def twist_tensor(words, base, ring):
    """theta on <X_1> (x) ... (x) <X_k>: trace of the braiding of the object with itself"""
    A = singletons(*words)
    return trace_over(braiding(A, A, base, ring), words)
