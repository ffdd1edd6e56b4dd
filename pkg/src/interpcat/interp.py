"""
Morphisms of the interpolation category S_t(C).

Objects are tensor products <F_1> (x) ... (x) <F_m> of brackets of
families of base objects (a single bracket is the case m = 1, the unit
object is m = 0).  Empty families are dropped, so <> is the unit and
tensor products of objects are strictly associative.

A morphism A -> B is a sparse dict

    (r, idx) -> scalar

with r a recollement of the factors of A followed by those of B, and
idx a tuple holding one base-basis index per block of r (canonical block
order).  The block with source elements X and target elements Y stands
for a base morphism between the tensor words of the entries in X and in
Y; an empty side is the unit object.  Through the decomposition
<F_1> (x) ... (x) <F_m> = sum over p in R(F_1..F_m) of <T_p>, these keys
are exactly a basis of Hom(A, B).
"""

from fractions import Fraction
from itertools import combinations, permutations, product
import random

from .scalar import Ring, Poly, frac
from . import partcomb as pc
from .partcomb import Recollement, enumerate_recollements, enumerate_compose_fibers, enumerate_tensor_fibers
from .basecat import CapabilityError


class BracketObject:
    """<F_1> (x) ... (x) <F_m>; each family a tuple of base objects"""

    __slots__ = ("factors", "_hash")

    def __init__(self, factors=()):
        self.factors = tuple(tuple(f) for f in factors if len(f) > 0)
        self._hash = hash(self.factors)

    @property
    def sizes(self):
        return tuple(len(f) for f in self.factors)

    @property
    def entries(self):
        return tuple(e for f in self.factors for e in f)

    @property
    def n(self):
        return sum(len(f) for f in self.factors)

    def tensor(self, other):
        return BracketObject(self.factors + other.factors)

    __matmul__ = tensor

    def is_bracket(self):
        return len(self.factors) <= 1

    def family(self):
        if len(self.factors) > 1:
            raise ValueError("%r is a tensor product, not a single bracket" % (self,))
        return self.factors[0] if self.factors else ()

    def __eq__(self, other):
        return isinstance(other, BracketObject) and self.factors == other.factors

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return " (x) ".join("<%s>" % ",".join(map(_objtext, f)) for f in self.factors) or "<>"


def _objtext(U):
    if isinstance(U, tuple):
        return ".".join(U) if U else "1"
    return str(U)


def bracket(*entries):
    "the bracket <U_1, ..., U_m>"
    return BracketObject([entries])


def singletons(*entries):
    "<U_1> (x) ... (x) <U_m>"
    return BracketObject([(e,) for e in entries])


UNIT = BracketObject()


# ---------------------------------------------------------------------------
# block bookkeeping


_WORDS = {}


def block_words(base, S, T, r):
    "per block of r: (source word, target word)"
    key = (id(base), S, T, r)
    hit = _WORDS.get(key)
    if hit is not None:
        return hit
    ent = S.entries + T.entries
    ns = S.n
    out = []
    for b in r.blocks:
        src = base.tensor_objects([ent[x] for x in b if x < ns])
        tgt = base.tensor_objects([ent[x] for x in b if x >= ns])
        out.append((src, tgt))
    out = tuple(out)
    _WORDS[key] = out
    return out


def _prod_sparse(vecs):
    "tensor product of sparse vectors -> {idx tuple: coeff}"
    out = {(): Fraction(1)}
    for v in vecs:
        nxt = {}
        for k, c in out.items():
            for i, x in v.items():
                nxt[k + (i,)] = c * x
        out = nxt
        if not out:
            break
    return out


class InterpMorphism:
    """
    A morphism source -> target over ``base`` with scalars in ``ring``.
    ``basis`` is "bracket" (the <Phi> basis, the canonical store) or
    "double" (coordinates in the <<Phi>> basis, a view).
    """

    __slots__ = ("source", "target", "base", "ring", "terms", "basis")

    def __init__(self, source, target, base, ring, terms=None, basis="bracket"):
        self.source = source
        self.target = target
        self.base = base
        self.ring = ring
        self.basis = basis
        self.terms = {}
        if terms:
            for k, c in terms.items():
                c = ring.coerce(c)
                if c:
                    self.terms[k] = c

    # linear structure --------------------------------------------------

    def _like(self, terms, basis=None):
        m = InterpMorphism(self.source, self.target, self.base, self.ring, None, basis or self.basis)
        m.terms = {k: c for k, c in terms.items() if c}
        return m

    def _check_same(self, other):
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("hom-space mismatch: %r->%r vs %r->%r"
                             % (self.source, self.target, other.source, other.target))
        if self.ring != other.ring:
            raise ValueError("rank context mismatch: %r vs %r" % (self.ring, other.ring))
        if self.basis != other.basis:
            raise ValueError("basis mismatch: %s vs %s" % (self.basis, other.basis))

    def __add__(self, other):
        self._check_same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, self.ring.zero) + c
        return self._like(out)

    def __neg__(self):
        return self._like({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, a):
        a = self.ring.coerce(a)
        return self._like({k: a * c for k, c in self.terms.items()})

    def __rmul__(self, a):
        return self.scale(a)

    def __eq__(self, other):
        if not isinstance(other, InterpMorphism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target and self.ring == other.ring
                and self.basis == other.basis and self.terms == other.terms)

    def __hash__(self):
        return hash((self.source, self.target, len(self.terms)))

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        return "InterpMorphism(%r -> %r, %d terms, %s, %r)" % (
            self.source, self.target, len(self.terms), self.basis, self.ring)

    def __matmul__(self, other):
        "g @ f = g o f"
        return compose(self, other)

    def components(self):
        "r -> {idx: coeff}"
        out = {}
        for (r, idx), c in self.terms.items():
            out.setdefault(r, {})[idx] = c
        return out

    def specialize(self, t0):
        "image under T -> t0"
        ring = Ring(t0)
        if not self.ring.is_symbolic and self.ring != ring:
            raise ValueError("morphism lives at %r, cannot move to %r" % (self.ring, ring))
        return InterpMorphism(self.source, self.target, self.base, ring,
                              {k: ring.coerce(c) for k, c in self.terms.items()}, self.basis)

    def lengths(self):
        return sorted({len(r) for (r, _) in self.terms})


def zero(A, B, base, ring, basis="bracket"):
    return InterpMorphism(A, B, base, ring, None, basis)


def hom_basis(A, B, base, limit=None):
    """basis keys of Hom(A, B): recollements x lexicographic base indices"""
    keys = []
    for r in enumerate_recollements(A.sizes + B.sizes, limit):
        dims = [base.hom_dim(s, t) for s, t in block_words(base, A, B, r)]
        for idx in product(*[range(d) for d in dims]):
            keys.append((r, idx))
    return keys


def hom_dim(A, B, base, limit=None):
    tot = 0
    for r in enumerate_recollements(A.sizes + B.sizes, limit):
        d = 1
        for s, t in block_words(base, A, B, r):
            d *= base.hom_dim(s, t)
            if not d:
                break
        tot += d
    return tot


def basis_element(A, B, base, ring, key, basis="bracket"):
    return InterpMorphism(A, B, base, ring, {key: ring.one}, basis)


def from_components(A, B, base, ring, comps):
    "comps: {recollement: {idx: coeff}} or {recollement: sparse dict per block list}"
    terms = {}
    for r, v in comps.items():
        for idx, c in v.items():
            terms[(r, tuple(idx))] = c
    return InterpMorphism(A, B, base, ring, terms)


# ---------------------------------------------------------------------------
# distinguished morphisms


def _pair_rgs(rgs):
    return tuple(rgs) + tuple(rgs)


def identity(A, base, ring):
    """sum over p in R(factors of A) of the pairing component with identity coordinates"""
    terms = {}
    for p in enumerate_recollements(A.sizes):
        r = Recollement(A.sizes + A.sizes, _pair_rgs(p.rgs), check=False)
        vecs = [base.identity(s) for s, _ in block_words(base, A, A, r)]
        for idx, c in _prod_sparse(vecs).items():
            terms[(r, idx)] = c
    return InterpMorphism(A, A, base, ring, terms)


def gen(base, ring, U, V, vec):
    """<phi> : <U> -> <V> for the base morphism with coordinates ``vec``"""
    A, B = bracket(U), bracket(V)
    r = Recollement((1, 1), (0, 0), check=False)
    if isinstance(vec, (list, tuple)):
        vec = {i: c for i, c in enumerate(vec) if c}
    return InterpMorphism(A, B, base, ring, {(r, (i,)): c for i, c in vec.items()})


def mu(base, ring, U, V):
    "<U> (x) <V> -> <U (x) V>, projection onto the merged summand"
    W = base.tensor_objects([U, V])
    r = Recollement((1, 1, 1), (0, 0, 0), check=False)
    return InterpMorphism(singletons(U, V), bracket(W), base, ring,
                          {(r, idx): c for idx, c in _prod_sparse([base.identity(W)]).items()})


def delta(base, ring, U, V):
    "<U (x) V> -> <U> (x) <V>, the section of mu"
    W = base.tensor_objects([U, V])
    r = Recollement((1, 1, 1), (0, 0, 0), check=False)
    return InterpMorphism(bracket(W), singletons(U, V), base, ring,
                          {(r, idx): c for idx, c in _prod_sparse([base.identity(W)]).items()})


def iota(base, ring):
    "<> -> <1_C>"
    r = Recollement((1,), (0,), check=False)
    return InterpMorphism(UNIT, bracket(base.unit), base, ring, {(r, (0,)): 1})


def eps(base, ring):
    "<1_C> -> <>"
    r = Recollement((1,), (0,), check=False)
    return InterpMorphism(bracket(base.unit), UNIT, base, ring, {(r, (0,)): 1})


def _braid_generic(A, B, base, ring, inverse=False):
    if not base.has_braiding:
        raise CapabilityError("%s: base has no braiding" % base.name)
    nA, nB = A.n, B.n
    src = A.tensor(B)
    tgt = B.tensor(A)
    ent = src.entries
    terms = {}
    for p in enumerate_recollements(A.sizes + B.sizes):
        rg = p.rgs
        rgs = tuple(rg) + tuple(rg[nA:]) + tuple(rg[:nA])
        r = Recollement(src.sizes + tgt.sizes, rgs, check=False)
        vecs = []
        for b in p.blocks:
            ua = base.tensor_objects([ent[x] for x in b if x < nA])
            ub = base.tensor_objects([ent[x] for x in b if x >= nA])
            if any(x < nA for x in b) and any(x >= nA for x in b):
                vecs.append(base.braid_inv(ua, ub) if inverse else base.braid(ua, ub))
            else:
                w = base.tensor_objects([ua, ub])
                vecs.append(base.identity(w))
        # blocks of r are in the same order as those of p
        for idx, c in _prod_sparse(vecs).items():
            terms[(r, idx)] = c
    return InterpMorphism(src, tgt, base, ring, terms)


def braiding(A, B, base, ring):
    "tau(A, B): A (x) B -> B (x) A"
    return _braid_generic(A, B, base, ring)


def braiding_inv(A, B, base, ring):
    "tau(B, A)^{-1}: A (x) B -> B (x) A"
    return _braid_generic(A, B, base, ring, inverse=True)


# ---------------------------------------------------------------------------
# composition


_PLANS = {}


def _compose_plan(base, S, M, T, r, s):
    """
    For every fiber u of (r, s): (w, coefficient range, per-w-block
    (src, mid, tgt, r-block or None, s-block or None), orphans).
    """
    key = (id(base), S, M, T, r, s)
    hit = _PLANS.get(key)
    if hit is not None:
        return hit
    nI, nJ = S.n, M.n
    mid = len(M.factors)
    # the middle summands must agree
    if tuple(pc._canon(r.rgs[nI:])) != tuple(pc._canon(s.rgs[:nJ])):
        _PLANS[key] = ()
        return ()
    rw = block_words(base, S, M, r)
    sw = block_words(base, M, T, s)
    unit = base.unit
    nL = len(S.factors)
    plans = []
    for u in enumerate_compose_fibers(r, s, mid=mid):
        w = pc.outer_restriction(u, nL, mid)
        ublocks = u.blocks

        def parts(ub):
            rb = sb = None
            for x in ub:
                if x < nI + nJ:
                    rb = r.rgs[x]
                if x >= nI:
                    sb = s.rgs[x - nI]
            return rb, sb

        def words(rb, sb):
            src = rw[rb][0] if rb is not None else unit
            midw = rw[rb][1] if rb is not None else sw[sb][0]
            tgt = sw[sb][1] if sb is not None else unit
            return src, midw, tgt

        wblocks = []
        for b in w.blocks:
            x = b[0]
            gx = x if x < nI else x + nJ
            ub = ublocks[u.rgs[gx]]
            rb, sb = parts(ub)
            wblocks.append(words(rb, sb) + (rb, sb))
        orphans = []
        for ub in ublocks:
            if all(nI <= x < nI + nJ for x in ub):
                rb, sb = parts(ub)
                orphans.append(words(rb, sb) + (rb, sb))
        assert len(w) + len(orphans) == len(u)
        plans.append((w, (len(w), len(u)), tuple(wblocks), tuple(orphans)))
    # pi_13 is injective on the fibers
    assert len({p[0] for p in plans}) == len(plans)
    plans = tuple(plans)
    _PLANS[key] = plans
    return plans


def _contract(base, words_rb_sb, ridx, sidx):
    src, midw, tgt, rb, sb = words_rb_sb
    f = ridx[rb] if rb is not None else 0
    g = sidx[sb] if sb is not None else 0
    return base.compose_basis(src, midw, tgt, g, f)


def compose(Psi, Phi):
    """Psi o Phi"""
    if Phi.target != Psi.source:
        raise ValueError("cannot compose: target %r != source %r" % (Phi.target, Psi.source))
    if Phi.ring != Psi.ring:
        raise ValueError("rank context mismatch: %r vs %r" % (Phi.ring, Psi.ring))
    if Phi.basis != "bracket" or Psi.basis != "bracket":
        raise ValueError("compose works in the bracket basis; use compose_double_bracket")
    base, ring = Phi.base, Phi.ring
    S, M, T = Phi.source, Phi.target, Psi.target
    out = {}
    pcomp = Phi.components()
    qcomp = Psi.components()
    zero_ = ring.zero
    for r, rterms in pcomp.items():
        for s, sterms in qcomp.items():
            plans = _compose_plan(base, S, M, T, r, s)
            if not plans:
                continue
            pairs = [(ridx, sidx, cr * cs) for ridx, cr in rterms.items() for sidx, cs in sterms.items()]
            for w, (lo, hi), wblocks, orphans in plans:
                # sum the contractions first, multiply by P_u(t) once per output key
                inner = {}
                for ridx, sidx, sc in pairs:
                    for o in orphans:
                        x = _contract(base, o, ridx, sidx).get(0, 0)
                        if not x:
                            sc = zero_
                            break
                        if x != 1:
                            sc = sc * x
                    if not sc:
                        continue
                    vecs = [_contract(base, b, ridx, sidx) for b in wblocks]
                    for idx, c in _prod_sparse(vecs).items():
                        inner[idx] = inner.get(idx, zero_) + (sc if c == 1 else sc * c)
                if not inner:
                    continue
                coef = ring.falling(lo, hi)
                for idx, v in inner.items():
                    if v:
                        k = (w, idx)
                        out[k] = out.get(k, zero_) + coef * v
    return InterpMorphism(S, T, base, ring, {k: c for k, c in out.items() if c})


# ---------------------------------------------------------------------------
# tensor product


_TPLANS = {}


def _tensor_plan(base, A, B, C, D, r, s):
    key = (id(base), A, B, C, D, r, s)
    hit = _TPLANS.get(key)
    if hit is not None:
        return hit
    nA, nC, nB = A.n, C.n, B.n
    rw = block_words(base, A, B, r)
    sw = block_words(base, C, D, s)
    fibers = enumerate_tensor_fibers(r, s, len(A.factors), len(C.factors))
    plans = []
    for u in fibers:
        ub = []
        for b in u.blocks:
            rb = sb = None
            for x in b:
                if x < nA:
                    rb = r.rgs[x]
                elif x < nA + nC:
                    sb = s.rgs[x - nA]
                elif x < nA + nC + nB:
                    rb = r.rgs[x - nC]
                else:
                    sb = s.rgs[x - nA - nB]
            ub.append((rb, sb))
        plans.append((u, tuple(ub)))
    plans = (tuple(plans), rw, sw)
    _TPLANS[key] = plans
    return plans


def tensor(Phi, Psi):
    """Phi (x) Psi : A (x) C -> B (x) D"""
    if Phi.ring != Psi.ring:
        raise ValueError("rank context mismatch: %r vs %r" % (Phi.ring, Psi.ring))
    if Phi.basis != "bracket" or Psi.basis != "bracket":
        raise ValueError("tensor works in the bracket basis")
    base, ring = Phi.base, Phi.ring
    A, B, C, D = Phi.source, Phi.target, Psi.source, Psi.target
    src, tgt = A.tensor(C), B.tensor(D)
    out = {}
    zero_ = ring.zero
    for r, rterms in Phi.components().items():
        for s, sterms in Psi.components().items():
            plans, rw, sw = _tensor_plan(base, A, B, C, D, r, s)
            for u, ub in plans:
                for ridx, cr in rterms.items():
                    for sidx, cs in sterms.items():
                        vecs = []
                        for rb, sb in ub:
                            if rb is not None and sb is not None:
                                vecs.append(base.tensor_basis(rw[rb][0], rw[rb][1], sw[sb][0], sw[sb][1],
                                                              ridx[rb], sidx[sb]))
                            elif rb is not None:
                                vecs.append({ridx[rb]: 1})
                            else:
                                vecs.append({sidx[sb]: 1})
                        sc = cr * cs
                        for idx, c in _prod_sparse(vecs).items():
                            k = (u, idx)
                            out[k] = out.get(k, zero_) + sc * c
    return InterpMorphism(src, tgt, base, ring, {k: c for k, c in out.items() if c})


# ---------------------------------------------------------------------------
# double brackets


def _one_sided_blocks(r, ns):
    src_only = [k for k, b in enumerate(r.blocks) if b[-1] < ns]
    tgt_only = [k for k, b in enumerate(r.blocks) if b[0] >= ns]
    return src_only, tgt_only


def _matchings(xs, ys):
    for k in range(min(len(xs), len(ys)) + 1):
        for xsub in combinations(xs, k):
            for ysub in permutations(ys, k):
                yield tuple(zip(xsub, ysub))


def _merge_term(base, S, T, r, idx, pairs):
    """
    Phi|_s for the coarsening s of r gluing each (source-only block a,
    target-only block b) in ``pairs``; returns {(s, idx'): coeff}.
    """
    if not pairs:
        return {(r, idx): Fraction(1)}
    words = block_words(base, S, T, r)
    partner = dict(pairs)
    relabel = {b: a for a, b in pairs}
    s = Recollement(r.sizes, [relabel.get(x, x) for x in r.rgs], check=False)
    vecs = []
    for blk in s.blocks:
        a = relabel.get(r.rgs[blk[0]], r.rgs[blk[0]])
        if a in partner:
            b = partner[a]
            vecs.append(base.compose_basis(words[a][0], base.unit, words[b][1], idx[b], idx[a]))
        else:
            vecs.append({idx[a]: 1})
    return {(s, k): c for k, c in _prod_sparse(vecs).items()}


def _coarsen_sum(Phi, signed):
    base, ring = Phi.base, Phi.ring
    S, T = Phi.source, Phi.target
    out = {}
    zero_ = ring.zero
    for (r, idx), c in Phi.terms.items():
        so, to = _one_sided_blocks(r, S.n)
        for pairs in _matchings(so, to):
            sign = -1 if (signed and len(pairs) % 2) else 1
            for k, x in _merge_term(base, S, T, r, idx, pairs).items():
                out[k] = out.get(k, zero_) + sign * c * x
    return out


def to_double_bracket(Phi):
    """coordinates of Phi in the <<.>> basis"""
    if Phi.basis != "bracket":
        raise ValueError("expected bracket coordinates")
    return Phi._like(_coarsen_sum(Phi, signed=True), basis="double")


def from_double_bracket(D):
    """the morphism sum of <<Phi>> terms, in bracket coordinates"""
    if D.basis != "double":
        raise ValueError("expected double-bracket coordinates")
    return D._like(_coarsen_sum(D, signed=False), basis="bracket")


def double(Phi):
    "the morphism <<Phi>> for Phi given by its H-coordinates, in bracket coordinates"
    return from_double_bracket(Phi._like(Phi.terms, basis="double"))


_DPLANS = {}


def compose_double_bracket(Psi, Phi, check=False):
    """
    Psi o Phi for operands and result in <<.>> coordinates, by the closed
    formula:  P_{r,s}(t) sum_{u <= J_1} (-1)^{#J_1 - #u} <<Xi|_{u'}>>,
    with Xi the contraction along the generated relation.
    """
    if Phi.basis != "double" or Psi.basis != "double":
        raise ValueError("compose_double_bracket needs double-bracket coordinates")
    if Phi.target != Psi.source:
        raise ValueError("cannot compose: target %r != source %r" % (Phi.target, Psi.source))
    if Phi.ring != Psi.ring:
        raise ValueError("rank context mismatch")
    base, ring = Phi.base, Phi.ring
    S, M, T = Phi.source, Phi.target, Psi.target
    nI, nJ = S.n, M.n
    mid = len(M.factors)
    nL = len(S.factors)
    out = {}
    zero_ = ring.zero
    for r, rterms in Phi.components().items():
        for s, sterms in Psi.components().items():
            key = (id(base), S, M, T, r, s)
            plan = _DPLANS.get(key)
            if plan is None:
                plan = _double_plan(base, S, M, T, r, s, nI, nJ, nL, mid)
                _DPLANS[key] = plan
            if not plan:
                continue
            (w, wblocks, orphans, lo, hi, A_, B_) = plan
            coef = ring.falling(lo, hi)
            for ridx, cr in rterms.items():
                for sidx, cs in sterms.items():
                    sc = coef * cr * cs
                    for o in orphans:
                        x = _contract(base, o, ridx, sidx).get(0, 0)
                        sc = sc * x
                        if not sc:
                            break
                    if not sc:
                        continue
                    vecs = [_contract(base, b, ridx, sidx) for b in wblocks]
                    for idx, c in _prod_sparse(vecs).items():
                        for pairs in _matchings(A_, B_):
                            sign = -1 if len(pairs) % 2 else 1
                            for k, x in _merge_term(base, S, T, w, idx, pairs).items():
                                out[k] = out.get(k, zero_) + sign * sc * c * x
    res = InterpMorphism(S, T, base, ring, None, basis="double")
    res.terms = {k: c for k, c in out.items() if c}
    if check:
        other = to_double_bracket(compose(from_double_bracket(Psi), from_double_bracket(Phi)))
        assert other == res, "double-bracket composition disagrees with the bracket path"
    return res


def _double_plan(base, S, M, T, r, s, nI, nJ, nL, mid):
    if tuple(pc._canon(r.rgs[nI:])) != tuple(pc._canon(s.rgs[:nJ])):
        return ()
    u = pc.generated_closure(r, s, mid)
    w = pc.outer_restriction(u, nL, mid)
    rw = block_words(base, S, M, r)
    sw = block_words(base, M, T, s)
    unit = base.unit

    def parts(ub):
        rb = sb = None
        for x in ub:
            if x < nI + nJ:
                rb = r.rgs[x]
            if x >= nI:
                sb = s.rgs[x - nI]
        return rb, sb

    def words(rb, sb):
        src = rw[rb][0] if rb is not None else unit
        midw = rw[rb][1] if rb is not None else sw[sb][0]
        tgt = sw[sb][1] if sb is not None else unit
        return src, midw, tgt

    wblocks, A_, B_ = [], [], []
    for k, b in enumerate(w.blocks):
        x = b[0]
        gx = x if x < nI else x + nJ
        ub = u.blocks[u.rgs[gx]]
        rb, sb = parts(ub)
        wblocks.append(words(rb, sb) + (rb, sb))
        has_i = any(y < nI for y in ub)
        has_j = any(nI <= y < nI + nJ for y in ub)
        has_k = any(y >= nI + nJ for y in ub)
        if has_i and has_j and not has_k:
            A_.append(k)
        if has_k and has_j and not has_i:
            B_.append(k)
    orphans = []
    for ub in u.blocks:
        if all(nI <= x < nI + nJ for x in ub):
            rb, sb = parts(ub)
            orphans.append(words(rb, sb) + (rb, sb))
    # middle entries: blocks of the common restriction to M
    nmid = len(set(r.rgs[nI:]))
    return (w, tuple(wblocks), tuple(orphans), nmid - len(orphans), nmid, tuple(A_), tuple(B_))


def filtration_member(Phi, d):
    "is Phi in <<H^{>= d}>>"
    D = to_double_bracket(Phi) if Phi.basis == "bracket" else Phi
    return all(len(r) >= d for (r, _) in D.terms)


def filtration_span(A, B, base, ring, d):
    """basis (bracket coordinates) of <<H^{>=d}(A; B)>>"""
    out = []
    for key in hom_basis(A, B, base):
        if len(key[0]) >= d:
            out.append(from_double_bracket(basis_element(A, B, base, ring, key, basis="double")))
    return out


# ---------------------------------------------------------------------------
# star product and restriction


def _shift_ring(ring, d2):
    return ring if ring.is_symbolic else Ring(ring.t0 + d2)


def star_object(A, W):
    "<U_I>_t * [W] = <U_I, W>_{t + len W}"
    return bracket(*(tuple(A.family()) + tuple(W)))


def star_product(Phi, W, Psi=None):
    """
    Phi * Psi for Phi : <U_I> -> <V_J> at rank t and Psi a morphism
    <W> -> <W'> made of full matchings (default: identity of <W>).
    Lands at rank t + len(W); symbolic coefficients are rewritten
    in the new variable, p(t) -> p(t - len W).
    """
    base, ring = Phi.base, Phi.ring
    W = tuple(W)
    d2 = len(W)
    if Psi is None:
        Psi = identity(bracket(*W), base, ring)
    Wsrc, Wtgt = Psi.source.family(), Psi.target.family()
    if Wsrc != W or len(Wtgt) != d2:
        raise ValueError("second factor must be an endo-shape morphism of a length-%d family" % d2)
    if Psi.ring != ring:
        raise ValueError("rank context mismatch")
    U, V = Phi.source.family(), Phi.target.family()
    m, n = len(U), len(V)
    src = bracket(*(tuple(U) + W))
    tgt = bracket(*(tuple(V) + tuple(Wtgt)))
    new_ring = _shift_ring(ring, d2)
    out = {}
    for (r, idx), c in Phi.terms.items():
        for (q, jdx), e in Psi.terms.items():
            if len(q) != d2 or any(len(b) != 2 for b in q.blocks):
                raise ValueError("star product: second factor must consist of full matchings")
            # global layout: U, W | V, W'
            lab = []
            for x in range(m):
                lab.append(("r", r.rgs[x]))
            for x in range(d2):
                lab.append(("q", q.rgs[x]))
            for x in range(n):
                lab.append(("r", r.rgs[m + x]))
            for x in range(d2):
                lab.append(("q", q.rgs[d2 + x]))
            u = Recollement((m + d2, n + d2), lab, check=False)
            # blocks of u in order; map to r or q blocks
            newidx = []
            for b in u.blocks:
                x = b[0]
                if x < m:
                    newidx.append(idx[r.rgs[x]])
                elif x < m + d2:
                    newidx.append(jdx[q.rgs[x - m]])
                elif x < m + d2 + n:
                    newidx.append(idx[r.rgs[x - d2]])
                else:
                    newidx.append(jdx[q.rgs[x - m - n]])
            coeff = c * e
            if ring.is_symbolic:
                coeff = coeff.shift(-d2)
            k = (u, tuple(newidx))
            out[k] = out.get(k, new_ring.zero) + coeff
    return InterpMorphism(src, tgt, base, new_ring, out)


class SplitMorphism:
    """
    Morphism of S_{t1} (x) S_{t2} between the subset decompositions
    sum_{I'} <U_I'> [x] <U_{I - I'}>.  entries[(I', J')] is a dict
    ((r', idx'), (r'', idx'')) -> coeff.
    """

    def __init__(self, source, target, base, t1, t2, entries):
        self.source, self.target, self.base = source, target, base
        self.t1, self.t2 = frac(t1), frac(t2)
        self.entries = {k: {kk: c for kk, c in v.items() if c} for k, v in entries.items()}
        self.entries = {k: v for k, v in self.entries.items() if v}

    def __eq__(self, other):
        return (self.source, self.target, self.t1, self.t2, self.entries) == (
            other.source, other.target, other.t1, other.t2, other.entries)

    def __repr__(self):
        return "SplitMorphism(%d nonzero cells)" % len(self.entries)


def _subsets(n):
    for k in range(n + 1):
        for c in combinations(range(n), k):
            yield c


def _nonzero(*sizes):
    "factor sizes as stored on objects (empty families are dropped)"
    return tuple(k for k in sizes if k)


def restrict_sum(Phi, t1, t2):
    """
    Res from S_t to S_{t1} (x) S_{t2} with t = t1 + t2 (specialized rank).
    A term at r contributes to the cell (I', J') iff no block of r meets
    both (I', J') and the complement.
    """
    ring = Phi.ring
    if ring.is_symbolic:
        raise ValueError("restrict_sum needs a specialized rank (t = t1 + t2)")
    t1, t2 = frac(t1), frac(t2)
    if ring.t0 != t1 + t2:
        raise ValueError("rank %s != t1 + t2 = %s" % (ring.t0, t1 + t2))
    U, V = Phi.source.family(), Phi.target.family()
    m, n = len(U), len(V)
    entries = {}
    for (r, idx), c in Phi.terms.items():
        for Ip in _subsets(m):
            for Jp in _subsets(n):
                side = [0] * (m + n)
                for x in Ip:
                    side[x] = 1
                for y in Jp:
                    side[m + y] = 1
                if any(len({side[x] for x in b}) > 1 for b in r.blocks):
                    continue
                left = [x for x in range(m + n) if side[x]]
                right = [x for x in range(m + n) if not side[x]]
                r1 = Recollement(_nonzero(len(Ip), len(Jp)), [r.rgs[x] for x in left], check=False)
                r2 = Recollement(_nonzero(m - len(Ip), n - len(Jp)), [r.rgs[x] for x in right], check=False)
                i1 = tuple(idx[r.rgs[left[b[0]]]] for b in r1.blocks)
                i2 = tuple(idx[r.rgs[right[b[0]]]] for b in r2.blocks)
                cell = entries.setdefault((Ip, Jp), {})
                k = ((r1, i1), (r2, i2))
                cell[k] = cell.get(k, 0) + c
    return SplitMorphism(Phi.source, Phi.target, Phi.base, t1, t2, entries)


def compose_split(G, F):
    """G o F for SplitMorphisms; each tensor factor composed at its own rank"""
    if F.target != G.source or (F.t1, F.t2) != (G.t1, G.t2):
        raise ValueError("split morphisms not composable")
    base = F.base
    U, V, W = F.source.family(), F.target.family(), G.target.family()
    R1, R2 = Ring(F.t1), Ring(F.t2)
    out = {}
    for (Ip, Jp), fcell in F.entries.items():
        for (Jq, Kp), gcell in G.entries.items():
            if Jq != Jp:
                continue
            Jc = tuple(y for y in range(len(V)) if y not in Jp)
            A1 = bracket(*[U[x] for x in Ip])
            A2 = bracket(*[U[x] for x in range(len(U)) if x not in Ip])
            B1 = bracket(*[V[x] for x in Jp])
            B2 = bracket(*[V[x] for x in Jc])
            C1 = bracket(*[W[x] for x in Kp])
            C2 = bracket(*[W[x] for x in range(len(W)) if x not in Kp])
            cell = out.setdefault((Ip, Kp), {})
            for (f1, f2), cf in fcell.items():
                m1 = InterpMorphism(A1, B1, base, R1, {f1: 1})
                m2 = InterpMorphism(A2, B2, base, R2, {f2: 1})
                for (g1, g2), cg in gcell.items():
                    n1 = InterpMorphism(B1, C1, base, R1, {g1: 1})
                    n2 = InterpMorphism(B2, C2, base, R2, {g2: 1})
                    h1 = compose(n1, m1)
                    if not h1.terms:
                        continue
                    h2 = compose(n2, m2)
                    for k1, x1 in h1.terms.items():
                        for k2, x2 in h2.terms.items():
                            cell[(k1, k2)] = cell.get((k1, k2), 0) + cf * cg * x1 * x2
    return SplitMorphism(F.source, G.target, base, F.t1, F.t2, out)


# ---------------------------------------------------------------------------
# functors of the base


def apply_functor(F, Phi):
    """S_t(F): relabel objects through F and push block coordinates through F"""
    D = F.target
    base = Phi.base
    src = BracketObject([tuple(F.obj(e) for e in f) for f in Phi.source.factors])
    tgt = BracketObject([tuple(F.obj(e) for e in f) for f in Phi.target.factors])
    if src.sizes != Phi.source.sizes or tgt.sizes != Phi.target.sizes:
        raise ValueError("functor changed family shapes")
    out = {}
    ring = Phi.ring
    for (r, idx), c in Phi.terms.items():
        words = block_words(base, Phi.source, Phi.target, r)
        dwords = block_words(D, src, tgt, r)
        vecs = []
        for (s, t), (ds, dt), i in zip(words, dwords, idx):
            if F.obj(s) != ds or F.obj(t) != dt:
                raise ValueError("functor is not monoidal on %r -> %r" % (s, t))
            vecs.append(F.map_basis(s, t, i))
        for k, x in _prod_sparse(vecs).items():
            key = (r, k)
            out[key] = out.get(key, ring.zero) + c * x
    return InterpMorphism(src, tgt, D, ring, out)


# ---------------------------------------------------------------------------
# random morphisms for suites


def random_scalar(ring, rng, lo=-3, hi=3, deg=1):
    if ring.is_symbolic:
        return Poly([Fraction(rng.randint(lo, hi), rng.choice((1, 1, 2))) for _ in range(deg + 1)])
    return Fraction(rng.randint(lo, hi), rng.choice((1, 1, 2)))


def random_morphism(A, B, base, ring, rng, nterms=3, deg=1):
    keys = hom_basis(A, B, base)
    if not keys:
        return zero(A, B, base, ring)
    terms = {}
    for _ in range(nterms):
        k = rng.choice(keys)
        terms[k] = terms.get(k, ring.zero) + random_scalar(ring, rng, deg=deg)
    return InterpMorphism(A, B, base, ring, terms)


def random_family(base, rng, max_len=2, allow_empty=True):
    objs = base.sample_objects()
    lo = 0 if allow_empty else 1
    return tuple(rng.choice(objs) for _ in range(rng.randint(lo, max_len)))


def make_rng(seed):
    return random.Random(seed)
