"""
Additive and Karoubian envelope on top of the interpolation engine:
formal direct sums, matrices of morphisms, images of idempotents, and
symmetric group elements acting on brackets with repeated entries.

Matrix convention: ``entries[j][i]`` maps source summand i to target
summand j, so composition is the usual matrix product.
"""

from fractions import Fraction
from itertools import permutations
from math import factorial

from .interp import (InterpMorphism, identity, zero, compose, bracket, hom_basis, basis_element)
from .linalg import rank, nullspace
from .partcomb import Recollement


class FormalObject:
    """(U_1 + ... + U_m, e) with e an idempotent matrix"""

    def __init__(self, summands, idempotent, base, ring, check=True):
        self.summands = tuple(summands)
        self.base = base
        self.ring = ring
        self.e = idempotent
        if check:
            M = MatrixMorphism(self, self, idempotent, check=False)
            res = M.compose_raw(M)
            if not res.equals_raw(M):
                raise ValueError("idempotent check failed; residual e^2 - e has %d nonzero entries"
                                 % res.sub_raw(M).nonzero())

    def is_zero(self):
        return not self.summands or all(self.e[j][i].is_zero()
                                        for j in range(len(self.summands)) for i in range(len(self.summands)))

    def identity(self):
        return MatrixMorphism(self, self, self.e, check=False)

    def __repr__(self):
        return "FormalObject(%r)" % (list(self.summands),)


class MatrixMorphism:
    def __init__(self, source, target, entries, check=True):
        self.source = source
        self.target = target
        self.entries = [list(row) for row in entries]
        if len(self.entries) != len(target.summands) or any(len(r) != len(source.summands) for r in self.entries):
            raise ValueError("matrix shape %dx%d does not match %d <- %d summands" % (
                len(self.entries), len(self.entries[0]) if self.entries else 0,
                len(target.summands), len(source.summands)))
        if check:
            c = compress(self)
            if not c.equals_raw(self):
                raise ValueError("morphism is not compressed by the idempotents")

    # raw block algebra (ignoring idempotents) --------------------------------

    def compose_raw(self, other):
        "self o other"
        if other.target.summands != self.source.summands:
            raise ValueError("shape mismatch in block composition")
        S, T = other.source, self.target
        base, ring = S.base, S.ring
        out = []
        for k, tk in enumerate(T.summands):
            row = []
            for i, si in enumerate(S.summands):
                acc = zero(si, tk, base, ring)
                for j in range(len(self.source.summands)):
                    a, b = self.entries[k][j], other.entries[j][i]
                    if a.terms and b.terms:
                        acc = acc + compose(a, b)
                row.append(acc)
            out.append(row)
        return MatrixMorphism(S, T, out, check=False)

    def __matmul__(self, other):
        return self.compose_raw(other)

    def add_raw(self, other):
        return MatrixMorphism(self.source, self.target,
                              [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
                              check=False)

    __add__ = add_raw

    def sub_raw(self, other):
        return MatrixMorphism(self.source, self.target,
                              [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
                              check=False)

    __sub__ = sub_raw

    def scale(self, c):
        return MatrixMorphism(self.source, self.target, [[a.scale(c) for a in r] for r in self.entries], check=False)

    def equals_raw(self, other):
        return all(a == b for r1, r2 in zip(self.entries, other.entries) for a, b in zip(r1, r2))

    __eq__ = equals_raw

    def nonzero(self):
        return sum(1 for r in self.entries for a in r if not a.is_zero())


def compress(f):
    "e_target o f o e_source"
    T, S = f.target, f.source
    eT = MatrixMorphism(_plain(T), _plain(T), T.e, check=False)
    eS = MatrixMorphism(_plain(S), _plain(S), S.e, check=False)
    g = eT.compose_raw(MatrixMorphism(_plain(S), _plain(T), f.entries, check=False)).compose_raw(eS)
    return MatrixMorphism(S, T, g.entries, check=False)


def _plain(X):
    "the same summands with identity idempotent"
    return FormalObject(X.summands, _id_matrix(X.summands, X.base, X.ring), X.base, X.ring, check=False)


def _id_matrix(summands, base, ring):
    return [[identity(a, base, ring) if i == j else zero(a, b, base, ring)
             for i, a in enumerate(summands)] for j, b in enumerate(summands)]


def direct_sum(objects, base, ring):
    return FormalObject(objects, _id_matrix(objects, base, ring), base, ring, check=False)


def matrix(source, target, entries):
    return MatrixMorphism(source, target, entries)


def image(e):
    """the image of an idempotent endomorphism of a formal object"""
    X = e.source
    if e.target.summands != X.summands:
        raise ValueError("image needs an endomorphism")
    ee = e.compose_raw(e)
    if not ee.equals_raw(e):
        res = ee.sub_raw(e)
        raise ValueError("not idempotent: residual e^2 - e = %s" % (
            [[len(a.terms) for a in r] for r in res.entries],))
    return FormalObject(X.summands, e.entries, X.base, X.ring, check=False)


def end_dim(X):
    """dimension of End(X) = e End(plain) e, by rank of compressed basis images"""
    return hom_dim_formal(X, X)


def hom_dim_formal(X, Y):
    base, ring = X.base, X.ring
    if ring.is_symbolic:
        raise ValueError("hom dimensions of formal objects need a specialized rank")
    vecs = []
    coords = {}
    for i, a in enumerate(X.summands):
        for j, b in enumerate(Y.summands):
            for key in hom_basis(a, b, base):
                ent = [[zero(s, t, base, ring) for s in X.summands] for t in Y.summands]
                ent[j][i] = basis_element(a, b, base, ring, key)
                f = compress(MatrixMorphism(X, Y, ent, check=False))
                v = {}
                for jj, row in enumerate(f.entries):
                    for ii, m in enumerate(row):
                        for k, c in m.terms.items():
                            v[(ii, jj, k)] = c
                            coords.setdefault((ii, jj, k), len(coords))
                vecs.append(v)
    if not coords:
        return 0
    rows = []
    for v in vecs:
        row = [Fraction(0)] * len(coords)
        for k, c in v.items():
            row[coords[k]] = ring.coerce(c)
        rows.append(row)
    return rank(rows, len(coords))


# ---------------------------------------------------------------------------
# symmetric groups


def perm_mul(g, h):
    "(g h)(i) = g(h(i))"
    return tuple(g[h[i]] for i in range(len(h)))


def perm_sign(g):
    s, seen = 1, set()
    for i in range(len(g)):
        if i in seen:
            continue
        j, ln = i, 0
        while j not in seen:
            seen.add(j)
            j = g[j]
            ln += 1
        if ln % 2 == 0:
            s = -s
    return s


def group_algebra_mul(a, b):
    out = {}
    for g, x in a.items():
        for h, y in b.items():
            k = perm_mul(g, h)
            out[k] = out.get(k, 0) + x * y
    return {k: v for k, v in out.items() if v}


def hook_dim(lam):
    n = sum(lam)
    conj = [sum(1 for r in lam if r > c) for c in range(lam[0])] if lam else []
    prod_ = 1
    for i, r in enumerate(lam):
        for c in range(r):
            prod_ *= (r - c - 1) + (conj[c] - i - 1) + 1
    return factorial(n) // prod_


def young_symmetrizer(lam, max_n=5):
    """
    Primitive idempotent for the partition lam (row-reading tableau):
    (row symmetrizer)(column antisymmetrizer) / k where c^2 = k c.
    """
    lam = tuple(x for x in lam if x)
    n = sum(lam)
    if n > max_n:
        raise ValueError("young_symmetrizer limited to n <= %d" % max_n)
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("%r is not a partition" % (lam,))
    rows, pos = [], 0
    for r in lam:
        rows.append(list(range(pos, pos + r)))
        pos += r
    cols = [[rows[i][c] for i in range(len(rows)) if c < len(rows[i])] for c in range(lam[0] if lam else 0)]
    ident = tuple(range(n))

    def stabilizer(groups):
        out = [ident]
        for grp in groups:
            new = []
            for p in permutations(grp):
                g = list(ident)
                for a, b in zip(grp, p):
                    g[a] = b
                new.append(tuple(g))
            out = [perm_mul(a, b) for a in out for b in new]
        return out

    a = {}
    for p in stabilizer(rows):
        a[p] = a.get(p, 0) + Fraction(1)
    b = {}
    for q in stabilizer(cols):
        b[q] = b.get(q, 0) + Fraction(perm_sign(q))
    c = group_algebra_mul(a, b)
    cc = group_algebra_mul(c, c)
    # c^2 = k c; read k off any support element
    g0 = next(iter(c))
    k = cc.get(g0, 0) / c[g0]
    if k == 0 or {g: v for g, v in cc.items()} != {g: k * v for g, v in c.items()}:
        raise ArithmeticError("quasi-idempotent scaling failed for %r" % (lam,))
    return {g: v / k for g, v in c.items()}


def left_ideal_dim(f, n):
    "dim of k[S_n] f"
    perms = list(permutations(range(n)))
    idx = {g: i for i, g in enumerate(perms)}
    rows = []
    for g in perms:
        v = [Fraction(0)] * len(perms)
        for h, x in group_algebra_mul({g: Fraction(1)}, f).items():
            v[idx[h]] = x
        rows.append(v)
    return rank(rows, len(perms))


def sym_action(g, A, base, ring):
    """the basis morphism at r_g = {(i, g(i))} with identity coordinates"""
    fam = A.family()
    m = len(fam)
    if len(g) != m:
        raise ValueError("permutation of %d letters on a family of length %d" % (len(g), m))
    if len(set(fam)) > 1:
        raise ValueError("sym_action needs equal entries, got %r" % (fam,))
    lab = list(range(m)) + [None] * m
    for i in range(m):
        lab[m + g[i]] = i
    r = Recollement((m, m), lab, check=False)
    U = fam[0] if fam else base.unit
    ids = [base.identity(U) for _ in r.blocks]
    terms = {(): Fraction(1)}
    for v in ids:
        terms = {k + (a,): c * x for k, c in terms.items() for a, x in v.items()}
    return InterpMorphism(A, A, base, ring, {(r, k): c for k, c in terms.items()})


def group_element_morphism(f, A, base, ring):
    "sum_g f_g sym_action(g)"
    out = zero(A, A, base, ring)
    for g, c in f.items():
        out = out + sym_action(g, A, base, ring).scale(c)
    return out
