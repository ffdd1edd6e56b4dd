"""
Finite presentations of the base category C.

Base morphisms are coordinate vectors in frozen hom bases; the interface
used by the interpolation engine is

    unit, hom_dim(U, V), identity(U), compose_basis(U, V, W, g, f),
    tensor_objects(objs), tensor_basis(U1, V1, U2, V2, a, b),
    braid(U, V), braid_inv(U, V), dual(U), ev(U), coev(U), trace(U, V, X, vec)

with sparse results {basis index: Fraction}.  Two kinds of base:

* LinearCatPresentation: objects, hom dimensions and composition
  structure constants given explicitly.  No tensor product.
* ModuleCategory: finite-dimensional modules over a bialgebra.  Objects
  are words in named generator modules (the empty word is the unit),
  Hom spaces are intertwiner spaces solved as nullspaces, tensor product
  is concatenation with the coproduct action, braiding is the flip.
"""

from fractions import Fraction
from itertools import product
import threading

from .linalg import sparse_nullspace, matmul, rank, identity as eye


class CapabilityError(Exception):
    pass


class ValidationError(Exception):
    pass


def _sparse(vec):
    return {i: Fraction(c) for i, c in enumerate(vec) if c}


def _kron(A, B):
    out = []
    for ra in A:
        for rb in B:
            out.append([a * b for a in ra for b in rb])
    return out


def _flatten(M):
    return [x for row in M for x in row]


def _zeros(m, n):
    return [[Fraction(0)] * n for _ in range(m)]


class BaseCategory:
    """Common interface; subclasses fill in the pieces they support."""

    name = "base"
    has_tensor = False
    has_braiding = False
    has_duals = False
    has_trace = False
    symmetric = False

    def __init__(self):
        self._lock = threading.Lock()
        self._cc = {}

    # hom bases -----------------------------------------------------------

    def hom_dim(self, U, V):
        raise NotImplementedError

    def identity(self, U):
        raise NotImplementedError

    def compose_basis(self, U, V, W, g, f):
        "basis g of Hom(V,W) after basis f of Hom(U,V), as a sparse vector"
        raise NotImplementedError

    def compose(self, U, V, W, gvec, fvec):
        out = {}
        for b, cg in gvec.items():
            for a, cf in fvec.items():
                for c, x in self.compose_basis(U, V, W, b, a).items():
                    out[c] = out.get(c, 0) + cg * cf * x
        return {c: x for c, x in out.items() if x}

    def is_unit(self, U):
        return U == self.unit

    # monoidal pieces -----------------------------------------------------

    def tensor_objects(self, objs):
        raise CapabilityError("%s: base has no tensor product" % self.name)

    def tensor_basis(self, U1, V1, U2, V2, a, b):
        raise CapabilityError("%s: base has no tensor product" % self.name)

    def braid(self, U, V):
        raise CapabilityError("%s: base has no braiding" % self.name)

    def braid_inv(self, U, V):
        raise CapabilityError("%s: base has no braiding" % self.name)

    def dual(self, U):
        raise CapabilityError("%s: base has no duals" % self.name)

    def ev(self, U):
        raise CapabilityError("%s: base has no duals" % self.name)

    def coev(self, U):
        raise CapabilityError("%s: base has no duals" % self.name)

    def trace(self, U, V, X, vec):
        raise CapabilityError("%s: base has no trace" % self.name)

    def sample_objects(self):
        "small objects used by randomized suites"
        return [self.unit]

    def hom_labels(self, U, V):
        return ["e%d" % k for k in range(self.hom_dim(U, V))]


# ---------------------------------------------------------------------------
# explicit linear presentations


class LinearCatPresentation(BaseCategory):
    """
    objects: list of labels; dims[(X, Y)] = dim Hom(X, Y);
    comp[(X, Y, Z, g, f)] = {k: c} for basis g of Hom(Y,Z), f of Hom(X,Y);
    ident[X] = coordinates of id_X in Hom(X, X).
    """

    def __init__(self, objects, unit, dims, comp, ident, name="linear"):
        super().__init__()
        self.name = name
        self.objects = list(objects)
        self.unit = unit
        self.dims = dict(dims)
        self.comp = {k: {i: Fraction(c) for i, c in v.items() if c} for k, v in comp.items()}
        self.ident = {X: {i: Fraction(c) for i, c in v.items() if c} for X, v in ident.items()}

    def hom_dim(self, U, V):
        return self.dims.get((U, V), 0)

    def identity(self, U):
        return dict(self.ident[U])

    def compose_basis(self, U, V, W, g, f):
        return self.comp.get((U, V, W, g, f), {})

    def tensor_objects(self, objs):
        rest = [o for o in objs if o != self.unit]
        if len(rest) > 1:
            raise CapabilityError("%s: base has no tensor product" % self.name)
        return rest[0] if rest else self.unit

    def tensor_basis(self, U1, V1, U2, V2, a, b):
        # only the unit-padding case is available: id_1 (x) f = f
        if U1 == V1 == self.unit:
            return {b: Fraction(1)} if a == 0 else {}
        if U2 == V2 == self.unit:
            return {a: Fraction(1)} if b == 0 else {}
        # U1 -> 1 -> V2 and U2 -> 1 -> V1 are plain composites
        if V1 == self.unit and U2 == self.unit:
            return dict(self.compose_basis(U1, self.unit, V2, b, a))
        if U1 == self.unit and V2 == self.unit:
            return dict(self.compose_basis(U2, self.unit, V1, a, b))
        raise CapabilityError("%s: base has no tensor product" % self.name)

    def sample_objects(self):
        return list(self.objects)

    def validate(self):
        issues = []
        obs = self.objects
        if self.unit not in obs:
            issues.append("unit %r is not an object" % (self.unit,))
            return issues
        if self.hom_dim(self.unit, self.unit) != 1:
            issues.append("End(unit) has dimension %d, expected 1" % self.hom_dim(self.unit, self.unit))
        if self.ident.get(self.unit) != {0: 1}:
            issues.append("id(unit) is not the basis vector e0 of End(unit)")
        for X in obs:
            if X not in self.ident:
                issues.append("missing identity for %r" % (X,))
        if issues:
            return issues
        for X, Y in product(obs, obs):
            for f in range(self.hom_dim(X, Y)):
                e = {f: Fraction(1)}
                if self.compose(X, Y, Y, self.identity(Y), e) != e:
                    issues.append("id_%s o e%d != e%d in Hom(%s,%s)" % (Y, f, f, X, Y))
                if self.compose(X, X, Y, e, self.identity(X)) != e:
                    issues.append("e%d o id_%s != e%d in Hom(%s,%s)" % (f, X, f, X, Y))
        for X, Y, Z, W in product(obs, repeat=4):
            for f in range(self.hom_dim(X, Y)):
                for g in range(self.hom_dim(Y, Z)):
                    gf = self.compose_basis(X, Y, Z, g, f)
                    for h in range(self.hom_dim(Z, W)):
                        left = self.compose(X, Z, W, {h: Fraction(1)}, gf)
                        hg = self.compose_basis(Y, Z, W, h, g)
                        right = self.compose(X, Y, W, hg, {f: Fraction(1)})
                        if left != right:
                            issues.append("associativity fails on (%s,%s,%s,%s) basis triple (%d,%d,%d)"
                                          % (X, Y, Z, W, f, g, h))
        return issues


def trivial_linear():
    "one object, End = k"
    return LinearCatPresentation(["1"], "1", {("1", "1"): 1}, {("1", "1", "1", 0, 0): {0: 1}},
                                 {"1": {0: 1}}, name="triv-linear")


# ---------------------------------------------------------------------------
# bialgebras and their module categories


class BialgebraPresentation:
    """
    Structure constants over Q on basis 0..n-1:
    mult[(i, j)] = {k: c}, unit = {k: c}, comult[i] = {(j, k): c},
    counit = {i: c}, antipode = {i: {j: c}} or None.
    """

    def __init__(self, n, mult, unit, comult, counit, antipode=None, name="bialgebra"):
        self.n = n
        self.mult = {k: {i: Fraction(c) for i, c in v.items() if c} for k, v in mult.items()}
        self.unit = {i: Fraction(c) for i, c in unit.items() if c}
        self.comult = {k: {i: Fraction(c) for i, c in v.items() if c} for k, v in comult.items()}
        self.counit = {i: Fraction(c) for i, c in counit.items() if c}
        self.antipode = None if antipode is None else {
            k: {i: Fraction(c) for i, c in v.items() if c} for k, v in antipode.items()}
        self.name = name

    def m(self, x, y):
        "product of sparse elements"
        out = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.mult.get((i, j), {}).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: v for k, v in out.items() if v}

    def delta(self, x):
        out = {}
        for i, a in x.items():
            for jk, c in self.comult.get(i, {}).items():
                out[jk] = out.get(jk, 0) + a * c
        return {k: v for k, v in out.items() if v}

    def eps(self, x):
        return sum((a * self.counit.get(i, 0) for i, a in x.items()), Fraction(0))

    def S(self, x):
        out = {}
        for i, a in x.items():
            for j, c in self.antipode.get(i, {}).items():
                out[j] = out.get(j, 0) + a * c
        return {k: v for k, v in out.items() if v}

    def is_cocommutative(self):
        return all(self.comult.get(i, {}) == {(k, j): c for (j, k), c in self.comult.get(i, {}).items()}
                   for i in range(self.n))

    def validate(self):
        issues = []
        n = self.n
        e = [{i: Fraction(1)} for i in range(n)]
        for i, j, k in product(range(n), repeat=3):
            if self.m(self.m(e[i], e[j]), e[k]) != self.m(e[i], self.m(e[j], e[k])):
                issues.append("multiplication not associative on (%d,%d,%d)" % (i, j, k))
        for i in range(n):
            if self.m(self.unit, e[i]) != e[i] or self.m(e[i], self.unit) != e[i]:
                issues.append("unit law fails on %d" % i)
        # coassociativity: (D x 1) D = (1 x D) D as dicts over triples
        for i in range(n):
            d = self.delta(e[i])
            left, right = {}, {}
            for (j, k), c in d.items():
                for (a, b), c2 in self.delta({j: 1}).items():
                    left[(a, b, k)] = left.get((a, b, k), 0) + c * c2
                for (a, b), c2 in self.delta({k: 1}).items():
                    right[(j, a, b)] = right.get((j, a, b), 0) + c * c2
            if {k: v for k, v in left.items() if v} != {k: v for k, v in right.items() if v}:
                issues.append("comultiplication not coassociative on %d" % i)
            l1, r1 = {}, {}
            for (j, k), c in d.items():
                l1[k] = l1.get(k, 0) + c * self.counit.get(j, 0)
                r1[j] = r1.get(j, 0) + c * self.counit.get(k, 0)
            if {k: v for k, v in l1.items() if v} != e[i] or {k: v for k, v in r1.items() if v} != e[i]:
                issues.append("counit law fails on %d" % i)
        # Delta and eps are algebra maps
        for i, j in product(range(n), repeat=2):
            lhs = self.delta(self.m(e[i], e[j]))
            rhs = {}
            for (a, b), c in self.delta(e[i]).items():
                for (a2, b2), c2 in self.delta(e[j]).items():
                    for k1, x1 in self.mult.get((a, a2), {}).items():
                        for k2, x2 in self.mult.get((b, b2), {}).items():
                            rhs[(k1, k2)] = rhs.get((k1, k2), 0) + c * c2 * x1 * x2
            if lhs != {k: v for k, v in rhs.items() if v}:
                issues.append("coproduct not multiplicative on (%d,%d)" % (i, j))
            if self.eps(self.m(e[i], e[j])) != self.eps(e[i]) * self.eps(e[j]):
                issues.append("counit not multiplicative on (%d,%d)" % (i, j))
        du = self.delta(self.unit)
        uu = {}
        for i, a in self.unit.items():
            for j, b in self.unit.items():
                uu[(i, j)] = a * b
        if du != {k: v for k, v in uu.items() if v}:
            issues.append("coproduct does not preserve the unit")
        if self.eps(self.unit) != 1:
            issues.append("counit does not preserve the unit")
        if self.antipode is not None:
            ue = {k: v * 1 for k, v in self.unit.items()}
            for i in range(n):
                l, r = {}, {}
                for (a, b), c in self.delta(e[i]).items():
                    for k, v in self.m(self.S({a: 1}), e[b]).items():
                        l[k] = l.get(k, 0) + c * v
                    for k, v in self.m(e[a], self.S({b: 1})).items():
                        r[k] = r.get(k, 0) + c * v
                target = {k: v * self.counit.get(i, 0) for k, v in ue.items()}
                target = {k: v for k, v in target.items() if v}
                if {k: v for k, v in l.items() if v} != target or {k: v for k, v in r.items() if v} != target:
                    issues.append("antipode axiom fails on %d" % i)
        return issues


class ModuleObject:
    """a module: dimension and one action matrix per bialgebra basis element"""

    def __init__(self, name, dim, action):
        self.name = name
        self.dim = dim
        self.action = [[[Fraction(x) for x in row] for row in M] for M in action]

    def validate(self, B):
        issues = []
        if len(self.action) != B.n:
            return ["module %s: %d action matrices for a %d-dim bialgebra" % (self.name, len(self.action), B.n)]

        def rho(x):
            M = _zeros(self.dim, self.dim)
            for i, a in x.items():
                for p in range(self.dim):
                    for q in range(self.dim):
                        M[p][q] += a * self.action[i][p][q]
            return M

        if rho(B.unit) != eye(self.dim):
            issues.append("module %s: unit does not act as identity" % self.name)
        for i, j in product(range(B.n), repeat=2):
            if rho(B.mult.get((i, j), {})) != matmul(self.action[i], self.action[j]):
                issues.append("module %s: action not multiplicative on (%d,%d)" % (self.name, i, j))
        return issues


def trivial_bialgebra():
    return BialgebraPresentation(1, {(0, 0): {0: 1}}, {0: 1}, {0: {(0, 0): 1}}, {0: 1},
                                 antipode={0: {0: 1}}, name="k")


def group_algebra(table, name="kG"):
    """
    k[G] from a multiplication table (table[i][j] = index of g_i g_j,
    index 0 the identity).  Coproduct g -> g (x) g, counit 1, antipode
    g -> g^{-1}.
    """
    n = len(table)
    mult = {(i, j): {table[i][j]: 1} for i in range(n) for j in range(n)}
    inv = {i: {j: 1 for j in range(n) if table[i][j] == 0} for i in range(n)}
    return BialgebraPresentation(n, mult, {0: 1}, {i: {(i, i): 1} for i in range(n)},
                                 {i: 1 for i in range(n)}, antipode=inv, name=name)


def cyclic_table(r):
    return [[(i + j) % r for j in range(r)] for i in range(r)]


def function_algebra(r, name=None):
    """
    k^{Z/r}: idempotents delta_a, coproduct delta_c -> sum_{a+b=c} delta_a (x) delta_b.
    Its modules are Z/r-graded vector spaces.
    """
    mult = {(a, a): {a: 1} for a in range(r)}
    comult = {c: {(a, (c - a) % r): 1 for a in range(r)} for c in range(r)}
    return BialgebraPresentation(r, mult, {a: 1 for a in range(r)}, comult, {0: 1},
                                 antipode={a: {(-a) % r: 1} for a in range(r)},
                                 name=name or "k^Z/%d" % r)


def graded_line(r, a):
    return ModuleObject("L%d" % a, 1, [[[1 if c == a else 0]] for c in range(r)])


def regular_module(table, name="R"):
    "left regular module of k[G]"
    n = len(table)
    act = []
    for g in range(n):
        M = [[0] * n for _ in range(n)]
        for h in range(n):
            M[table[g][h]][h] = 1
        act.append(M)
    return ModuleObject(name, n, act)


class ModuleCategory(BaseCategory):
    """
    Words in generator modules over a bialgebra.  A word is a tuple of
    generator names; dual generators are named ``name*`` and exist when
    the bialgebra has an antipode.
    """

    has_tensor = True

    def __init__(self, bialgebra, generators, name="modules", max_len=6, check=True):
        super().__init__()
        self.B = bialgebra
        self.name = name
        self.max_len = max_len
        self.gens = {}
        for M in generators:
            self.gens[M.name] = M
        if check:
            issues = bialgebra.validate()
            for M in generators:
                issues += M.validate(bialgebra)
            if issues:
                raise ValidationError("; ".join(issues))
        self.has_duals = bialgebra.antipode is not None
        self.has_braiding = self.symmetric = bialgebra.is_cocommutative()
        self.has_trace = self.has_duals and self.symmetric
        if self.has_duals:
            for M in list(generators):
                if not M.name.endswith("*"):
                    D = self._dual_module(M)
                    self.gens[D.name] = D
        self.unit = ()
        self._act = {}
        self._hom = {}

    def _dual_module(self, M):
        # (b.f)(x) = f(S(b) x): matrix rho(S(b))^T
        act = []
        for i in range(self.B.n):
            Sb = self.B.S({i: Fraction(1)})
            R = _zeros(M.dim, M.dim)
            for j, c in Sb.items():
                for p in range(M.dim):
                    for q in range(M.dim):
                        R[q][p] += c * M.action[j][p][q]
            act.append(R)
        return ModuleObject(M.name + "*", M.dim, act)

    # objects -------------------------------------------------------------

    def check_object(self, U):
        if not isinstance(U, tuple) or any(g not in self.gens for g in U):
            raise ValueError("%s: unknown object %r" % (self.name, U))
        if len(U) > self.max_len:
            raise ValueError("%s: word %r exceeds length bound %d" % (self.name, U, self.max_len))

    def dim_of(self, U):
        d = 1
        for g in U:
            d *= self.gens[g].dim
        return d

    def action(self, U, i):
        "matrix of basis element i on the word U, through iterated coproduct"
        key = (U, i)
        hit = self._act.get(key)
        if hit is not None:
            return hit
        if len(U) == 0:
            M = [[self.B.eps({i: Fraction(1)})]]
        elif len(U) == 1:
            M = self.gens[U[0]].action[i]
        else:
            M = _zeros(self.dim_of(U), self.dim_of(U))
            for (a, b), c in self.B.comult.get(i, {}).items():
                K = _kron(self.action(U[:1], a), self.action(U[1:], b))
                for p, row in enumerate(K):
                    for q, x in enumerate(row):
                        if x:
                            M[p][q] += c * x
        self._act[key] = M
        return M

    def _basis(self, U, V):
        key = (U, V)
        with self._lock:
            hit = self._hom.get(key)
        if hit is not None:
            return hit
        self.check_object(U)
        self.check_object(V)
        m, n = self.dim_of(V), self.dim_of(U)
        rows = []
        for i in range(self.B.n):
            A, Bm = self.action(V, i), self.action(U, i)
            for p in range(m):
                for q in range(n):
                    row = {}
                    for k in range(m):
                        if A[p][k]:
                            row[k * n + q] = row.get(k * n + q, 0) + A[p][k]
                    for k in range(n):
                        if Bm[k][q]:
                            row[p * n + k] = row.get(p * n + k, 0) - Bm[k][q]
                    row = {c: x for c, x in row.items() if x}
                    if row:
                        rows.append(row)
        vecs, free = sparse_nullspace(rows, m * n)
        mats = [[v[p * n:(p + 1) * n] for p in range(m)] for v in vecs]
        entry = (mats, free, m, n)
        with self._lock:
            self._hom.setdefault(key, entry)
        return entry

    def hom_dim(self, U, V):
        return len(self._basis(U, V)[0])

    def basis_matrix(self, U, V, a):
        return self._basis(U, V)[0][a]

    def matrix_of(self, U, V, vec):
        mats, _, m, n = self._basis(U, V)
        M = _zeros(m, n)
        for a, c in vec.items():
            for p in range(m):
                for q in range(n):
                    if mats[a][p][q]:
                        M[p][q] += c * mats[a][p][q]
        return M

    def coords(self, U, V, M, check=True):
        """coordinates of an intertwiner matrix; checked to lie in the span"""
        mats, free, m, n = self._basis(U, V)
        flat = _flatten(M)
        vec = {a: flat[f] for a, f in enumerate(free) if flat[f]}
        if check and self.matrix_of(U, V, vec) != [list(map(Fraction, r)) for r in M]:
            raise ValueError("%s: matrix is not a morphism %r -> %r" % (self.name, U, V))
        return vec

    def identity(self, U):
        return self.coords(U, U, eye(self.dim_of(U)), check=False)

    def compose_basis(self, U, V, W, g, f):
        key = ("c", U, V, W, g, f)
        hit = self._cc.get(key)
        if hit is None:
            M = matmul(self.basis_matrix(V, W, g), self.basis_matrix(U, V, f))
            hit = self.coords(U, W, M, check=False)
            self._cc[key] = hit
        return hit

    # tensor structure ----------------------------------------------------

    def tensor_objects(self, objs):
        out = ()
        for o in objs:
            out = out + tuple(o)
        return out

    def tensor_basis(self, U1, V1, U2, V2, a, b):
        key = ("t", U1, V1, U2, V2, a, b)
        hit = self._cc.get(key)
        if hit is None:
            M = _kron(self.basis_matrix(U1, V1, a), self.basis_matrix(U2, V2, b))
            hit = self.coords(U1 + U2, V1 + V2, M, check=False)
            self._cc[key] = hit
        return hit

    def flip_matrix(self, U, V):
        "U (x) V -> V (x) U, x (x) y -> y (x) x"
        du, dv = self.dim_of(U), self.dim_of(V)
        M = _zeros(dv * du, du * dv)
        for i in range(du):
            for j in range(dv):
                M[j * du + i][i * dv + j] = Fraction(1)
        return M

    def braid(self, U, V):
        if not self.has_braiding:
            raise CapabilityError("%s: braiding needs a cocommutative bialgebra" % self.name)
        key = ("b", U, V)
        hit = self._cc.get(key)
        if hit is None:
            hit = self.coords(U + V, V + U, self.flip_matrix(U, V))
            self._cc[key] = hit
        return hit

    def braid_inv(self, U, V):
        "sigma(V, U)^{-1} : U (x) V -> V (x) U; the flip again for a symmetric base"
        return self.braid(U, V)

    def dual(self, U):
        if not self.has_duals:
            raise CapabilityError("%s: duals need an antipode" % self.name)
        return tuple(g[:-1] if g.endswith("*") else g + "*" for g in reversed(U))

    def _pairing(self, U):
        "index maps: dual word basis index (reversed order) vs word index"
        dims = [self.gens[g].dim for g in U]
        idx = list(product(*[range(d) for d in dims]))
        rdims = list(reversed(dims))

        def pos(t, ds):
            p = 0
            for x, d in zip(t, ds):
                p = p * d + x
            return p

        return [(pos(tuple(reversed(t)), rdims), pos(t, dims)) for t in idx]

    def ev(self, U):
        "U* (x) U -> 1"
        Ud = self.dual(U)
        d = self.dim_of(U)
        M = [[Fraction(0)] * (d * d)]
        for pd, pu in self._pairing(U):
            M[0][pd * d + pu] = Fraction(1)
        return self.coords(Ud + U, (), M)

    def coev(self, U):
        "1 -> U (x) U*"
        Ud = self.dual(U)
        d = self.dim_of(U)
        M = [[Fraction(0)] for _ in range(d * d)]
        for pd, pu in self._pairing(U):
            M[pu * d + pd][0] = Fraction(1)
        return self.coords((), U + Ud, M)

    def trace(self, U, V, X, vec):
        "partial trace over the right factor X of a map U (x) X -> V (x) X"
        if not self.has_trace:
            raise CapabilityError("%s: no trace" % self.name)
        M = self.matrix_of(U + X, V + X, vec)
        du, dv, dx = self.dim_of(U), self.dim_of(V), self.dim_of(X)
        T = _zeros(dv, du)
        for p in range(dv):
            for q in range(du):
                T[p][q] = sum((M[p * dx + x][q * dx + x] for x in range(dx)), Fraction(0))
        return self.coords(U, V, T)

    def dim(self, X):
        return Fraction(self.dim_of(X))

    def sample_objects(self):
        base = [g for g in sorted(self.gens) if not g.endswith("*")]
        return [()] + [(g,) for g in base]

    def hom_labels(self, U, V):
        return ["e%d" % k for k in range(self.hom_dim(U, V))]

    def validate(self):
        issues = self.B.validate()
        for M in self.gens.values():
            issues += M.validate(self.B)
        if self.hom_dim((), ()) != 1:
            issues.append("End(unit) is not one-dimensional")
        return issues


# ---------------------------------------------------------------------------
# built-ins


def triv():
    "Rep(k): Deligne's case.  Only object: the empty word."
    return ModuleCategory(trivial_bialgebra(), [], name="triv")


def graded_lines(r=2):
    "Z/r-graded vector spaces generated by the lines L1..L(r-1)"
    B = function_algebra(r)
    return ModuleCategory(B, [graded_line(r, a) for a in range(1, r)], name="graded%d" % r)


def cyclic_group_modules(r=2):
    "k[Z/r]-modules generated by the regular module R"
    table = cyclic_table(r)
    return ModuleCategory(group_algebra(table, name="k[Z/%d]" % r), [regular_module(table)],
                          name="kz%d" % r)


BUILTINS = {
    "triv": triv,
    "graded2": lambda: graded_lines(2),
    "graded3": lambda: graded_lines(3),
    "kz2": lambda: cyclic_group_modules(2),
    "kz3": lambda: cyclic_group_modules(3),
    "triv-linear": trivial_linear,
}

_BUILT = {}


def builtin(name):
    if name not in BUILTINS:
        raise KeyError("unknown built-in base %r (have %s)" % (name, ", ".join(sorted(BUILTINS))))
    if name not in _BUILT:
        _BUILT[name] = BUILTINS[name]()
    return _BUILT[name]


# ---------------------------------------------------------------------------
# functors between bases


class BaseFunctor:
    """
    Unit-preserving linear functor given by an object map and, per object
    pair, the matrix sending Hom_C(U,V) coordinates to Hom_D(FU,FV)
    coordinates (``hom[(U, V)][b]`` = image of basis b as sparse dict).
    """

    def __init__(self, source, target, obj_map, hom, name="F"):
        self.source = source
        self.target = target
        self.obj_map = obj_map
        self.hom = hom
        self.name = name

    def obj(self, U):
        return self.obj_map(U)

    def map_basis(self, U, V, b):
        return self.hom(U, V, b)

    def validate(self, objects):
        C, D = self.source, self.target
        issues = []
        if self.obj(C.unit) != D.unit:
            issues.append("functor does not preserve the unit")
        for U in objects:
            img = {}
            for b, c in C.identity(U).items():
                for k, x in self.map_basis(U, U, b).items():
                    img[k] = img.get(k, 0) + c * x
            if {k: v for k, v in img.items() if v} != D.identity(self.obj(U)):
                issues.append("identity of %r not preserved" % (U,))
        for U, V, W in product(objects, repeat=3):
            for f in range(C.hom_dim(U, V)):
                for g in range(C.hom_dim(V, W)):
                    lhs = {}
                    for k, c in C.compose_basis(U, V, W, g, f).items():
                        for j, x in self.map_basis(U, W, k).items():
                            lhs[j] = lhs.get(j, 0) + c * x
                    lhs = {k: v for k, v in lhs.items() if v}
                    rhs = D.compose(self.obj(U), self.obj(V), self.obj(W),
                                    self.map_basis(V, W, g), self.map_basis(U, V, f))
                    if lhs != rhs:
                        issues.append("composition not preserved on (%r,%r,%r) basis (%d,%d)" % (U, V, W, f, g))
        return issues


def identity_functor(C):
    return BaseFunctor(C, C, lambda U: U, lambda U, V, b: {b: Fraction(1)}, name="id")


def forget_grading(r=2):
    """
    Z/r-graded lines -> Rep(k), forgetting the grading: every word is a
    line, so it goes to the unit, and a 1x1 intertwiner to its entry.
    """
    C = builtin("graded%d" % r) if r in (2, 3) else graded_lines(r)
    D = builtin("triv")

    def hom(U, V, b):
        return {0: Fraction(C.basis_matrix(U, V, b)[0][0])}

    return BaseFunctor(C, D, lambda U: (), hom, name="forget")


def character_hom_dim(table, modules_words, U, V, gens):
    """
    dim Hom_G(U, V) = (1/|G|) sum_g chi_U(g^{-1}) chi_V(g) for permutation-type
    modules of k[G].  Independent of the nullspace route.
    """
    n = len(table)
    inv = [next(j for j in range(n) if table[i][j] == 0) for i in range(n)]

    def chi(W, g):
        x = Fraction(1)
        for name in W:
            M = gens[name].action[g]
            x *= sum((M[k][k] for k in range(len(M))), Fraction(0))
        return x

    return sum((chi(U, inv[g]) * chi(V, g) for g in range(n)), Fraction(0)) / n
