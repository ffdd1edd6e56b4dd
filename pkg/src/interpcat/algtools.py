"""
Finite-dimensional algebras given by structure constants: endomorphism
algebras of the engine, trace-form radicals, Gram determinants in t,
quotients, and Wedderburn block counting over Q.
"""

from fractions import Fraction
import random

import sympy

from .scalar import Poly, Ring
from .linalg import rref, rank, nullspace, det_bareiss, solve, identity as eye
from .interp import (hom_basis, basis_element, identity, compose, compose_double_bracket,
                     to_double_bracket)


class AlgebraTable:
    """
    n-dimensional algebra, ``consts[(i, j)] = {k: c}`` meaning
    e_i e_j = sum_k c e_k, scalars in ``ring``.
    """

    def __init__(self, n, consts, unit, ring, labels=None):
        self.n = n
        self.ring = ring
        self.consts = {k: {i: ring.coerce(c) for i, c in v.items() if c} for k, v in consts.items()}
        self.consts = {k: v for k, v in self.consts.items() if v}
        self.unit = {i: ring.coerce(c) for i, c in unit.items() if c}
        self.labels = labels or ["e%d" % i for i in range(n)]

    def mul(self, a, b):
        out = {}
        z = self.ring.zero
        for i, x in a.items():
            for j, y in b.items():
                for k, c in self.consts.get((i, j), {}).items():
                    out[k] = out.get(k, z) + x * y * c
        return {k: v for k, v in out.items() if v}

    def e(self, i):
        return {i: self.ring.one}

    def validate(self):
        issues = []
        n = self.n
        for i in range(n):
            if self.mul(self.unit, self.e(i)) != self.e(i) or self.mul(self.e(i), self.unit) != self.e(i):
                issues.append("unit law fails on %s" % self.labels[i])
        for i in range(n):
            for j in range(n):
                ij = self.consts.get((i, j), {})
                for k in range(n):
                    if self.mul(ij, self.e(k)) != self.mul(self.e(i), self.consts.get((j, k), {})):
                        issues.append("associativity fails on (%d,%d,%d)" % (i, j, k))
        return issues

    def specialize(self, t0):
        R = Ring(t0)
        return AlgebraTable(self.n, {k: {i: R.coerce(c) for i, c in v.items()} for k, v in self.consts.items()},
                            {i: R.coerce(c) for i, c in self.unit.items()}, R, self.labels)

    def left_matrix(self, a):
        "matrix of x -> a x (columns = basis inputs)"
        M = [[self.ring.zero] * self.n for _ in range(self.n)]
        for j in range(self.n):
            for k, c in self.mul(a, self.e(j)).items():
                M[k][j] = c
        return M

    def vec(self, a):
        z = self.ring.zero
        return [a.get(i, z) for i in range(self.n)]

    def to_text(self):
        from .formats import write_table
        return write_table(self)


def end_algebra(A, base, ring, basis="bracket"):
    """End(A) with product a.b = a o b in the bracket or double-bracket basis"""
    keys = hom_basis(A, A, base)
    index = {k: i for i, k in enumerate(keys)}
    kind = "double" if basis == "double" else "bracket"
    els = [basis_element(A, A, base, ring, k, basis=kind) for k in keys]
    consts = {}
    for i, a in enumerate(els):
        for j, b in enumerate(els):
            prod = compose_double_bracket(a, b) if kind == "double" else compose(a, b)
            consts[(i, j)] = {index[k]: c for k, c in prod.terms.items()}
    idm = identity(A, base, ring)
    if kind == "double":
        idm = to_double_bracket(idm)
    unit = {index[k]: c for k, c in idm.terms.items()}
    labels = [_key_label(k) for k in keys]
    T = AlgebraTable(len(keys), consts, unit, ring, labels)
    T.keys = keys
    T.obj = A
    T.base = base
    T.basis_kind = kind
    return T


def _key_label(key):
    r, idx = key
    return r.block_text() + ("" if all(i == 0 for i in idx) else "@" + ".".join(map(str, idx)))


def group_algebra_table(n_letters):
    from itertools import permutations
    from .karoubi import perm_mul
    perms = list(permutations(range(n_letters)))
    idx = {g: i for i, g in enumerate(perms)}
    consts = {(i, j): {idx[perm_mul(g, h)]: 1} for i, g in enumerate(perms) for j, h in enumerate(perms)}
    T = AlgebraTable(len(perms), consts, {0: 1}, Ring(0), ["".join(map(str, g)) for g in perms])
    T.perms = perms
    return T


def product_algebra(dims_ring):
    "Q x ... x Q (n copies) as a test fixture"
    n = dims_ring
    return AlgebraTable(n, {(i, i): {i: 1} for i in range(n)}, {i: 1 for i in range(n)}, Ring(0))


# ---------------------------------------------------------------------------
# trace form


def trace_vector(A):
    "tau_k = tr(L_{e_k}) = sum_l c_{kl}^l"
    z = A.ring.zero
    tau = [z] * A.n
    for (k, l), v in A.consts.items():
        c = v.get(l)
        if c:
            tau[k] = tau[k] + c
    return tau


def gram_matrix(A):
    tau = trace_vector(A)
    z = A.ring.zero
    G = [[z] * A.n for _ in range(A.n)]
    for (i, j), v in A.consts.items():
        s = z
        for k, c in v.items():
            s = s + c * tau[k]
        G[i][j] = s
    return G


def gram_det(A):
    G = gram_matrix(A)
    d = det_bareiss(G)
    return d if isinstance(d, Poly) else Fraction(d)


def _sympy_poly(p):
    t = sympy.Symbol("t")
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)], t)


def rational_roots(p):
    """distinct rational roots of a nonzero Poly, ascending"""
    if not p:
        raise ValueError("zero polynomial has every root")
    if p.degree == 0:
        return []
    out = []
    for fac, _ in _sympy_poly(p).factor_list()[1]:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            q = -sympy.Rational(b) / sympy.Rational(a)
            out.append(Fraction(int(q.p), int(q.q)))
    return sorted(set(out))


def radical(A):
    """Jacobson radical at a specialized rank: nullspace of the trace form"""
    if A.ring.is_symbolic:
        raise ValueError("radical needs a specialized rank")
    G = gram_matrix(A)
    basis, _ = nullspace(G, A.n)
    return basis


def _rational(v):
    """vector of Fractions; constant polynomials allowed"""
    out = []
    for x in v:
        if isinstance(x, Poly):
            if x.degree is not None and x.degree > 0:
                raise ValueError("ideal vectors must have rational coordinates; specialize the rank first")
            x = x.coeffs[0] if x.coeffs else Fraction(0)
        out.append(Fraction(x))
    return out


def _reducer(basis, n):
    """(rref rows, pivots, reduce) with reduce(v) = v minus its pivot combination"""
    R, piv = rref([_rational(v) for v in basis], n) if basis else ([], [])

    def reduce(v):
        v = list(v)
        for row, pc in zip(R, piv):
            f = v[pc]
            if f:
                v = [a - f * b if b else a for a, b in zip(v, row)]
        return v
    return R, piv, reduce


def check_ideal(A, basis):
    """None if span(basis) is a two-sided ideal, else a witness (side, i, vector)"""
    if not basis:
        return None
    _, _, reduce = _reducer(basis, A.n)
    for v in basis:
        vd = {i: c for i, c in enumerate(v) if c}
        for i in range(A.n):
            for side, w in (("left", A.mul(A.e(i), vd)), ("right", A.mul(vd, A.e(i)))):
                if any(reduce(A.vec(w))):
                    return (side, i, v)
    return None


def is_nilpotent_ideal(A, basis, max_power=None):
    """the ideal spanned by ``basis`` is nilpotent: its powers reach zero"""
    if not basis:
        return True
    cur = [list(v) for v in basis]
    for _ in range(max_power or A.n + 1):
        prods = []
        for v in cur:
            vd = {i: c for i, c in enumerate(v) if c}
            for w in basis:
                wd = {i: c for i, c in enumerate(w) if c}
                p = A.mul(vd, wd)
                if p:
                    prods.append(A.vec(p))
        if not prods:
            return True
        cur, _ = rref(prods, A.n)
        if not cur:
            return True
    return False


def quotient_by_ideal(A, basis):
    """A / span(basis); raises with a witness unless the span is a two-sided ideal"""
    w = check_ideal(A, basis)
    if w is not None:
        raise ValueError("not a two-sided ideal: %s multiplication by e%d leaves the span (vector %r)"
                         % (w[0], w[1], [str(x) for x in w[2]]))
    _, piv, red = _reducer(basis, A.n)
    keep = [i for i in range(A.n) if i not in set(piv)]
    pos = {i: k for k, i in enumerate(keep)}

    def reduce(v):
        v = red(v)
        return {pos[i]: v[i] for i in keep if v[i]}

    consts = {}
    for a, i in enumerate(keep):
        for b, j in enumerate(keep):
            consts[(a, b)] = reduce(A.vec(A.consts.get((i, j), {})))
    unit = reduce(A.vec(A.unit))
    Q = AlgebraTable(len(keep), consts, unit, A.ring, [A.labels[i] for i in keep])
    Q.reduce = reduce
    Q.kept = keep
    return Q


def group_algebra_iso_check(Q, m, elements):
    """
    ``elements[g]`` = image in Q (sparse dict) of the permutation g of m
    letters.  Checks they form a basis and multiply like S_m.
    """
    from itertools import permutations
    from .karoubi import perm_mul
    perms = list(permutations(range(m)))
    report = {"dim": Q.n, "group_order": len(perms), "basis": False, "table": False}
    try:
        rows = [_rational(Q.vec(elements[g])) for g in perms]
        report["basis"] = len(perms) == Q.n and rank(rows, Q.n) == Q.n
    except ValueError:
        report["basis"] = False
    ok = True
    for g in perms:
        for h in perms:
            if Q.mul(elements[g], elements[h]) != {k: v for k, v in elements[perm_mul(g, h)].items() if v}:
                ok = False
    report["table"] = ok
    report["ok"] = report["basis"] and ok
    return report


# ---------------------------------------------------------------------------
# Wedderburn blocks


def center(A):
    rows = []
    for i in range(A.n):
        # a e_i - e_i a = 0 as linear conditions on a
        block = [[A.ring.zero] * A.n for _ in range(A.n)]
        for j in range(A.n):
            for k, c in A.consts.get((j, i), {}).items():
                block[k][j] += c
            for k, c in A.consts.get((i, j), {}).items():
                block[k][j] -= c
        rows.extend(block)
    basis, _ = nullspace(rows, A.n)
    return basis


def _matvec(M, v):
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in M]


def _minpoly_of(M, n):
    "minimal polynomial of a square Fraction matrix (monic coefficient list, low degree first)"
    powers = [sum(eye(n), [])]
    P = eye(n)
    while True:
        P = [[sum((P[i][k] * M[k][j] for k in range(n) if P[i][k]), Fraction(0)) for j in range(n)]
             for i in range(n)]
        flat = sum(P, [])
        cols = powers
        # solve flat = sum a_k powers[k]
        A_ = [[cols[k][x] for k in range(len(cols))] for x in range(n * n)]
        sol = solve(A_, flat)
        if sol is not None:
            return [-c for c in sol] + [Fraction(1)]
        powers.append(flat)


class NotSemisimple(Exception):
    pass


def count_simples(A, seed=0, tries=8):
    """
    Wedderburn block count of a semisimple algebra at a specialized rank:
    (number of blocks, matrix sizes).  A non-split block is reported as
    ("non-split", dim).
    """
    if A.ring.is_symbolic:
        raise ValueError("count_simples needs a specialized rank")
    if radical(A):
        raise NotSemisimple("radical is nonzero; count_simples needs a semisimple algebra")
    Z = center(A)
    zdim = len(Z)
    rng = random.Random(seed)
    t = sympy.Symbol("t")
    for _ in range(tries):
        z = [Fraction(0)] * A.n
        for v in Z:
            c = rng.randint(-9, 9)
            z = [a + c * b for a, b in zip(z, v)]
        zd = {i: c for i, c in enumerate(z) if c}
        L = A.left_matrix(zd)
        mp = _minpoly_of(L, A.n)
        fac = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(mp)], t).factor_list()[1]
        if len(fac) != sum(1 for _ in fac) or any(e > 1 for _, e in fac):
            continue
        blocks = []
        zsum = 0
        for f, _ in fac:
            coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(f.all_coeffs())]
            # f(L) kernel
            n = A.n
            F = [[Fraction(0)] * n for _ in range(n)]
            P = eye(n)
            for c in coeffs:
                F = [[F[i][j] + c * P[i][j] for j in range(n)] for i in range(n)]
                P = [[sum((P[i][k] * L[k][j] for k in range(n) if P[i][k]), Fraction(0)) for j in range(n)]
                     for i in range(n)]
            kdim = n - rank(F, n)
            # center dimension inside the block
            zrows = []
            for v in Z:
                zrows.append(_matvec(F, v))
            zblock = len(Z) - rank(zrows, n) if zrows else 0
            zsum += zblock
            deg = len(coeffs) - 1
            if deg == 1 and zblock == 1:
                d = int(round(kdim ** 0.5))
                if d * d != kdim:
                    raise ArithmeticError("block of dimension %d is not a square" % kdim)
                blocks.append(d)
            elif deg == 1:
                blocks = None
                break
            else:
                blocks.append(("non-split", kdim))
        if blocks is not None and zsum == zdim:
            return len(blocks), sorted(blocks, key=lambda b: (isinstance(b, tuple), b))
    raise ArithmeticError("no separating central element found in %d tries" % tries)


def count_simples_bruteforce(A, seed=1):
    """
    Independent route with floats: for a generic element a of a split
    semisimple algebra, L_a has d distinct eigenvalues of multiplicity d
    for each d x d block.  Returns the sorted list of block sizes.
    """
    import numpy as np
    rng = random.Random(seed)
    a = {i: Fraction(rng.randint(-50, 50), rng.randint(1, 7)) for i in range(A.n)}
    L = np.array([[float(x) for x in row] for row in A.left_matrix(a)])
    ev = np.linalg.eigvals(L)
    scale = max(1.0, float(np.max(np.abs(ev))))
    tol = 1e-6 * scale
    clusters = []
    for x in sorted(ev, key=lambda z: (round(z.real, 4), round(z.imag, 4))):
        for c in clusters:
            if abs(c[0] - x) < tol:
                c[1] += 1
                break
        else:
            clusters.append([x, 1])
    mult = {}
    for _, m in clusters:
        mult[m] = mult.get(m, 0) + 1
    sizes = []
    for m, cnt in sorted(mult.items()):
        if cnt % m:
            raise ArithmeticError("eigenvalue multiplicities inconsistent with a split semisimple algebra")
        sizes += [m] * (cnt // m)
    return sorted(sizes)


def locality(A):
    """
    ("local (split)", True) when A/rad is one-dimensional;
    ("not local", False) when A/rad has a split block count > 1 or a
    matrix block; ("inconclusive (residue dim > 1)", None) otherwise.
    """
    rad = radical(A)
    Q = quotient_by_ideal(A, rad)
    if Q.n == 1:
        return "local (split)", True
    try:
        k, dims = count_simples(Q)
    except ArithmeticError:
        return "inconclusive (residue dim > 1)", None
    if k > 1 or any(isinstance(d, int) and d > 1 for d in dims):
        return "not local", False
    return "inconclusive (residue dim > 1)", None


def is_local(A):
    return locality(A)[1] is True


# ---------------------------------------------------------------------------
# filtration ideal and the symmetric group quotient


def morphism_vector(T, Phi):
    "coordinates of a morphism of T.obj in the table's basis"
    index = {k: i for i, k in enumerate(T.keys)}
    v = [T.ring.zero] * T.n
    for k, c in Phi.terms.items():
        v[index[k]] = v[index[k]] + c
    return v


def filtration_ideal(T, d):
    """basis vectors of <<H^{>=d}>> inside an end_algebra table (bracket basis)"""
    from .interp import filtration_span
    A = T.obj
    return [morphism_vector(T, f) for f in filtration_span(A, A, T.base, T.ring, d)]


def symmetric_quotient(T):
    """
    E/I with I = <<H^{>m}>> for T = End(<U,...,U>) (m equal entries), and
    the iso check against S_m under the sym_action labeling.
    """
    from itertools import permutations
    from .karoubi import sym_action
    A = T.obj
    m = len(A.family()) if A.factors else 0
    I = filtration_ideal(T, m + 1)
    Q = quotient_by_ideal(T, I)
    els = {}
    for g in permutations(range(m)):
        v = morphism_vector(T, sym_action(g, A, T.base, T.ring))
        els[g] = Q.reduce(v)
    return Q, I, group_algebra_iso_check(Q, m, els)


def formal_end_algebra(X):
    """End(X) = e End(plain X) e for a formal object X of the Karoubi envelope"""
    from .karoubi import MatrixMorphism, compress
    from .interp import zero
    base, ring = X.base, X.ring
    if ring.is_symbolic:
        raise ValueError("formal_end_algebra needs a specialized rank")
    coords = {}

    def flat(f):
        v = {}
        for j, row in enumerate(f.entries):
            for i, m in enumerate(row):
                for k, c in m.terms.items():
                    v[(i, j, k)] = c
                    coords.setdefault((i, j, k), len(coords))
        return v

    cands = []
    for i, a in enumerate(X.summands):
        for j, b in enumerate(X.summands):
            for key in hom_basis(a, b, base):
                ent = [[zero(s, t, base, ring) for s in X.summands] for t in X.summands]
                ent[j][i] = basis_element(a, b, base, ring, key)
                f = compress(MatrixMorphism(X, X, ent, check=False))
                cands.append((f, flat(f)))

    def dense(v):
        row = [Fraction(0)] * len(coords)
        for k, c in v.items():
            row[coords[k]] = c
        return row

    chosen, rows = [], []
    for f, v in cands:
        if rank(rows + [dense(v)], len(coords)) > len(rows):
            rows.append(dense(v))
            chosen.append(f)
    rows = [dense(flat(f)) for f in chosen]
    n = len(chosen)
    cols = [[rows[k][x] for k in range(n)] for x in range(len(coords))]

    def express(f):
        sol = solve(cols, dense(flat(f)))
        if sol is None:
            raise ArithmeticError("product left the compressed hom space")
        return {k: c for k, c in enumerate(sol) if c}

    consts = {(a, b): express(chosen[a].compose_raw(chosen[b])) for a in range(n) for b in range(n)}
    unit = express(X.identity()) if n else {}
    return AlgebraTable(n, consts, unit, ring)
