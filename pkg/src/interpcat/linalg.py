"""
Small exact linear algebra over Q (lists of Fraction rows), plus a
fraction-free determinant usable over Q[t].
"""

from fractions import Fraction

from .scalar import Poly


def rref(rows, ncols=None):
    """
    Reduced row echelon form.  Returns (R, pivots) where R holds only the
    nonzero rows.  Input is not modified.
    """
    A = [[Fraction(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(A[0]) if A else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = None
        for i in range(r, len(A)):
            if A[i][c] != 0:
                p = i
                break
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        if piv != 1:
            A[r] = [x / piv for x in A[r]]
        prow = A[r]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                row = A[i]
                A[i] = [x - f * y for x, y in zip(row, prow)]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    return A[:r], pivots


def rank(rows, ncols=None):
    if not rows:
        return 0
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """
    Basis of {x : A x = 0}, one vector per free column, in increasing
    free-column order.  Each basis vector is 1 at its own free column and
    0 at every other free column, so coordinates of any kernel element
    are read off at the free columns.
    """
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)], list(range(ncols))
    R, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis, free


def row_space_basis(rows, ncols=None):
    return rref(rows, ncols)[0]


def solve(rows, rhs):
    """
    One solution x of A x = b, or None when inconsistent.
    """
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    R, pivots = rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    return x


def in_span(basis_rows, v):
    if not basis_rows:
        return all(x == 0 for x in v)
    return rank(list(basis_rows) + [list(v)]) == rank(basis_rows)


def matmul(A, B):
    "plain product of list matrices"
    if not A:
        return []
    m = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [Fraction(0)] * m
        for k, a in enumerate(row):
            if a:
                for j, b in enumerate(B[k]):
                    if b:
                        acc[j] += a * b
        out.append(acc)
    return out


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def det_bareiss(M):
    """
    Determinant by fraction-free (Bareiss) elimination.  Entries may be
    Fraction or Poly; divisions are exact in both cases.
    """
    n = len(M)
    if n == 0:
        return Fraction(1)
    A = [list(row) for row in M]
    poly = any(isinstance(x, Poly) for row in A for x in row)
    if poly:
        A = [[x if isinstance(x, Poly) else Poly((x,)) for x in row] for row in A]
        one = Poly((1,))
    else:
        A = [[Fraction(x) for x in row] for row in A]
        one = Fraction(1)

    def div(a, b):
        return a.exact_div(b) if poly else a / b

    sign = 1
    prev = one
    for k in range(n - 1):
        if not A[k][k]:
            swap = None
            for i in range(k + 1, n):
                if A[i][k]:
                    swap = i
                    break
            if swap is None:
                return Poly() if poly else Fraction(0)
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = div(A[i][j] * akk - A[i][k] * A[k][j], prev)
            A[i][k] = Poly() if poly else Fraction(0)
        prev = akk
    d = A[n - 1][n - 1]
    return d if sign > 0 else -d


def sparse_nullspace(rows, ncols):
    """
    Nullspace for sparse systems given as dicts {col: coeff}.  Same basis
    convention as :func:`nullspace` (ascending free columns, unit at own
    free column), so both routes produce identical bases.
    """
    piv = {}  # pivot col -> fully reduced row (dict), leading coeff 1
    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        # reduce against pivots until no pivot column remains
        changed = True
        while changed and r:
            changed = False
            for c in [c for c in r if c in piv]:
                f = r.get(c)
                if not f:
                    continue
                for k, v in piv[c].items():
                    nv = r.get(k, 0) - f * v
                    if nv:
                        r[k] = nv
                    else:
                        r.pop(k, None)
                changed = True
        if not r:
            continue
        pc = min(r)
        lead = r[pc]
        r = {k: v / lead for k, v in r.items()}
        for c, prow in piv.items():
            f = prow.get(pc)
            if f:
                for k, v in r.items():
                    nv = prow.get(k, 0) - f * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
        piv[pc] = r
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for pc, prow in piv.items():
            x = prow.get(f)
            if x:
                v[pc] = -x
        basis.append(v)
    return basis, free
