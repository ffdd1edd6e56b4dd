"""
Independent reference computations used by the tests.  Nothing here
imports the engine: set partitions are generated by brute force and the
partition algebra is multiplied by gluing diagrams.
"""

from fractions import Fraction
from itertools import product


def set_partitions(xs):
    xs = list(xs)
    if not xs:
        yield []
        return
    first, rest = xs[0], xs[1:]
    for p in set_partitions(rest):
        yield [[first]] + p
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]


def bell_triangle(n):
    row = [1]
    out = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        out.append(row[0])
    return out[n]


def canon(blocks, n):
    lab = [None] * n
    for k, b in enumerate(blocks):
        for x in b:
            lab[x] = k
    seen, out = {}, []
    for v in lab:
        if v not in seen:
            seen[v] = len(seen)
        out.append(seen[v])
    return tuple(out)


def recollements(sizes):
    """brute force: partitions meeting every factor at most once per block"""
    n = sum(sizes)
    fac = []
    for a, s in enumerate(sizes):
        fac += [a] * s
    out = set()
    for p in set_partitions(range(n)):
        if all(len({fac[x] for x in b}) == len(b) for b in p):
            out.add(canon(p, n))
    return sorted(out)


def integer_partitions(k, largest=None):
    largest = k if largest is None else largest
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in integer_partitions(k - first, first):
            yield (first,) + rest


def young_count(m):
    "number of Young diagrams of size at most m"
    return sum(1 for k in range(m + 1) for _ in integer_partitions(k))


class PolyT:
    """tiny polynomial in t over Q, dict degree -> coefficient"""

    def __init__(self, d=None):
        self.d = {k: Fraction(v) for k, v in (d or {}).items() if v}

    def __add__(self, o):
        d = dict(self.d)
        for k, v in o.d.items():
            d[k] = d.get(k, 0) + v
        return PolyT(d)

    def __mul__(self, o):
        d = {}
        for a, x in self.d.items():
            for b, y in o.d.items():
                d[a + b] = d.get(a + b, 0) + x * y
        return PolyT(d)

    def coeffs(self):
        if not self.d:
            return ()
        return tuple(self.d.get(k, Fraction(0)) for k in range(max(self.d) + 1))


def partition_diagram_product(a, b, m):
    """
    a o b for set partitions of 2m points (0..m-1 source, m..2m-1 target):
    b below, a above.  Returns (canonical rgs of the product, loops).
    """
    # points: b source 0..m-1, middle m..2m-1, a target 2m..3m-1
    parent = list(range(3 * m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    for blk in _blocks(b):
        for x in blk[1:]:
            union(blk[0], x)
    for blk in _blocks(a):
        sh = [x + m for x in blk]
        for x in sh[1:]:
            union(sh[0], x)
    outer = list(range(m)) + list(range(2 * m, 3 * m))
    roots_outer = {find(x) for x in outer}
    loops = len({find(x) for x in range(m, 2 * m)} - roots_outer)
    lab = [find(x) for x in outer]
    return canon(_from_labels(lab), 2 * m), loops


def _blocks(rgs):
    d = {}
    for x, v in enumerate(rgs):
        d.setdefault(v, []).append(x)
    return list(d.values())


def _from_labels(lab):
    d = {}
    for x, v in enumerate(lab):
        d.setdefault(v, []).append(x)
    return list(d.values())


def character_dims_graded(r, U, V):
    """Hom dimension between Z/r-graded words of lines: 1 if degrees agree mod r"""
    deg = lambda w: sum(int(g[1:]) for g in w) % r
    return 1 if deg(U) == deg(V) else 0
