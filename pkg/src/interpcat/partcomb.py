"""
Set partitions and recollements.

A recollement of index sets I_1, ..., I_l is a partition of their disjoint
union in which no block holds two elements of the same I_a.  Factor a
occupies the contiguous global index range ``offsets[a] : offsets[a+1]``.

Everything is encoded by restricted growth strings (RGS): ``rgs[x]`` is the
block number of element x, blocks numbered by first appearance.  All
enumerations are lexicographic in the RGS.

Order convention: ``coarser_or_equal(p, q)`` is true when q refines p,
which is the order written p <= q for recollements.
"""

import os
from itertools import combinations, permutations
from math import comb, factorial

DEFAULT_LIMIT = int(os.environ.get("INTERPCAT_LIMIT", "12"))


class ResourceLimit(Exception):
    pass


def _canon(labels):
    "relabel a block-label sequence into an RGS"
    seen = {}
    out = []
    for x in labels:
        if x not in seen:
            seen[x] = len(seen)
        out.append(seen[x])
    return tuple(out)


class SetPartition:
    """partition of {0..n-1}"""

    __slots__ = ("rgs", "_blocks")

    def __init__(self, rgs):
        self.rgs = _canon(rgs)
        self._blocks = None

    @classmethod
    def from_blocks(cls, blocks, n=None):
        if n is None:
            n = sum(len(b) for b in blocks)
        lab = [None] * n
        for k, b in enumerate(blocks):
            for x in b:
                if not 0 <= x < n or lab[x] is not None:
                    raise ValueError("blocks %r do not partition range(%d)" % (blocks, n))
                lab[x] = k
        if any(x is None for x in lab):
            raise ValueError("blocks %r do not cover range(%d)" % (blocks, n))
        return cls(lab)

    @property
    def n(self):
        return len(self.rgs)

    @property
    def blocks(self):
        if self._blocks is None:
            bs = [[] for _ in range(max(self.rgs) + 1 if self.rgs else 0)]
            for x, b in enumerate(self.rgs):
                bs[b].append(x)
            self._blocks = tuple(tuple(b) for b in bs)
        return self._blocks

    def __len__(self):
        return len(self.blocks)

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self.rgs == other.rgs

    def __hash__(self):
        return hash(("P", self.rgs))

    def __lt__(self, other):
        return self.rgs < other.rgs

    def __repr__(self):
        return "SetPartition(%s)" % (self.to_text(),)

    def to_text(self):
        return "[" + ",".join("[" + ",".join(map(str, b)) + "]" for b in self.blocks) + "]"


class Recollement:
    """
    Recollement of factors with the given sizes.  ``blocks`` lists global
    indices; ``rgs`` is the canonical encoding.
    """

    __slots__ = ("sizes", "rgs", "_blocks", "_offsets", "_hash")

    def __init__(self, sizes, rgs, check=True):
        self.sizes = tuple(sizes)
        self.rgs = _canon(rgs)
        self._blocks = None
        self._offsets = None
        self._hash = None
        if len(self.rgs) != sum(self.sizes):
            raise ValueError("rgs length %d != total size %d" % (len(self.rgs), sum(self.sizes)))
        if check:
            for lo, hi in zip(self.offsets, self.offsets[1:]):
                seg = self.rgs[lo:hi]
                if len(set(seg)) != len(seg):
                    raise ValueError("not a recollement: factor %d-%d glued to itself" % (lo, hi))

    @classmethod
    def from_blocks(cls, sizes, blocks):
        n = sum(sizes)
        return cls(sizes, SetPartition.from_blocks(blocks, n).rgs)

    @classmethod
    def finest(cls, sizes):
        return cls(sizes, range(sum(sizes)), check=False)

    @classmethod
    def empty(cls):
        return cls((), (), check=False)

    @property
    def offsets(self):
        if self._offsets is None:
            off = [0]
            for s in self.sizes:
                off.append(off[-1] + s)
            self._offsets = tuple(off)
        return self._offsets

    @property
    def n(self):
        return len(self.rgs)

    @property
    def blocks(self):
        if self._blocks is None:
            bs = [[] for _ in range(max(self.rgs) + 1 if self.rgs else 0)]
            for x, b in enumerate(self.rgs):
                bs[b].append(x)
            self._blocks = tuple(tuple(b) for b in bs)
        return self._blocks

    def __len__(self):
        "number of blocks, written #r"
        return len(self.blocks)

    def factor_of(self, x):
        off = self.offsets
        for a in range(len(self.sizes)):
            if off[a] <= x < off[a + 1]:
                return a
        raise IndexError(x)

    def locate(self, x):
        "global index -> (factor, local index)"
        a = self.factor_of(x)
        return a, x - self.offsets[a]

    def partition(self):
        return SetPartition(self.rgs)

    def __eq__(self, other):
        return isinstance(other, Recollement) and self.sizes == other.sizes and self.rgs == other.rgs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.sizes, self.rgs))
        return self._hash

    def __lt__(self, other):
        return (self.sizes, self.rgs) < (other.sizes, other.rgs)

    def __repr__(self):
        return "Recollement(%s, %s)" % (list(self.sizes), self.block_text())

    def block_text(self):
        return "[" + ",".join("[" + ",".join(map(str, b)) + "]" for b in self.blocks) + "]"


# enumeration ---------------------------------------------------------------


def bell(n):
    "Bell number via the Bell triangle"
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def _check_limit(n, limit):
    limit = DEFAULT_LIMIT if limit is None else limit
    if n > limit:
        raise ResourceLimit("enumeration over %d elements exceeds limit %d" % (n, limit))


def _rgs_iter(n, factor=None):
    """
    Lexicographic restricted growth strings of length n.  If ``factor`` is
    given (factor index per position), a block may hold at most one
    position of each factor.
    """
    if n == 0:
        yield ()
        return
    rgs = [0] * n
    used = []  # used[b] = set of factors in block b

    def rec(x, nblocks):
        if x == n:
            yield tuple(rgs)
            return
        fx = None if factor is None else factor[x]
        for b in range(nblocks + 1):
            if b < nblocks:
                if fx is not None and fx in used[b]:
                    continue
                rgs[x] = b
                if fx is not None:
                    used[b].add(fx)
                yield from rec(x + 1, nblocks)
                if fx is not None:
                    used[b].discard(fx)
            else:
                rgs[x] = b
                used.append({fx} if fx is not None else set())
                yield from rec(x + 1, nblocks + 1)
                used.pop()

    yield from rec(0, 0)


def enumerate_partitions(n, limit=None):
    _check_limit(n, limit)
    return [SetPartition(r) for r in _rgs_iter(n)]


_RECOLL_CACHE = {}


def enumerate_recollements(sizes, limit=None):
    sizes = tuple(sizes)
    _check_limit(sum(sizes), limit)
    hit = _RECOLL_CACHE.get(sizes)
    if hit is not None:
        return hit
    factor = [a for a, s in enumerate(sizes) for _ in range(s)]
    out = tuple(Recollement(sizes, r, check=False) for r in _rgs_iter(len(factor), factor))
    _RECOLL_CACHE[sizes] = out
    return out


def count_recollements_2(m, n):
    "|R(m, n)| = sum_k C(m,k) C(n,k) k!"
    return sum(comb(m, k) * comb(n, k) * factorial(k) for k in range(min(m, n) + 1))


# order ---------------------------------------------------------------------


def _same_shape(p, q):
    if isinstance(p, Recollement) and isinstance(q, Recollement):
        if p.sizes != q.sizes:
            raise ValueError("shape mismatch: %r vs %r" % (p.sizes, q.sizes))
    elif p.n != q.n:
        raise ValueError("ground set mismatch: %d vs %d" % (p.n, q.n))


def coarser_or_equal(p, q):
    "True iff every block of q lies inside a block of p (q refines p)"
    _same_shape(p, q)
    for b in q.blocks:
        lab = p.rgs[b[0]]
        if any(p.rgs[x] != lab for x in b):
            return False
    return True


def common_refinement(p, q):
    _same_shape(p, q)
    labels = list(zip(p.rgs, q.rgs))
    if isinstance(p, Recollement):
        return Recollement(p.sizes, labels, check=False)
    return SetPartition(labels)


def mobius(s, r):
    """
    Mobius function mu(s, r) for s <= r (r refines s).  The interval is a
    product of full partition lattices, one per block of s, so
    mu = prod (-1)^(k-1) (k-1)! over blocks of s holding k blocks of r.
    For two factors every k is 1 or 2 and mu is the sign (-1)^(#r - #s).
    """
    if not coarser_or_equal(s, r):
        raise ValueError("mobius(s, r) needs s <= r")
    count = {}
    for b in r.blocks:
        lab = s.rgs[b[0]]
        count[lab] = count.get(lab, 0) + 1
    out = 1
    for k in count.values():
        out *= (-1) ** (k - 1) * factorial(k - 1)
    return out


# restriction / gluing ------------------------------------------------------


def restrict(r, factors):
    "restriction of the equivalence relation to the chosen factors (sorted)"
    factors = sorted(set(factors))
    for a in factors:
        if not 0 <= a < len(r.sizes):
            raise ValueError("bad factor index %r for sizes %r" % (a, r.sizes))
    off = r.offsets
    labels = []
    for a in factors:
        labels.extend(r.rgs[off[a]:off[a + 1]])
    return Recollement([r.sizes[a] for a in factors], labels, check=False)


class _UF:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, x):
        while self.p[x] != x:
            self.p[x] = self.p[self.p[x]]
            x = self.p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a != b:
            self.p[max(a, b)] = min(a, b)


def _split_mid(r, s, mid):
    if mid < 0 or mid > len(r.sizes) or mid > len(s.sizes):
        raise ValueError("bad middle factor count %d" % mid)
    left = r.sizes[:len(r.sizes) - mid]
    midsz = r.sizes[len(r.sizes) - mid:]
    if tuple(midsz) != tuple(s.sizes[:mid]):
        raise ValueError("middle sizes differ: %r vs %r" % (midsz, s.sizes[:mid]))
    right = s.sizes[mid:]
    return tuple(left), tuple(midsz), tuple(right)


def generated_closure(r, s, mid=1):
    """
    r on (I.., J..), s on (J.., K..) sharing the last/first ``mid`` factors;
    the relation on I..J..K generated by both.
    """
    left, midsz, right = _split_mid(r, s, mid)
    nl, nm, nr = sum(left), sum(midsz), sum(right)
    uf = _UF(nl + nm + nr)
    for b in r.blocks:
        for x in b[1:]:
            uf.union(b[0], x)
    for b in s.blocks:
        for x in b[1:]:
            uf.union(b[0] + nl, x + nl)
    return Recollement(left + midsz + right, [uf.find(x) for x in range(nl + nm + nr)], check=False)


_FIBER_CACHE = {}


def enumerate_compose_fibers(r, s, mid=1):
    """
    All u on (I.., J.., K..) with restriction r to (I, J) and s to (J, K).
    They are the closure plus a partial matching between the I-only
    blocks of r and the K-only blocks of s.  Sorted by RGS.
    """
    key = (r, s, mid)
    hit = _FIBER_CACHE.get(key)
    if hit is not None:
        return hit
    left, midsz, right = _split_mid(r, s, mid)
    nl, nm = sum(left), sum(midsz)
    closure = generated_closure(r, s, mid)
    blocks = closure.blocks
    ionly = [k for k, b in enumerate(blocks) if b[-1] < nl]
    konly = [k for k, b in enumerate(blocks) if b[0] >= nl + nm]
    out = []
    for k in range(min(len(ionly), len(konly)) + 1):
        for isub in combinations(ionly, k):
            for ksub in permutations(konly, k):
                lab = list(closure.rgs)
                relabel = {kb: ib for ib, kb in zip(isub, ksub)}
                lab = [relabel.get(x, x) for x in lab]
                out.append(Recollement(closure.sizes, lab, check=False))
    out.sort(key=lambda u: u.rgs)
    out = tuple(out)
    _FIBER_CACHE[key] = out
    return out


def outer_restriction(u, n_left, mid):
    "pi_{1,3}: drop the middle ``mid`` factors of a 3-way recollement"
    keep = list(range(n_left)) + list(range(n_left + mid, len(u.sizes)))
    return restrict(u, keep)


def enumerate_tensor_fibers(r, s, r_src=1, s_src=1):
    """
    r on (I.., K..) with ``r_src`` source factors, s on (J.., L..) with
    ``s_src`` source factors.  All u on (I.., J.., K.., L..) restricting to
    r and s: any partial matching of r-blocks with s-blocks.
    """
    rs, rt = r.sizes[:r_src], r.sizes[r_src:]
    ss, st = s.sizes[:s_src], s.sizes[s_src:]
    sizes = tuple(rs) + tuple(ss) + tuple(rt) + tuple(st)
    # global position maps
    a, b, c = sum(rs), sum(ss), sum(rt)
    rpos = [x if x < a else x + b for x in range(r.n)]
    spos = [x + a if x < b else x + a + c for x in range(s.n)]
    rblocks = [tuple(rpos[x] for x in bl) for bl in r.blocks]
    sblocks = [tuple(spos[x] for x in bl) for bl in s.blocks]
    out = []
    nr, ns = len(rblocks), len(sblocks)
    for k in range(min(nr, ns) + 1):
        for rsub in combinations(range(nr), k):
            for ssub in permutations(range(ns), k):
                lab = [None] * sum(sizes)
                for i, bl in enumerate(rblocks):
                    for x in bl:
                        lab[x] = ("r", i)
                match = dict(zip(ssub, rsub))
                for j, bl in enumerate(sblocks):
                    tag = ("r", match[j]) if j in match else ("s", j)
                    for x in bl:
                        lab[x] = tag
                out.append(Recollement(sizes, lab, check=False))
    out.sort(key=lambda u: u.rgs)
    return out


def interval(s, r, candidates):
    "elements u of ``candidates`` with s <= u <= r"
    return [u for u in candidates if coarser_or_equal(s, u) and coarser_or_equal(u, r)]
