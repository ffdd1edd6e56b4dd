"""
The integer-rank model W_d(C) as block matrices over slotwise base homs,
and the specialization S_d(C) -> W_d(C).

A cell of <F_1> (x) ... (x) <F_m> at rank d is a tuple of injections,
one per family, of its index set into the d slots.  The value of a cell
is the list of slot words: slot k carries the tensor of the entries
placed at k (the unit if none).  A block-matrix entry between two cells
is an element of  (x)_k Hom_C(src slot k, tgt slot k),  stored as a sparse
dict {(i_1, ..., i_d): coeff} in the product of frozen base bases.

Nothing here uses recollement fibers or falling factorials, which is the
point: composing specialized matrices is plain slotwise composition.
"""

from fractions import Fraction
from itertools import permutations, product

from .linalg import rank
from .interp import block_words, hom_basis, basis_element


def injections(n, d):
    return [p for p in permutations(range(d), n)]


class WreathObject:
    def __init__(self, obj, d, base):
        self.obj = obj
        self.d = d
        self.base = base
        fams = [injections(len(f), d) for f in obj.factors]
        self.cells = list(product(*fams))
        self.words = [self._slot_words(c) for c in self.cells]
        self.index = {c: k for k, c in enumerate(self.cells)}

    def _slot_words(self, cell):
        per = [[] for _ in range(self.d)]
        for fam, inj in zip(self.obj.factors, cell):
            for e, k in zip(fam, inj):
                per[k].append(e)
        return tuple(self.base.tensor_objects(p) for p in per)

    def is_zero(self):
        return not self.cells

    def __len__(self):
        return len(self.cells)

    def __eq__(self, other):
        return self.obj == other.obj and self.d == other.d

    def __repr__(self):
        return "WreathObject(%r, d=%d, %d cells)" % (self.obj, self.d, len(self.cells))


class WreathMorphism:
    """entries[(i, j)] : sparse slotwise element for source cell i, target cell j"""

    def __init__(self, source, target, entries=None):
        self.source = source
        self.target = target
        self.entries = {}
        for k, v in (entries or {}).items():
            v = {m: c for m, c in v.items() if c}
            if v:
                self.entries[k] = v

    def __eq__(self, other):
        return self.source == other.source and self.target == other.target and self.entries == other.entries

    def is_zero(self):
        return not self.entries

    def scalar_matrix(self):
        """for slots whose homs are all one-dimensional: plain matrix (rows = target cells)"""
        M = [[Fraction(0)] * len(self.source) for _ in range(len(self.target))]
        for (i, j), v in self.entries.items():
            if len(v) != 1 or any(x != 0 for x in next(iter(v))):
                raise ValueError("entry is not a scalar multiple of the basis element 0")
            M[j][i] = next(iter(v.values()))
        return M

    def flat(self):
        "coordinate dict over (source cell, target cell, multi-index)"
        out = {}
        for (i, j), v in self.entries.items():
            for m, c in v.items():
                out[(i, j, m)] = c
        return out

    def __repr__(self):
        return "WreathMorphism(%d nonzero blocks)" % len(self.entries)


def specialize_object(A, d, base):
    return WreathObject(A, d, base)


def _value(ring, c, d):
    return ring.evaluate(c, d)


def specialize_morphism(Phi, d):
    """[Phi] at rank d; Phi symbolic (evaluated at T = d) or specialized at t0 = d"""
    ring = Phi.ring
    if not ring.is_symbolic and ring.t0 != d:
        raise ValueError("morphism lives at t=%s, not at d=%d" % (ring.t0, d))
    base = Phi.base
    S, T = Phi.source, Phi.target
    WS, WT = WreathObject(S, d, base), WreathObject(T, d, base)
    ns = S.n
    # flatten cells to global slot lists
    sflat = [tuple(k for inj in c for k in inj) for c in WS.cells]
    tflat = [tuple(k for inj in c for k in inj) for c in WT.cells]
    comps = Phi.components()
    entries = {}
    unit_id = 0
    for i, sc in enumerate(sflat):
        for j, tc in enumerate(tflat):
            slots = sc + tc
            # partition of elements by slot
            byslot = {}
            for x, k in enumerate(slots):
                byslot.setdefault(k, []).append(x)
            for r, terms in comps.items():
                if len(r) != len(byslot):
                    continue
                ok = True
                blk_slot = {}
                for k, xs in byslot.items():
                    b = r.rgs[xs[0]]
                    if len(r.blocks[b]) != len(xs) or any(r.rgs[x] != b for x in xs):
                        ok = False
                        break
                    blk_slot[k] = b
                if not ok:
                    continue
                acc = entries.setdefault((i, j), {})
                for idx, c in terms.items():
                    val = _value(ring, c, d)
                    if not val:
                        continue
                    m = tuple(idx[blk_slot[k]] if k in blk_slot else unit_id for k in range(d))
                    acc[m] = acc.get(m, 0) + val
    return WreathMorphism(WS, WT, entries)


def identity_wreath(W):
    base = W.base
    entries = {}
    for i, words in enumerate(W.words):
        vecs = [base.identity(w) for w in words]
        acc = {(): Fraction(1)}
        for v in vecs:
            acc = {k + (a,): c * x for k, c in acc.items() for a, x in v.items()}
        entries[(i, i)] = acc
    return WreathMorphism(W, W, entries)


def compose_wreath(G, F):
    """G o F by block-matrix product with slotwise base composition"""
    if F.target != G.source:
        raise ValueError("shape mismatch in compose_wreath")
    base = F.source.base
    X, Y, Z = F.source, F.target, G.target
    by_src = {}
    for (j, k), v in G.entries.items():
        by_src.setdefault(j, []).append((k, v))
    out = {}
    cache = {}
    for (i, j), fv in F.entries.items():
        for k, gv in by_src.get(j, ()):
            sw, mw, tw = X.words[i], Y.words[j], Z.words[k]
            acc = out.setdefault((i, k), {})
            for fa, cf in fv.items():
                for gb, cg in gv.items():
                    part = {(): cf * cg}
                    for slot in range(len(sw)):
                        key = (sw[slot], mw[slot], tw[slot], gb[slot], fa[slot])
                        vec = cache.get(key)
                        if vec is None:
                            vec = base.compose_basis(*key)
                            cache[key] = vec
                        part = {m + (c,): x * y for m, x in part.items() for c, y in vec.items()}
                        if not part:
                            break
                    for m, x in part.items():
                        acc[m] = acc.get(m, 0) + x
    return WreathMorphism(X, Z, out)


def tensor_wreath(F, G):
    """slotwise tensor product; cells of a tensor object are concatenated injections"""
    base = F.source.base
    A, B, C, D = F.source, F.target, G.source, G.target
    S = WreathObject(A.obj.tensor(C.obj), A.d, base)
    T = WreathObject(B.obj.tensor(D.obj), A.d, base)
    out = {}
    for (i, j), fv in F.entries.items():
        for (k, l), gv in G.entries.items():
            si = S.index[A.cells[i] + C.cells[k]]
            tj = T.index[B.cells[j] + D.cells[l]]
            acc = out.setdefault((si, tj), {})
            for fa, cf in fv.items():
                for gb, cg in gv.items():
                    part = {(): cf * cg}
                    for slot in range(A.d):
                        vec = base.tensor_basis(A.words[i][slot], B.words[j][slot],
                                                C.words[k][slot], D.words[l][slot], fa[slot], gb[slot])
                        part = {m + (c,): x * y for m, x in part.items() for c, y in vec.items()}
                    for m, x in part.items():
                        acc[m] = acc.get(m, 0) + x
    return WreathMorphism(S, T, out)


def permute_slots(Fw, g):
    """apply the slot permutation g (slot k -> g[k]) to every cell and entry"""
    S, T = Fw.source, Fw.target

    def move(W, i):
        c = W.cells[i]
        return W.index[tuple(tuple(g[k] for k in inj) for inj in c)]

    out = {}
    d = S.d
    ginv = [0] * d
    for k in range(d):
        ginv[g[k]] = k
    for (i, j), v in Fw.entries.items():
        out[(move(S, i), move(T, j))] = {tuple(m[ginv[k]] for k in range(d)): c for m, c in v.items()}
    return WreathMorphism(S, T, out)


def specialization_rank(A, B, base, ring, d, max_len=None):
    """
    rank of H(A; B) -> W_d under specialization, plus the dims of H and
    H^{<= d}; ``max_len`` restricts to basis elements of length <= max_len.
    """
    keys = hom_basis(A, B, base)
    if max_len is not None:
        keys = [k for k in keys if len(k[0]) <= max_len]
    vecs = []
    coords = {}
    for k in keys:
        W = specialize_morphism(basis_element(A, B, base, ring, k), d)
        vecs.append(W.flat())
        for c in W.flat():
            coords.setdefault(c, len(coords))
    rows = []
    for v in vecs:
        row = [Fraction(0)] * len(coords)
        for c, x in v.items():
            row[coords[c]] = Fraction(x)
        rows.append(row)
    rk = rank(rows, len(coords)) if coords else 0
    low = sum(1 for k in keys if len(k[0]) <= d)
    return rk, len(keys), low


def oracle_check(Psi, Phi, d):
    """report dict: composition agrees with specialized block product"""
    lhs = specialize_morphism(Psi @ Phi, d)
    rhs = compose_wreath(specialize_morphism(Psi, d), specialize_morphism(Phi, d))
    return {"ok": lhs == rhs, "d": d, "blocks": len(lhs.entries)}


def oracle_suite(base, d, trials, seed, max_len=2):
    """
    ``trials`` seeded random composable pairs over Q[t] with families of
    length <= max_len; each checked by oracle_check at rank d.
    """
    from .scalar import Ring
    from .interp import bracket, random_family, random_morphism, make_rng
    rng = make_rng(seed)
    ring = Ring()
    fails = []
    for k in range(trials):
        A, B, C = (bracket(*random_family(base, rng, max_len)) for _ in range(3))
        Phi = random_morphism(A, B, base, ring, rng)
        Psi = random_morphism(B, C, base, ring, rng)
        if not oracle_check(Psi, Phi, d)["ok"]:
            fails.append((k, A, B, C))
    return {"base": base.name, "rank": d, "trials": trials, "seed": seed, "failures": fails, "ok": not fails}
