"""
End algebras of <1,...,1> in Deligne's category.

At generic t the algebra E_{t,m} is semisimple with one block per Young
diagram of size <= m; at t in {0, ..., 2m-2} the trace form degenerates.
Also shows the quotient by the block-count ideal, which is k[S_m].

    python3 demos/deligne_algebras.py
"""

from fractions import Fraction

from interpcat.basecat import builtin
from interpcat.scalar import Ring
from interpcat.interp import bracket
from interpcat import algtools as AT

T = builtin("triv")

for m in (1, 2):
    A = bracket(*[()] * m)
    E = AT.end_algebra(A, T, Ring())
    g = AT.gram_det(E)
    print("m=%d  dim E = %d" % (m, E.n))
    print("   det of trace form:", g)
    print("   rational roots:", [str(r) for r in AT.rational_roots(g)])
    for t0 in (0, 1, 2, Fraction(7, 2)):
        print("   radical dim at t=%s: %d" % (t0, len(AT.radical(E.specialize(t0)))))

# block structure at a non-integer rank
for m in (1, 2, 3):
    E = AT.end_algebra(bracket(*[()] * m), T, Ring(Fraction(7, 2)))
    k, dims = AT.count_simples(E)
    print("m=%d at t=7/2: %d blocks of sizes %s (sum of squares %d)" % (m, k, dims, sum(d * d for d in dims)))

# E_{t,2} / I  ~  k[S_2]
E = AT.end_algebra(bracket((), ()), T, Ring())
Q, I, rep = AT.symmetric_quotient(E)
print("ideal dim %d, quotient dim %d, matches k[S_2]: %s" % (len(I), Q.n, rep["ok"]))
