"""
Specializing at t = d lands in block matrices over S_d-cells.

<x> in End<1> is the "different points" diagram; at d = 3 it is J - I.
Composition computed symbolically then specialized agrees with the
matrix product of the specializations, and the specialization map is
injective exactly when d >= #I + #J.

    python3 demos/integer_rank_oracle.py
"""

from interpcat.basecat import builtin
from interpcat.scalar import Ring
from interpcat.partcomb import Recollement
from interpcat.interp import bracket, InterpMorphism, compose, identity
from interpcat.wreath import specialize_morphism, specialization_rank, oracle_suite

T = builtin("triv")
R = Ring()
A = bracket(())
x = InterpMorphism(A, A, T, R, {(Recollement((1, 1), (0, 1)), (0, 0)): 1})

print("<x> o <x> =", {r.block_text(): str(c) for (r, _), c in compose(x, x).terms.items()})
for row in specialize_morphism(x, 3).scalar_matrix():
    print("   ", [str(c) for c in row])

print("\nrank of H(<1,1>; <1,1>) -> W_d")
B = bracket((), ())
for d in range(6):
    rk, total, low = specialization_rank(B, B, T, R, d)
    print("  d=%d  rank %d of %d  (terms with <= d blocks: %d)" % (d, rk, total, low))

for name in ("triv", "kz2"):
    rep = oracle_suite(builtin(name), 3, 100, seed=1)
    print("oracle %s d=3: %s" % (name, "pass" if rep["ok"] else rep["failures"]))
