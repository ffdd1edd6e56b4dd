"""
Duals and traces induced from the base.  Over k[Z/2]-modules with R
the regular module: the snakes close, Tr id<R> = 2t, and categorical
dimensions of <R,...,R> are 2^m t(t-1)...(t-m+1).

    python3 demos/traces_and_duals.py
"""

from interpcat.basecat import builtin
from interpcat.scalar import Ring
from interpcat.interp import bracket, identity, braiding
from interpcat.structures import bracket_dual, trace, categorical_dim

C = builtin("kz2")
R = Ring()
D = bracket_dual(("R",), C, R)
print("snakes for <R>:", D.snakes())
print("Tr id<1> =", trace(identity(bracket(()), C, R), ()).terms)
print("Tr id<R> =", trace(identity(bracket(("R",)), C, R), ("R",)).terms)
A = bracket(("R",))
print("Tr braid(<R>,<R>) =", trace(braiding(A, A, C, R), ("R",)).terms)
for m in (1, 2, 3):
    print("dim <R^%d> =" % m, categorical_dim(bracket(*[("R",)] * m), C, R))
