"""
Terms in the generators <phi>, mu, Delta, iota, eps, braid over the
Z/2 regular-module base, evaluated into the engine and read back in
standard-form coordinates.

    python3 demos/string_diagrams.py
"""

from interpcat.basecat import builtin
from interpcat.scalar import Ring
from interpcat.diagrams import parse_term, evaluate, standard_coordinates, relation_suite

C = builtin("kz2")
R = Ring()

text = """
(compose
  (tensor (id R) (braid R R))
  (tensor (id R R) (compose (gen 1 R 5) (iota)))
  (tensor (gen R R 1 2) (gen R R 3 -1))
  (braid R R))
"""
term = parse_term(text, R)
f = evaluate(term, C, R)
print("source", f.source, " target", f.target, " terms", len(f.terms))
for p, coords in sorted(standard_coordinates(f).items(), key=lambda kv: -len(kv[0])):
    print("  %-22s %s" % (p.block_text(), {k: str(v) for k, v in coords.items()}))

print("\nrelation suite on kz2, t symbolic")
for name, r in sorted(relation_suite(C, R).items()):
    print("  %-12s %s  (%d instances)" % (name, "pass" if r["pass"] else "FAIL", r["instances"]))
