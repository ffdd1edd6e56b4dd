"""
Command-line front end.

    interpcat bases
    interpcat validate FILE
    interpcat eval TERMFILE
    interpcat compose G F          (morphism files, prints G o F)
    interpcat tensor F G
    interpcat oracle --base B --rank d --trials N --seed S
    interpcat endalg --object SPEC --t T --analyze {gram,radical,simples,quotient}
    interpcat relations --base B --t T
    interpcat dim --object SPEC --t T

Exit status 0 iff every check in the report passed.  INTERPCAT_LIMIT sets
the default enumeration limit (``--limit`` overrides it).
"""

import argparse
import sys

from . import partcomb
from .basecat import CapabilityError, ValidationError
from .formats import (FormatError, resolve_base, parse_rank, parse_object, read_presentation, read_bialgebra,
                      read_morphism, write_morphism, read_term, read_table, write_table, rank_text, object_text,
                      scalar_to_text)


def _out(lines):
    sys.stdout.write("\n".join(lines) + "\n")


def cmd_bases(args):
    from .basecat import BUILTINS, builtin
    lines = []
    for name in sorted(BUILTINS):
        C = builtin(name)
        caps = [c for c in ("has_tensor", "has_braiding", "has_duals", "has_trace") if getattr(C, c, False)]
        objs = ", ".join(object_text_word(w) for w in C.sample_objects())
        lines.append("%-12s objects: %-14s %s" % (name, objs, " ".join(c[4:] for c in caps) or "linear only"))
    _out(lines)
    return 0


def object_text_word(w):
    from .formats import word_text
    return word_text(w)


def cmd_validate(args):
    with open(args.file) as fh:
        text = fh.read()
    head = text.lstrip().split(None, 1)[0] if text.strip() else ""
    kind = head.replace("interpcat-", "")
    issues = []
    if kind == "presentation":
        issues = read_presentation(text).validate()
    elif kind == "bialgebra":
        C = read_bialgebra(text, check=False)
        issues = C.validate()
    elif kind == "morphism":
        read_morphism(text)
    elif kind == "term":
        from .diagrams import evaluate
        name, ring, term = read_term(text)
        term.types(resolve_base(name))
    elif kind == "table":
        issues = read_table(text).validate()
    else:
        raise FormatError("unrecognised header %r" % head, 1, 1)
    lines = ["validate %s (%s)" % (args.file, kind)]
    lines += ["  FAIL %s" % s for s in issues]
    lines.append("  result: %s" % ("pass" if not issues else "fail (%d issues)" % len(issues)))
    _out(lines)
    return 0 if not issues else 1


def cmd_eval(args):
    from .diagrams import evaluate
    with open(args.file) as fh:
        name, ring, term = read_term(fh.read())
    base = resolve_base(name)
    f = evaluate(term, base, ring)
    sys.stdout.write(write_morphism(f, name))
    return 0


def _read_m(path):
    with open(path) as fh:
        text = fh.read()
    f = read_morphism(text)
    name = [l.split()[1] for l in text.splitlines() if l.startswith("base ")][0]
    return f, name


def cmd_compose(args):
    from .interp import compose
    g, name = _read_m(args.g)
    f, _ = _read_m(args.f)
    if g.base is not f.base:
        raise ValueError("morphisms live over different bases")
    sys.stdout.write(write_morphism(compose(g, f), name))
    return 0


def cmd_tensor(args):
    from .interp import tensor
    f, name = _read_m(args.f)
    g, _ = _read_m(args.g)
    if g.base is not f.base:
        raise ValueError("morphisms live over different bases")
    sys.stdout.write(write_morphism(tensor(f, g), name))
    return 0


def cmd_oracle(args):
    from .wreath import oracle_suite
    base = resolve_base(args.base)
    rep = oracle_suite(base, args.rank, args.trials, args.seed, args.max_len)
    lines = ["oracle base=%s rank=%d trials=%d seed=%d" % (args.base, args.rank, args.trials, args.seed)]
    for k, A, B, C in rep["failures"]:
        lines.append("  FAIL trial %d: %s -> %s -> %s" % (k, object_text(A), object_text(B), object_text(C)))
    lines.append("  result: %s (%d/%d agree)" % ("pass" if rep["ok"] else "fail",
                                                 args.trials - len(rep["failures"]), args.trials))
    _out(lines)
    return 0 if rep["ok"] else 1


def cmd_endalg(args):
    from . import algtools as AT
    base = resolve_base(args.base)
    ring = parse_rank(args.t)
    A = parse_object(args.object, base)
    T = AT.end_algebra(A, base, ring, basis=args.basis)
    lines = ["endalg base=%s object=%s t=%s basis=%s dim=%d" % (args.base, object_text(A), rank_text(ring),
                                                                 args.basis, T.n)]
    ok = True
    for what in args.analyze:
        if what == "gram":
            if ring.is_symbolic:
                g = AT.gram_det(T)
                roots = AT.rational_roots(g) if g else []
                lines.append("  gram_det: %s" % g)
                lines.append("  rational roots: %s" % (", ".join(scalar_to_text(r) for r in roots) or "none"))
            else:
                lines.append("  gram_det: %s" % scalar_to_text(AT.gram_det(T)))
        elif what == "radical":
            rad = AT.radical(T)
            lines.append("  radical dim: %d" % len(rad))
        elif what == "simples":
            try:
                k, dims = AT.count_simples(T, seed=args.seed)
            except AT.NotSemisimple as e:
                lines.append("  simples: not semisimple (%s)" % e)
                ok = False
                continue
            split = [d for d in dims if isinstance(d, int)]
            lines.append("  simples: %d blocks, dims %s, sum of squares %d (seed %d)"
                         % (k, ",".join(str(d) if isinstance(d, int) else "non-split:%d" % d[1] for d in dims),
                            sum(d * d for d in split), args.seed))
            if len(split) == len(dims) and sum(d * d for d in split) != T.n:
                ok = False
        elif what == "quotient":
            if T.basis_kind != "bracket":
                T = AT.end_algebra(A, base, ring)
            Q, I, rep = AT.symmetric_quotient(T)
            lines.append("  ideal dim: %d, quotient dim: %d" % (len(I), Q.n))
            lines.append("  symmetric group table: %s" % ("match" if rep["ok"] else "mismatch"))
            ok = ok and rep["ok"]
    if args.export:
        with open(args.export, "w") as fh:
            fh.write(write_table(T))
        lines.append("  table written to %s" % args.export)
    _out(lines)
    return 0 if ok else 1


def cmd_relations(args):
    from .diagrams import relation_suite
    base = resolve_base(args.base)
    ring = parse_rank(args.t)
    budget = args.budget if args.budget > 0 else None
    rep = relation_suite(base, ring, seed=args.seed, budget=budget)
    lines = ["relations base=%s t=%s seed=%d" % (args.base, rank_text(ring), args.seed)]
    for name in sorted(rep):
        r = rep[name]
        extra = "  value %s" % r["rank"] if "rank" in r else ""
        skip = ", %d over size budget" % r["skipped"] if r["skipped"] else ""
        lines.append("  %-12s %s (%d instances%s)%s" % (name, "pass" if r["pass"] else "FAIL", r["instances"],
                                                       skip, extra))
    ok = all(r["pass"] for r in rep.values())
    lines.append("  result: %s" % ("pass" if ok else "fail"))
    _out(lines)
    return 0 if ok else 1


def cmd_dim(args):
    from .structures import categorical_dim
    base = resolve_base(args.base)
    ring = parse_rank(args.t)
    A = parse_object(args.object, base)
    d = categorical_dim(A, base, ring)
    _out(["dim %s = %s" % (object_text(A), d if ring.is_symbolic else scalar_to_text(d))])
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="interpcat", description="interpolation categories S_t(C)")
    p.add_argument("--limit", type=int, default=None, help="enumeration limit (default $INTERPCAT_LIMIT or 12)")
    sub = p.add_subparsers(dest="cmd", required=True)

    sub.add_parser("bases", help="list built-in base categories").set_defaults(fn=cmd_bases)

    s = sub.add_parser("validate", help="parse and validate a file")
    s.add_argument("file")
    s.set_defaults(fn=cmd_validate)

    s = sub.add_parser("eval", help="evaluate a term file, print the morphism file")
    s.add_argument("file")
    s.set_defaults(fn=cmd_eval)

    s = sub.add_parser("compose", help="compose two morphism files (G o F)")
    s.add_argument("g")
    s.add_argument("f")
    s.set_defaults(fn=cmd_compose)

    s = sub.add_parser("tensor", help="tensor two morphism files")
    s.add_argument("f")
    s.add_argument("g")
    s.set_defaults(fn=cmd_tensor)

    s = sub.add_parser("oracle", help="compare composition with the integer-rank model")
    s.add_argument("--base", default="triv")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-len", type=int, default=2)
    s.set_defaults(fn=cmd_oracle)

    s = sub.add_parser("endalg", help="endomorphism algebra analysis")
    s.add_argument("--base", default="triv")
    s.add_argument("--object", required=True)
    s.add_argument("--t", default="symbolic")
    s.add_argument("--basis", choices=["bracket", "double"], default="bracket")
    s.add_argument("--analyze", action="append", choices=["gram", "radical", "simples", "quotient"], default=None)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--export", default=None, help="write the structure-constant table here")
    s.set_defaults(fn=cmd_endalg)

    s = sub.add_parser("relations", help="run the relation suite")
    s.add_argument("--base", default="triv")
    s.add_argument("--t", default="symbolic")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=int, default=64, help="skip instances with a base object of larger "
                   "dimension (0 = no cap)")
    s.set_defaults(fn=cmd_relations)

    s = sub.add_parser("dim", help="categorical dimension of an object")
    s.add_argument("--base", default="triv")
    s.add_argument("--object", required=True)
    s.add_argument("--t", default="symbolic")
    s.set_defaults(fn=cmd_dim)
    return p


def main(argv=None):
    p = build_parser()
    args = p.parse_args(argv)
    if args.limit is not None:
        if args.limit <= 0:
            p.error("--limit must be positive")
        partcomb.DEFAULT_LIMIT = args.limit
    if getattr(args, "analyze", "x") is None:
        args.analyze = ["gram"] if args.t in ("symbolic", "t") else ["radical"]
    try:
        return args.fn(args)
    except FormatError as e:
        sys.stderr.write("parse error: %s\n" % e)
        return 2
    except CapabilityError as e:
        sys.stderr.write("capability error: %s\n" % e)
        return 2
    except (ValidationError, ValueError, KeyError, partcomb.ResourceLimit, OSError) as e:
        sys.stderr.write("error: %s\n" % (e.args[0] if isinstance(e, KeyError) else e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
