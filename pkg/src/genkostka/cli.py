"""Command-line front end: ``genkostka compute | verify | graph``.

Exit codes: 0 success, 1 a check or cross-method comparison failed,
2 bad input, 3 a defect in the construction (with a JSON witness on stderr).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cyclage as cy
from . import fermionic as fe
from . import identities as ids
from . import shapes
from . import sweeps
from .errors import DefectError, UserInputError

KINDS = ("S", "Ktilde", "K", "F")
METHODS = ("paths", "charge", "fermionic", "all")
GRAPH_CAP = 8


def _lambda(text: str) -> tuple:
    lam = shapes.parse_int_list(text)
    if any(x < 0 for x in lam):
        raise UserInputError("lambda entries must be non-negative")
    return lam


def _n_for(lam, mu, n):
    need = max([len(shapes.strip(lam))] + [h for _, h in mu] + [1])
    if n is None:
        return need
    if n < need:
        raise UserInputError(f"n = {n} is smaller than the height needed ({need})")
    return n


def _pad(lam, n):
    lam = tuple(lam)
    if len(lam) > n:
        if any(lam[n:]):
            raise UserInputError("lambda has more than n nonzero parts")
        lam = lam[:n]
    return lam + (0,) * (n - len(lam))


def _require_partition(lam):
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise UserInputError(f"lambda {lam} must be a partition for this kind")


def compute_one(kind: str, lam, mu, n, method: str):
    """One polynomial by one method."""
    if kind == "S":
        if method == "paths":
            return ids.supernomial(_pad(lam, n), mu)
        if method == "charge":
            rep = ids.check_s_as_sum(_pad(lam, n), mu)
            return rep.right
        raise UserInputError("S has no fermionic route")
    if kind == "F":
        if method != "fermionic":
            raise UserInputError("F is computed only by the fermionic route")
        return fe.fermionic(shapes.lmatrix_from_rectlist(mu, n), _pad(lam, n))
    _require_partition(lam)
    if kind == "Ktilde":
        return ids.kostka_tilde(lam, mu, method)
    return ids.kostka(lam, mu, method)


def _methods_for(kind, method):
    if method != "all":
        if kind == "F":
            return ["fermionic"]
        return [method]
    return {"S": ["paths", "charge"], "F": ["fermionic"]}.get(kind, ["paths", "charge", "fermionic"])


def cmd_compute(args) -> int:
    lam = _lambda(args.lam)
    mu = shapes.parse_rectlist(args.mu) if args.mu.strip() not in ("", "[]") else ()
    n = _n_for(lam, mu, args.n)
    if not mu:
        value = "1" if not any(lam) else "0"
        print(json.dumps({"kind": args.kind, "value": value}) if args.json else value)
        return 0
    methods = _methods_for(args.kind, args.method)
    results = {m: compute_one(args.kind, lam, mu, n, m) for m in methods}
    texts = {m: p.to_text() for m, p in results.items()}
    agree = len(set(texts.values())) == 1
    if args.json:
        print(json.dumps({"kind": args.kind, "lambda": list(lam), "mu": shapes.rectlist_to_json(mu),
                          "n": n, "results": texts, "agree": agree}, sort_keys=True))
    elif len(methods) == 1:
        print(texts[methods[0]])
    else:
        for m in methods:
            print(f"{m}: {texts[m]}")
        if agree:
            print("all methods agree")
        else:
            print("MISMATCH between methods")
        if args.kind == "K" and "fermionic" in methods:
            L = shapes.lmatrix_from_rectlist(mu, n)
            if not fe.theorem_hypothesis(L):
                print("note: this L is outside the proven range of the fermionic formula")
    return 0 if agree else 1


def cmd_verify(args) -> int:
    kw = {}
    if args.mu is not None:
        if args.suite != "poset":
            raise UserInputError("--mu is only used by the poset suite")
        kw["mu"] = shapes.parse_rectlist(args.mu)
    if args.max_boxes < 1:
        raise UserInputError("--max-boxes must be positive")
    if args.workers < 1:
        raise UserInputError("--workers must be positive")
    summary = sweeps.run_suite(args.suite, args.max_boxes, args.workers, **kw)
    print(summary.line())
    for f in summary.failures[: args.show]:
        print("  " + json.dumps(f, sort_keys=True))
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(summary.to_json(), fh, indent=1, sort_keys=True)
            fh.write("\n")
    if args.suite in sweeps.EXPERIMENTAL:
        return 0
    return 0 if summary.ok else 1


def cmd_graph(args) -> int:
    mu = shapes.parse_rectlist(args.mu)
    if shapes.rectlist_size(mu) > args.max_boxes:
        raise UserInputError(f"|mu| = {shapes.rectlist_size(mu)} exceeds --max-boxes {args.max_boxes}")
    g = cy.cocyclage_graph(mu) if args.cocyclage else cy.cyclage_graph(mu)
    dot = g.to_dot()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dot)
    else:
        sys.stdout.write(dot)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="genkostka", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute S, Ktilde, K or F")
    c.add_argument("--kind", choices=KINDS, required=True)
    c.add_argument("--lambda", dest="lam", required=True, help="comma separated, e.g. 2,1")
    c.add_argument("--mu", required=True,
                   help='rectangles: JSON [{"w":1,"h":1}] with optional xK repeat, or (2),(1x2)')
    c.add_argument("--n", type=int, default=None)
    c.add_argument("--method", choices=METHODS, default="paths")
    c.add_argument("--json", action="store_true", help="print one JSON object")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run an exhaustive verification sweep")
    v.add_argument("--suite", choices=sweeps.SUITES, required=True)
    v.add_argument("--max-boxes", type=int, default=6)
    v.add_argument("--mu", default=None, help="poset suite only: a single content")
    v.add_argument("--out", default=None, help="write the JSON report here")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--show", type=int, default=5, help="failures to echo")
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("graph", help="write the cyclage graph as DOT")
    g.add_argument("--mu", required=True)
    g.add_argument("--out", default=None)
    g.add_argument("--cocyclage", action="store_true")
    g.add_argument("--max-boxes", type=int, default=GRAPH_CAP)
    g.set_defaults(func=cmd_graph)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UserInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DefectError as exc:
        print(json.dumps({"defect": str(exc), "witness": exc.witness}, default=str), file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
