"""Command-line front end.

Exit status: 0 on success or a positive answer, 1 on a negative answer
("no", "none", reductions that disagree), 2 on any error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .documents import certificate, format_document, parse, parse_ratio, ratio_str
from .errors import CapacityError, InputError
from .families import aux_graph_H, aux_graph_HF, circulant_digraph, circulant_graph, directed_cycle
from .fractional import MAX_FAMILY, chi_f
from .homomorphisms import MAX_CORE_N, find_hom, is_core
from .params import (
    PARAMS,
    Colouring,
    compute_param,
    decide_b_tuple,
    decide_circular,
    decide_dichromatic,
    decide_graph_kd,
    decide_star,
    decide_tree,
)
from .reductions import MAX_VERIFY_N, gadget_dg, gadget_gkd, l_split, verify_reduction
from .structures import MultiDigraph, MultiGraph, symmetric_orientation

DECISIONS = PARAMS + ("b-tuple",)


class _Failure(Exception):
    """Negative answer: exit status 1."""


def _read(path):
    if path == "-":
        return parse(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def _need(X, cls, what):
    if not isinstance(X, cls):
        kind = "digraph" if cls is MultiDigraph else "graph"
        raise InputError(f"{what} needs a {kind} document")
    return X


def _fmt_value(x, approx):
    text = ratio_str(x)
    if approx:
        text += f"  (approx {float(x):.6f})"
    return text


def _fmt_witness(w):
    if isinstance(w, Colouring):
        if w.kind == "b-tuple":
            body = " ".join("{" + ",".join(map(str, sorted(B))) + "}" for B in w.assignment)
        else:
            body = " ".join(map(str, w.assignment))
        return [f"witness ({w.kind}, k={w.k}, {'b' if w.kind == 'b-tuple' else 'd'}={w.second}): {body}"]
    if hasattr(w, "primal"):
        lines = []
        for i in w.support:
            lines.append(f"set {' '.join(map(str, sorted(w.sets[i])))} : {ratio_str(w.primal[i])}")
        lines.append("dual " + " ".join(ratio_str(y) for y in w.dual))
        return lines
    return ["map " + " ".join(map(str, w))]


def cmd_param(args, out):
    X = _read(args.file)
    if args.name == "fractional-dichromatic":
        value, sol = chi_f(_need(X, MultiDigraph, args.name), args.max_family)
        witness, rejected = sol, None
    else:
        res = compute_param(args.name, X)
        value, witness, rejected = res.value, res.witness, res.rejected
    if args.json:
        out.append(json.dumps(certificate(args.name, X, value, witness, rejected=rejected), indent=2))
    else:
        out.append(_fmt_value(value, args.approx))
    return 0


def _decide(name, X, k, d, max_family):
    p = Fraction(k, d)
    if name == "fractional-dichromatic":
        value, sol = chi_f(_need(X, MultiDigraph, name), max_family)
        return value <= p, sol
    if name == "dichromatic":
        c = decide_dichromatic(_need(X, MultiDigraph, name), k // d) if k >= d else None
    elif name == "vertex-arboricity":
        c = decide_tree(_need(X, MultiGraph, name), k // d, 1) if k >= d else None
    elif name == "chromatic":
        c = decide_graph_kd(_need(X, MultiGraph, name), k // d, 1) if k >= d else None
    elif name == "star-dichromatic":
        c = decide_star(_need(X, MultiDigraph, name), k, d)
    elif name == "circular-dichromatic":
        phi = decide_circular(_need(X, MultiDigraph, name), k, d)
        c = None if phi is None else Colouring("circular-kd", k, d, phi)
    elif name == "circular-vertex-arboricity":
        c = decide_tree(_need(X, MultiGraph, name), k, d)
    elif name == "circular-chromatic":
        c = decide_graph_kd(_need(X, MultiGraph, name), k, d)
    else:
        c = decide_b_tuple(_need(X, MultiDigraph, name), k, d)
    return c is not None, c


def cmd_decide(args, out):
    X = _read(args.file)
    if args.k < 1 or args.d < 1:
        raise InputError("k and d must be positive")
    yes, witness = _decide(args.name, X, args.k, args.d, args.max_family)
    if args.json:
        threshold = Fraction(args.k, args.d) if args.name != "b-tuple" else None
        cert = certificate(args.name, X, threshold, witness, decision="yes" if yes else "no")
        out.append(json.dumps(cert, indent=2))
    else:
        out.append("yes" if yes else "no")
        if witness is not None:
            out.extend(_fmt_witness(witness))
    if not yes:
        raise _Failure
    return 0


def cmd_gen(args, out):
    fam, a = args.family, args.args
    try:
        if fam == "aux-hf":
            (path,) = a
            X = aux_graph_HF(_need(_read(path), MultiDigraph, fam))
        else:
            nums = [int(x) for x in a]
            if fam == "directed-cycle":
                (n,) = nums
                X = directed_cycle(n)
            else:
                k, d = nums
                X = {"circulant-digraph": circulant_digraph, "circulant-graph": circulant_graph,
                     "aux-h": aux_graph_H}[fam](k, d)
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad arguments for gen {fam}: {' '.join(a)}") from None
    out.append(format_document(X).rstrip("\n"))
    return 0


def cmd_transform(args, out):
    X = _read(args.file)
    if args.op == "split":
        Y, _ = l_split(_need(X, MultiDigraph, "split"), args.l)
    elif args.op == "dg":
        Y, _ = gadget_dg(_need(X, MultiGraph, "dg"), args.k)
    elif args.op == "gkd":
        Y, _ = gadget_gkd(_need(X, MultiGraph, "gkd"), args.k, args.d, args.paths)
    else:
        Y = symmetric_orientation(_need(X, MultiGraph, "symmetric-orientation"))
    out.append(format_document(Y).rstrip("\n"))
    return 0


def cmd_hom(args, out):
    src, dst = _read(args.src), _read(args.dst)
    phi = find_hom(args.kind, src, dst)
    if args.json:
        out.append(json.dumps(certificate(f"hom-{args.kind}", src, witness=phi,
                                          decision="no" if phi is None else "yes"), indent=2))
    else:
        out.append("none" if phi is None else " ".join(map(str, phi)))
    if phi is None:
        raise _Failure
    return 0


def cmd_core(args, out):
    X = _read(args.file)
    yes = is_core(args.kind, _need(X, MultiDigraph, "core"), args.max_core_n)
    out.append("yes" if yes else "no")
    if not yes:
        raise _Failure
    return 0


def cmd_verify(args, out):
    if args.kind == "circular-f":
        F = _need(_read(args.target), MultiDigraph, "circular-f target")
        report = verify_reduction("circular-f", F, _read(args.instance), args.max_verify_n)
    elif args.kind == "tree-kd":
        params = (args.k, args.d) if args.paths is None else (args.k, args.d, args.paths)
        report = verify_reduction("tree-kd", params, _read(args.instance), args.max_verify_n)
    else:
        report = verify_reduction("split", parse_ratio(args.p), _read(args.instance),
                                  args.max_verify_n)
    params = ", ".join(f"{k}={ratio_str(v) if isinstance(v, Fraction) else v}"
                       for k, v in report.params.items() if k != "orientation")
    out.append(f"reduction {report.kind} ({params})")
    out.append(f"source side: {'yes' if report.left else 'no'}")
    out.append(f"gadget side: {'yes' if report.right else 'no'}")
    out.append(f"agree: {'yes' if report.agree else 'no'}")
    if not report.agree:
        raise _Failure
    return 0


def _limits(top):
    # Only the top-level parser sets defaults, so a flag given before the
    # subcommand is not overwritten by the subparser.
    common = argparse.ArgumentParser(add_help=False)
    for flag, default in (("--max-core-n", MAX_CORE_N), ("--max-family", MAX_FAMILY),
                          ("--max-verify-n", MAX_VERIFY_N)):
        common.add_argument(flag, type=int, default=default if top else argparse.SUPPRESS)
    return common


def build_parser():
    common = _limits(top=False)
    parser = argparse.ArgumentParser(prog="dicolour", parents=[_limits(top=True)],
                                     description="Exact fractional colouring parameters.")
    parser.add_argument("--version", action="version", version=f"dicolour {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("param", parents=[common], help="exact value of a parameter")
    p.add_argument("name", choices=PARAMS)
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="print a JSON certificate")
    p.add_argument("--approx", action="store_true", help="also print a labelled decimal")
    p.set_defaults(func=cmd_param)

    p = sub.add_parser("decide", parents=[common], help="is the parameter at most k/d?")
    p.add_argument("name", choices=DECISIONS)
    p.add_argument("k", type=int)
    p.add_argument("d", type=int, metavar="d|b")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("gen", parents=[common], help="print a generated family member")
    p.add_argument("family", choices=("circulant-digraph", "circulant-graph", "aux-h",
                                      "aux-hf", "directed-cycle"))
    p.add_argument("args", nargs="+")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("transform", parents=[common], help="apply a construction")
    ops = p.add_subparsers(dest="op", required=True)
    q = ops.add_parser("split", parents=[common])
    q.add_argument("l", type=int)
    q.add_argument("file")
    q = ops.add_parser("dg", parents=[common])
    q.add_argument("k", type=int)
    q.add_argument("file")
    q = ops.add_parser("gkd", parents=[common])
    q.add_argument("k", type=int)
    q.add_argument("d", type=int)
    q.add_argument("file")
    q.add_argument("--paths", type=int, default=None)
    q = ops.add_parser("symmetric-orientation", parents=[common])
    q.add_argument("file")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("hom", parents=[common], help="find a homomorphism")
    p.add_argument("kind", choices=("graph", "acyclic", "circular"))
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("core", parents=[common], help="circular / acyclic core test")
    p.add_argument("kind", choices=("acyclic", "circular"))
    p.add_argument("file")
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("verify", parents=[common], help="check a reduction's equivalence")
    kinds = p.add_subparsers(dest="kind", required=True)
    q = kinds.add_parser("circular-f", parents=[common])
    q.add_argument("target")
    q.add_argument("instance")
    q = kinds.add_parser("tree-kd", parents=[common])
    q.add_argument("k", type=int)
    q.add_argument("d", type=int)
    q.add_argument("instance")
    q.add_argument("--paths", type=int, default=None)
    q = kinds.add_parser("split", parents=[common])
    q.add_argument("p")
    q.add_argument("instance")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    out = []
    status = 0
    try:
        status = args.func(args, out)
    except _Failure:
        status = 1
    except (InputError, CapacityError, OSError) as exc:
        print(f"dicolour: error: {exc}", file=stderr)
        return 2
    if out:
        stdout.write("\n".join(out) + "\n")
    return status


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
