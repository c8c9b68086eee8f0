"""
Command-line front end.

Every command prints one JSON document (or CSV with ``--csv``) and exits with
0 on success, 1 when a mathematical check fails or no derivation was found,
and 2 on malformed input (with a JSON error object on stdout).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import cellular, hom_module, rewrite
from . import diagrams as dg
from .algebra import AlgebraElement, AlgebraError, tl_algebra
from .coeff import as_fraction, format_poly, specialise
from .hom_twist import EXHAUSTIVE, SAMPLED, Kind, check_hom_assoc, twisted_tl

MAX_N = 8


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would print usage and exit 2 itself
        raise UsageError(message)


# ---------------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------------

def _n(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a strand count, got {text!r}")
    if not 1 <= n <= MAX_N:
        raise argparse.ArgumentTypeError(f"strand count must be between 1 and {MAX_N}")
    return n


def _nat(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    if k < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer")
    return k


def _delta(text: str):
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"delta must be an integer or P/Q, got {text!r}")


def _check_d(n: int, d: int) -> None:
    if 2 * d > n:
        raise UsageError(f"need 2*d <= n, got n={n}, d={d}")


def _element(A, word: str) -> AlgebraElement:
    try:
        return A.word(word)
    except (dg.DiagramError, AlgebraError, ValueError) as exc:
        raise UsageError(str(exc))


def _element_terms(A, x: AlgebraElement) -> list[dict]:
    return [{"index": i, "word": dg.word_of(A.diagram(i)), "coeff": format_poly(c)} for i, c in x.items()]


def _delta_str(delta) -> str | None:
    return None if delta is None else str(delta)


# ---------------------------------------------------------------------------
# commands: each returns (payload, exit code, csv rows or None)
# ---------------------------------------------------------------------------

def cmd_tl(args):
    A = tl_algebra(args.n)
    if args.action == "basis":
        out = []
        for i, D in enumerate(dg.enumerate_diagrams(args.n)):
            out.append({"index": i, "word": dg.word_of(D), **D.to_json()})
        rows = [["index", "word", "pairs"]] + [[o["index"], o["word"], json.dumps(o["pairs"])] for o in out]
        return out, 0, rows
    if args.action == "mul":
        x, y = _element(A, args.left), _element(A, args.right)
        z = A.multiply(x, y)
        payload = {"n": args.n, "left": args.left, "right": args.right,
                   "product": z.to_json(), "terms": _element_terms(A, z)}
        return payload, 0, _term_rows(payload["terms"])
    x = _element(A, args.word)
    z = A.apply_involution(x)
    payload = {"n": args.n, "input": args.word, "result": z.to_json(), "terms": _element_terms(A, z)}
    return payload, 0, _term_rows(payload["terms"])


def _term_rows(terms):
    return [["index", "word", "coeff"]] + [[t["index"], t["word"], t["coeff"]] for t in terms]


def cmd_twist(args):
    H = twisted_tl(args.n)
    if args.action == "mul":
        A = H.base
        x, y = _element(A, args.left), _element(A, args.right)
        z = H.multiply(x, y)
        payload = {"n": args.n, "left": args.left, "right": args.right,
                   "product": z.to_json(), "terms": _element_terms(A, z)}
        return payload, 0, _term_rows(payload["terms"])
    mode = EXHAUSTIVE if args.exhaustive or args.samples is None else SAMPLED
    if args.samples is not None and args.samples < 1:
        raise UsageError("--samples must be positive")
    res = check_hom_assoc(H, Kind.parse(args.kind), mode=mode,
                          samples=args.samples or 0, seed=args.seed)
    payload = res.to_json()
    return payload, 0 if res.passed else 1, None


def cmd_cell(args):
    n = args.n
    if args.action in ("gram", "radical"):
        _check_d(n, args.d)
    if args.action == "gram":
        g = cellular.gram_matrix(n, args.d)
        payload = {"n": n, **g.to_json()}
        if args.delta is not None:
            ev = [[str(specialise(v, args.delta)) for v in row] for row in g.entries]
            payload["delta"] = str(args.delta)
            payload["gram_at_delta"] = ev
            payload["det_at_delta"] = str(specialise(g.det, args.delta))
            rows = ev
        else:
            rows = payload["gram"]
        return payload, 0, rows
    if args.action == "radical":
        basis = cellular.radical_basis(n, args.d, args.delta)
        payload = {"n": n, "d": args.d, "delta": _delta_str(args.delta),
                   "radical_dim": len(basis), "basis": [[str(x) for x in v] for v in basis]}
        return payload, 0, None
    if args.action == "simples":
        dims = cellular.simple_dims(n, args.delta)
        payload = {"n": n, "delta": _delta_str(args.delta), "lambda_zero": cellular.lambda_zero(n, args.delta),
                   "simple_dims": {str(d): k for d, k in dims.items()}}
        return payload, 0, [["d", "dim"]] + [[d, k] for d, k in dims.items()]
    if args.action == "semisimple":
        ss = cellular.is_semisimple(n, args.delta)
        terms = cellular.wedderburn_terms(n)
        payload = {"n": n, "delta": _delta_str(args.delta), "semisimple": ss,
                   "radical_dims": {str(d): cellular.radical_dim(n, d, args.delta) for d in range(n // 2 + 1)},
                   "simple_dims": {str(d): k for d, k in cellular.simple_dims(n, args.delta).items()},
                   "cell_dims": terms}
        if ss:
            payload["wedderburn"] = {"sum_of_squares": sum(k * k for k in terms), "dimension": dg.catalan(n),
                                     "holds": cellular.wedderburn_check(n, args.delta)}
        return payload, 0, None
    if n > 6:
        raise UsageError("cell chain supports n <= 6")
    rep = cellular.verify_cell_chain(n)
    rows = [["d", "layer_dim", "expected"]] + [[d, a, b] for d, (a, b) in
                                                enumerate(zip(rep.layer_dims, rep.expected_dims))]
    return rep.to_json(), 0 if rep.passed else 1, rows


def cmd_hommod(args):
    _check_d(args.n, args.d)
    V = hom_module.cell_hom_module(args.n, args.d, args.delta)
    res = hom_module.check_hom_module(V)
    if args.action == "check":
        return {"n": args.n, "d": args.d, "delta": _delta_str(args.delta), **res.to_json()}, 0 if res.passed else 1, None
    payload = {"n": args.n, "d": args.d, "module": V.to_json(),
               "labels": [str(h) for h in V.labels], "axiom": res.to_json()}
    return payload, 0 if res.passed else 1, None


def cmd_rewrite(args):
    try:
        rules = rewrite.rule_sets(args.rules)
        lhs, rhs = rewrite.parse_term(args.lhs), rewrite.parse_term(args.rhs)
        result = rewrite.derive(lhs, rhs, rules, args.depth, args.max_size)
    except (KeyError, rewrite.TermSyntaxError, rewrite.ArityError, rewrite.BoundaryError) as exc:
        raise UsageError(exc.args[0] if exc.args else str(exc))
    payload = {"rules": [r.name for r in rules], **result.to_json()}
    rows = None
    if result.found:
        rows = [["step", "rule", "direction", "cut", "wire", "result"]] + [
            [k + 1, s.rule, s.direction, s.cut, s.wire, str(s.result)] for k, s in enumerate(result.steps)]
    return payload, 0 if result.found else 1, rows


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--csv", action="store_true", help="tabular CSV output where available")
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    p = _Parser(prog="tlhom", description="Temperley-Lieb, Hom-algebra and string-diagram computations")
    verbs = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    tl = verbs.add_parser("tl", help="diagram algebra TL_n").add_subparsers(dest="action", required=True,
                                                                            parser_class=_Parser)
    s = tl.add_parser("basis", parents=[common])
    s.add_argument("n", type=_n)
    s = tl.add_parser("mul", parents=[common])
    s.add_argument("n", type=_n)
    s.add_argument("left")
    s.add_argument("right")
    s = tl.add_parser("involute", parents=[common])
    s.add_argument("n", type=_n)
    s.add_argument("word")

    tw = verbs.add_parser("twist", help="twisted Hom-algebra").add_subparsers(dest="action", required=True,
                                                                             parser_class=_Parser)
    s = tw.add_parser("check", parents=[common])
    s.add_argument("n", type=_n)
    s.add_argument("--kind", default="homII", choices=[k.value for k in Kind])
    g = s.add_mutually_exclusive_group()
    g.add_argument("--exhaustive", action="store_true")
    g.add_argument("--samples", type=int)
    s.add_argument("--seed", type=int, default=0)
    s = tw.add_parser("mul", parents=[common])
    s.add_argument("n", type=_n)
    s.add_argument("left")
    s.add_argument("right")

    ce = verbs.add_parser("cell", help="cellular structure").add_subparsers(dest="action", required=True,
                                                                           parser_class=_Parser)
    for name, needs_d, needs_delta in [("gram", True, False), ("radical", True, True),
                                       ("simples", False, True), ("semisimple", False, True),
                                       ("chain", False, False)]:
        s = ce.add_parser(name, parents=[common])
        s.add_argument("n", type=_n)
        if needs_d:
            s.add_argument("d", type=_nat)
        if name != "chain":
            s.add_argument("--delta", type=_delta, required=needs_delta, help="loop value P/Q")

    hm = verbs.add_parser("hommod", help="Hom-modules F(C_d)").add_subparsers(dest="action", required=True,
                                                                             parser_class=_Parser)
    for name in ("check", "functor"):
        s = hm.add_parser(name, parents=[common])
        s.add_argument("n", type=_n)
        s.add_argument("d", type=_nat)
        s.add_argument("--delta", type=_delta, help="loop value P/Q (default generic)")

    rw = verbs.add_parser("rewrite", help="string-diagram derivations").add_subparsers(dest="action",
                                                                                      required=True,
                                                                                      parser_class=_Parser)
    s = rw.add_parser("derive", parents=[common])
    s.add_argument("--rules", required=True, help="comma-separated rule sets, e.g. HOM_II,UNIT")
    s.add_argument("--lhs", required=True)
    s.add_argument("--rhs", required=True)
    s.add_argument("--depth", type=_nat, default=8)
    s.add_argument("--max-size", type=_nat, default=None, help="box bound for intermediate terms")
    return p


COMMANDS = {"tl": cmd_tl, "twist": cmd_twist, "cell": cmd_cell, "hommod": cmd_hommod, "rewrite": cmd_rewrite}


def _render(payload, rows, as_csv: bool) -> str:
    if as_csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if rows is None:
            flat = payload if isinstance(payload, dict) else {"value": payload}
            w.writerow(["key", "value"])
            for k, v in flat.items():
                w.writerow([k, v if isinstance(v, (str, int)) else json.dumps(v)])
        else:
            w.writerows(rows)
        return buf.getvalue()
    return json.dumps(payload, indent=2) + "\n"


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        payload, code, rows = COMMANDS[args.verb](args)
    except UsageError as exc:
        stdout.write(json.dumps({"error": "usage", "message": str(exc)}) + "\n")
        return 2
    text = _render(payload, rows, args.csv)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
