"""Command-line front end.

Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage or
configuration error (bad rational, degenerate parameters, unmet
preconditions).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import re
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import ladder, quad, verify
from .errors import BigJacobiError, DegenerateParams, ZeroAtNode
from .exact import Poly, format_rational, parse_rational
from .family import Params, PolynomialSequence, b_coeff, family, lambda_n, u_coeff

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _common() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--alpha", type=_rational_arg, default=Fraction(1), help='rational "p/q" (default 1)')
    parent.add_argument("--beta", type=_rational_arg, default=Fraction(1), help='rational "p/q" (default 1)')
    parent.add_argument("--c", type=_rational_arg, default=Fraction(1, 2), help='rational "p/q" (default 1/2)')
    parent.add_argument("--nmax", type=_nonneg_int, default=10)
    parent.add_argument("--seed", type=int, default=0)
    parent.add_argument("--samples", type=_nonneg_int, default=0)
    parent.add_argument("--format", choices=("json", "csv"), default="json")
    parent.add_argument("--out", default=None, help="output file (default stdout)")
    parent.add_argument("-v", "--verbose", action="store_true")
    return parent


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="bigjacobi", description="Exact big -1 Jacobi polynomial toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="print P_n(x) exactly")
    p.add_argument("--n", type=_nonneg_int, required=True)
    p.add_argument("--x", type=_rational_arg, required=True)

    sub.add_parser("table", parents=[common], help="n, lambda, b, u, nu, kappa and coefficients per degree")

    sub.add_parser("verify", parents=[common], help="run every exact identity")

    sub.add_parser("ladder", parents=[common], help="lowering/raising reports per degree")

    p = sub.add_parser("christoffel", parents=[common], help="Christoffel transforms of a sequence")
    p.add_argument("--in", dest="infile", default=None, help="sequence JSON (default: generate from parameters)")
    p.add_argument("--at", type=_rational_arg, action="append", default=None,
                   help="node; repeat for successive transforms (default: 1 then -1)")

    p = sub.add_parser("quad", parents=[common], help="Gauss rule for the two-interval weight")
    p.add_argument("--points", type=_nonneg_int, default=None, help="number of nodes (default nmax)")
    p.add_argument("--digits", type=_nonneg_int, default=None, help="significant digits printed")
    p.add_argument("--mass", type=float, default=None, help="total mass (default exact or numeric)")
    return parser


def _params(args) -> Params:
    return Params(args.alpha, args.beta, args.c)


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _dump_csv(rows: List[Dict[str, Any]], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        cells = []
        for col in columns:
            v = row.get(col)
            if v is None:
                cells.append("")
            elif isinstance(v, list):
                cells.append(" ".join(str(t) for t in v))
            else:
                cells.append(v)
        writer.writerow(cells)
    return buf.getvalue()


# ---------------------------------------------------------------- sequences


def sequence_rows(seq: PolynomialSequence, count: int, params: Optional[Params] = None) -> List[Dict[str, Any]]:
    """Rows of the polynomial-sequence schema: n, lambda, b, u, coeffs."""
    rows = []
    for n in range(count):
        if params is not None:
            lam = format_rational(lambda_n(n, params))
            b = format_rational(b_coeff(n, params))
            u = format_rational(u_coeff(n, params)) if n else None
        else:
            lam = None
            bq, uq = seq.recurrence(n)
            b = format_rational(bq)
            u = format_rational(uq) if n else None
        rows.append({"n": n, "lambda": lam, "b": b, "u": u,
                     "coeffs": [format_rational(q) for q in seq[n].coeffs]})
    return rows


class ListedSequence(PolynomialSequence):
    """A finite sequence read from a file."""

    def __init__(self, polys: Sequence[Poly]):
        super().__init__()
        self._given = list(polys)

    def _compute(self, n: int) -> Poly:
        if n >= len(self._given):
            raise IndexError(f"sequence has only {len(self._given)} polynomials")
        return self._given[n]


def read_sequence(path: str) -> ListedSequence:
    with open(path, encoding="utf-8") if path != "-" else sys.stdin as fh:
        data = json.load(fh)
    if isinstance(data, dict):
        data = data.get("sequence", data.get("rows"))
    if not isinstance(data, list):
        raise UsageError("sequence file must hold a JSON list of rows")
    rows = sorted(data, key=lambda r: int(r["n"]))
    polys = []
    for i, row in enumerate(rows):
        if int(row["n"]) != i:
            raise UsageError(f"sequence rows must be n = 0, 1, 2, ...; row {i} has n={row['n']}")
        try:
            poly = Poly(parse_rational(str(q)) for q in row["coeffs"])
        except ValueError as exc:
            raise UsageError(f"row n={i}: {exc}") from None
        if poly.degree != i or not poly.is_monic():
            raise UsageError(f"row n={i} is not a monic polynomial of degree {i}")
        polys.append(poly)
    return ListedSequence(polys)


# ---------------------------------------------------------------- commands


def cmd_eval(args) -> int:
    p = _params(args)
    value = family(p)[args.n](args.x)
    _emit(args, format_rational(value) + "\n")
    return EXIT_OK


TABLE_COLUMNS = ("n", "lambda", "b", "u", "nu", "kappa", "coeffs")


def table_rows(p: Params, nmax: int) -> List[Dict[str, Any]]:
    seq = family(p)
    rows = sequence_rows(seq, nmax + 1, p)
    for row in rows:
        n = row["n"]
        row["nu"] = format_rational(ladder.nu_n(n, p))
        row["kappa"] = format_rational(ladder.kappa_n(n, p))
    return [{k: row[k] for k in TABLE_COLUMNS} for row in rows]


def cmd_table(args) -> int:
    rows = table_rows(_params(args), args.nmax)
    _emit(args, _dump_json(rows) if args.format == "json" else _dump_csv(rows, TABLE_COLUMNS))
    return EXIT_OK


def cmd_verify(args) -> int:
    p = _params(args)
    results = []
    for check in verify.run_suite(p, args.nmax):
        results.append(check.to_json_obj())
    for i, q in enumerate(verify.sample_params(args.samples, args.seed)):
        for check in verify.run_suite(q, args.nmax):
            obj = check.to_json_obj()
            obj["sample"] = i
            obj["seed"] = args.seed
            results.append(obj)
    failed = [r for r in results if r["residual_zero"] is False]
    if args.format == "json":
        text = _dump_json(results)
    else:
        flat = [{**r, "params": " ".join(f"{k}={v}" for k, v in r["params"].items())} for r in results]
        text = _dump_csv(flat, ("identity", "params", "n", "residual_zero", "sample", "seed", "detail"))
    _emit(args, text)
    for r in failed:
        print(f"FAILED {r['identity']} at {r['params']}: {r.get('detail', '')}", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_ladder(args) -> int:
    p = _params(args)
    reports = []
    try:
        reports += [ladder.hahn_check(n, p) for n in range(1, args.nmax + 1)]
    except DegenerateParams as exc:
        print(f"lowering target family skipped: {exc}", file=sys.stderr)
    try:
        reports += [ladder.raising_check(n, p) for n in range(args.nmax + 1)]
    except DegenerateParams as exc:
        print(f"raising target family skipped: {exc}", file=sys.stderr)
    rows = [r.to_json_obj() for r in reports]
    if args.format == "json":
        text = _dump_json(rows)
    else:
        text = _dump_csv(rows, ("n", "shift", "predicted_constant", "observed_constant", "exact_match"))
    _emit(args, text)
    return EXIT_OK if all(r.exact_match for r in reports) else EXIT_FAIL


def cmd_christoffel(args) -> int:
    nodes = args.at if args.at else [Fraction(1), Fraction(-1)]
    count = args.nmax + 1
    if args.infile:
        seq: PolynomialSequence = read_sequence(args.infile)
        available = len(seq._given)
        if available < count + len(nodes) + 1:
            raise UsageError(
                f"need {count + len(nodes) + 1} input polynomials for nmax={args.nmax} "
                f"and {len(nodes)} transform(s), got {available}"
            )
    else:
        seq = family(_params(args))
    for a in nodes:
        seq = ladder.christoffel(seq, a)
    rows = sequence_rows(seq, count)
    cols = ("n", "lambda", "b", "u", "coeffs")
    _emit(args, _dump_json(rows) if args.format == "json" else _dump_csv(rows, cols))
    return EXIT_OK


def cmd_quad(args) -> int:
    p = _params(args)
    if not p.in_positivity_window():
        raise UsageError(f"quadrature needs alpha, beta > -1 and 0 < c < 1, got {p}")
    N = args.points if args.points is not None else args.nmax
    if N < 1:
        raise UsageError("need at least one node")
    rule = quad.gauss_rule(N, p, args.mass)
    obj = rule.to_json_obj(args.digits)
    if args.format == "json":
        text = _dump_json(obj)
    else:
        rows = [{"node": x, "weight": w} for x, w in zip(obj["nodes"], obj["weights"])]
        text = _dump_csv(rows, ("node", "weight"))
    _emit(args, text)
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "table": cmd_table,
    "verify": cmd_verify,
    "ladder": cmd_ladder,
    "christoffel": cmd_christoffel,
    "quad": cmd_quad,
}


_RATIONAL_FLAGS = ("--alpha", "--beta", "--c", "--x", "--at")


def _glue_negative_values(argv: Sequence[str]) -> List[str]:
    """Turn ``--c -1/3`` into ``--c=-1/3``; argparse would read -1/3 as a flag."""
    out: List[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _RATIONAL_FLAGS and i + 1 < len(argv) and re.match(r"-\d", argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    argv = _glue_negative_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, DegenerateParams, ZeroAtNode, OSError, json.JSONDecodeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BigJacobiError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
