"""Command-line front end.

Exit status: 0 on success, 1 on invalid input, 2 when a search budget is
exceeded.  Output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import budget as _budget
from .braiding import GDD, BraidingMatrix
from .classify import (CaseLabel, Verdict, classify, enumerate_rank2,
                       enumerate_rank3, weyl_orbit, weyl_reflect)
from .modarith import QuadCongruence, factorize, legendre, solve_quadratic
from .nichols import rank3_dimension
from .realize import realize_gdd, realize_matrix
from .verify import run_suite

CSV_COLUMNS = ["n", "rank", "gdd", "label", "m", "m2", "dimension", "witness"]


class InputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _read_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from None


def _matrix(path: str) -> BraidingMatrix:
    return BraidingMatrix.from_json(_read_json(path))


def _gdd(path: str, n: int | None = None) -> GDD:
    doc = _read_json(path)
    if n is not None:
        if "n" in doc and int(doc["n"]) != n:
            raise InputError(f"--n {n} disagrees with n = {doc['n']} in {path}")
        doc = dict(doc, n=n)
    return GDD.from_json(doc)


def _dimension(v: Verdict) -> int | None:
    if v.label in (CaseLabel.Rank3_i, CaseLabel.Rank3_ii, CaseLabel.Rank3_iii):
        return rank3_dimension(v.label, v.m, v.m2)
    return None


def _row(v: Verdict) -> dict:
    return {"n": v.gdd.n, "rank": v.gdd.rank, "gdd": v.gdd.to_json(), "label": str(v.label),
            "m": v.m, "m2": v.m2, "dimension": _dimension(v),
            "witness": v.witness.to_json() if v.witness else None}


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (dict, list)):
        return _dump(value)
    return str(value)


def render_rows(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, sort_keys=True, indent=1)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in rows:
            w.writerow([_cell(r[c]) for c in CSV_COLUMNS])
        return buf.getvalue().rstrip("\n")
    lines = ["| " + " | ".join(CSV_COLUMNS) + " |", "|" + "---|" * len(CSV_COLUMNS)]
    for r in rows:
        lines.append("| " + " | ".join(_cell(r[c]).replace("|", "\\|") for c in CSV_COLUMNS) + " |")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="nichols-zn", description="Realizability and finite-dimensionality "
                "of diagonal braidings over cyclic groups.",
                epilog="--format {json,csv,md} may be given anywhere on the command line.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("factor", help="prime factorization")
    s.add_argument("n", type=int)
    s = sub.add_parser("legendre", help="Legendre symbol (a/p)")
    s.add_argument("a", type=int)
    s.add_argument("p", type=int)
    s = sub.add_parser("qsolve", help="roots of a x^2 + b x + c mod m")
    for name in "abcm":
        s.add_argument(name, type=int)
    s = sub.add_parser("realize", help="find x, y with x_i y_j matching the braiding")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--matrix")
    g.add_argument("--gdd")
    s.add_argument("--n", type=int)
    s = sub.add_parser("classify", help="finite-dimensionality verdict")
    s.add_argument("--rank", type=int, choices=[2, 3], required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--enumerate", action="store_true")
    s.add_argument("--gdd")
    s = sub.add_parser("reflect", help="Weyl reflection at a vertex (1-based)")
    s.add_argument("--matrix", required=True)
    s.add_argument("--vertex", type=int, required=True)
    s = sub.add_parser("orbit", help="Weyl orbit up to relabeling")
    s.add_argument("--matrix", required=True)
    s.add_argument("--max", type=int, default=_budget.DEFAULT_ORBIT_BUDGET)
    s = sub.add_parser("dim", help="Nichols algebra dimension of a rank-3 class")
    s.add_argument("--class", dest="cls", choices=["i", "ii", "iii"], required=True)
    s.add_argument("--m", type=int)
    s.add_argument("--m2", type=int)
    s = sub.add_parser("verify", help="rerun the classification checks")
    s.add_argument("--suite", choices=["thm1.7", "thm2.2", "thm3.1", "corollaries"], required=True)
    return p


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "json"
    if "--format" in argv:
        i = argv.index("--format")
        if i + 1 >= len(argv):
            print("error: --format needs a value", file=sys.stderr)
            return 1
        fmt = argv[i + 1]
        del argv[i:i + 2]
    try:
        if fmt not in ("json", "csv", "md"):
            raise InputError(f"unknown format {fmt!r}")
        args = build_parser().parse_args(argv)
        text, status = _dispatch(args, fmt)
    except _budget.BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:  # includes InputError and ReflectionUndefined
        print(f"invalid input: {exc}", file=sys.stderr)
        return 1
    print(text, file=out)
    return status


def _dispatch(args, fmt) -> tuple[str, int]:
    if args.verb == "factor":
        f = factorize(args.n)
        return _dump({"n": args.n, "factors": [list(pe) for pe in f]}), 0
    if args.verb == "legendre":
        return str(legendre(args.a, args.p)), 0
    if args.verb == "qsolve":
        roots = solve_quadratic(QuadCongruence(args.a, args.b, args.c, args.m))
        return _dump(list(roots)), 0
    if args.verb == "realize":
        if args.matrix:
            if args.n is not None:
                raise InputError("--n goes with --gdd")
            w = realize_matrix(_matrix(args.matrix))
        else:
            w = realize_gdd(_gdd(args.gdd, args.n))
        return _dump(w.to_json() if w else None), 0
    if args.verb == "classify":
        if args.enumerate:
            if args.gdd:
                raise InputError("--enumerate and --gdd are exclusive")
            verdicts = enumerate_rank2(args.n) if args.rank == 2 else enumerate_rank3(args.n)
        elif args.gdd:
            G = _gdd(args.gdd, args.n)
            if G.rank != args.rank:
                raise InputError(f"--rank {args.rank} but the diagram has rank {G.rank}")
            verdicts = [classify(G)]
        else:
            raise InputError("classify needs --enumerate or --gdd FILE")
        return render_rows([_row(v) for v in verdicts], fmt), 0
    if args.verb == "reflect":
        B = _matrix(args.matrix)
        if not 1 <= args.vertex <= B.rank:
            raise InputError(f"vertex {args.vertex} out of range 1..{B.rank}")
        return _dump(weyl_reflect(B, args.vertex - 1).to_json()), 0
    if args.verb == "orbit":
        orbit = weyl_orbit(_matrix(args.matrix), args.max)
        return _dump({"size": len(orbit), "truncated": orbit.truncated,
                      "undefined": orbit.undefined,
                      "members": [G.to_json() for G in orbit]}), 0
    if args.verb == "dim":
        label = {"i": CaseLabel.Rank3_i, "ii": CaseLabel.Rank3_ii, "iii": CaseLabel.Rank3_iii}[args.cls]
        return str(rank3_dimension(label, args.m, args.m2)), 0
    if args.verb == "verify":
        checks = run_suite(args.suite)
        failed = any(not c.passed and not c.informational for c in checks)
        return "\n".join(c.line() for c in checks), 1 if failed else 0
    raise InputError(f"unknown verb {args.verb!r}")


def main() -> None:
    sys.exit(run())
