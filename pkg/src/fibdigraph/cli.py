"""Command-line front end.

Usage::

    fibdigraph gen --family fib -d 2 -k 4 --format dot
    fibdigraph verify --suite all -d 2 -d 3 --k-max 4
    fibdigraph table -d 5 --rows 8
    fibdigraph cycles -d 2 -k 7 --dump
    fibdigraph spectrum -d 3 --k-max 5
    fibdigraph export --family fib -d 2 -k 4 --dir out/

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.
Caps default from the environment variables ``FIBDIGRAPH_MAX_VERTICES``,
``FIBDIGRAPH_MAX_CHARPOLY`` and ``FIBDIGRAPH_CYCLE_BUDGET``; flags override.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import export
from .cycles import (
    constructive_cycles,
    enumerate_cycles,
    iter_cycles,
    pancyclic_range,
    WorkBudgetExceeded,
)
from .errors import ResourceCapError
from .linedig import build_T, iterated_line_digraph
from .recurrence import count_vectors
from .spectral import numeric_roots_check, phi_d, verify_spectrum
from .verify import SCHEMA_VERSION, SUITES, Limits, run_verify
from .words import build_de_bruijn, build_fibonacci_digraph

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

DEFAULTS = {
    "FIBDIGRAPH_MAX_VERTICES": 10**6,
    "FIBDIGRAPH_MAX_CHARPOLY": 3000,
    "FIBDIGRAPH_CYCLE_BUDGET": 10**8,
}


def _env_int(name: str) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return DEFAULTS[name]
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"fibdigraph: {name} must be an integer, got {raw!r}")


def _int_at_least(lo: int):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {v}")
        return v

    return parse


alphabet = _int_at_least(2)
positive = _int_at_least(1)
nonnegative = _int_at_least(0)


def _add_caps(p: argparse.ArgumentParser):
    p.add_argument("--max-vertices", type=positive, default=None, help="vertex cap for construction")
    p.add_argument("--max-charpoly", type=positive, default=None, help="order cap for char_poly")
    p.add_argument("--cycle-budget", type=positive, default=None, help="work budget for cycle search")


def _limits(args) -> Limits:
    return Limits(
        max_vertices=args.max_vertices or _env_int("FIBDIGRAPH_MAX_VERTICES"),
        max_charpoly=args.max_charpoly or _env_int("FIBDIGRAPH_MAX_CHARPOLY"),
        cycle_budget=args.cycle_budget or _env_int("FIBDIGRAPH_CYCLE_BUDGET"),
    )


def _emit(text: str, output: str | None):
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _family_digraph(args, cap: int):
    if args.family == "t":
        return build_T(args.d), f"T{args.d}"
    if args.k is None:
        raise _Usage(f"family {args.family!r} needs -k")
    if args.family == "fib":
        return build_fibonacci_digraph(args.d, args.k, cap), f"F({args.d},{args.k})"
    if args.family == "debruijn":
        return build_de_bruijn(args.d, args.k, cap), f"B({args.d},{args.k})"
    return iterated_line_digraph(build_T(args.d), args.k - 1, cap), f"L^{args.k - 1}T{args.d}"


class _Usage(Exception):
    pass


# ----- commands


def cmd_gen(args) -> int:
    g, name = _family_digraph(args, _limits(args).max_vertices)
    _emit(export.FORMATS[args.format](g, name), args.output)
    return EXIT_OK


def cmd_export(args) -> int:
    g, name = _family_digraph(args, _limits(args).max_vertices)
    out = Path(args.dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = name.replace("(", "_").replace(")", "").replace(",", "_").replace("^", "")
    for fmt in args.formats:
        ext = {"text": "txt"}.get(fmt, fmt)
        (out / f"{stem}.{ext}").write_text(export.FORMATS[fmt](g, name))
    return EXIT_OK


def cmd_verify(args) -> int:
    ds = args.d or [2]
    if args.k_min > args.k_max:
        raise _Usage("--k-min exceeds --k-max")
    rep = run_verify(args.suite or ["all"], ds, args.k_min, args.k_max, _limits(args))
    _emit(json.dumps(rep.to_json(), indent=2) + "\n", args.output)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_table(args) -> int:
    rows = count_vectors(args.d, args.rows)
    d = args.d
    header = ["m", "table_row"] + [f"n_{j}" for j in range(d)] + ["N"]
    note = "row n^k of the vertex-count table has word length m = k + 1 (n^0 is the all-ones row)"
    lines = []
    if args.format == "csv":
        lines.append(f"# {note}")
        lines.append(",".join(header))
        for cv in rows:
            lines.append(",".join(map(str, [cv.m, f"n^{cv.m - 1}", *cv.entries, cv.total])))
    elif args.format == "markdown":
        lines.append(f"<!-- {note} -->")
        lines.append("| " + " | ".join(header) + " |")
        lines.append("|" + "---|" * len(header))
        for cv in rows:
            lines.append("| " + " | ".join(map(str, [cv.m, f"n^{cv.m - 1}", *cv.entries, cv.total])) + " |")
    else:
        obj = {
            "schema_version": SCHEMA_VERSION,
            "command": "table",
            "d": d,
            "note": note,
            "rows": [{"m": cv.m, "entries": list(cv.entries), "N": cv.total} for cv in rows],
        }
        lines.append(json.dumps(obj, indent=2))
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_cycles(args) -> int:
    lim = _limits(args)
    g = build_fibonacci_digraph(args.d, args.k, lim.max_vertices)
    if args.constructive:
        if args.d != 2:
            raise _Usage("constructive cycles exist for d = 2 only")
        lines = [" ".join(c.vertices) for c in constructive_cycles(args.k)]
        _emit("\n".join(lines) + "\n", args.output)
        return EXIT_OK
    if args.dump:
        lines = []
        try:
            for cyc, _ in iter_cycles(g, args.cutoff, lim.cycle_budget):
                lines.append(" ".join(g.labels[i] for i in cyc))
        except WorkBudgetExceeded:
            lines.append("# partial: work budget exhausted")
        _emit("\n".join(lines) + "\n", args.output)
        return EXIT_OK
    census = enumerate_cycles(g, args.cutoff, lim.cycle_budget)
    if args.format == "json":
        obj = {
            "schema_version": SCHEMA_VERSION,
            "command": "cycles",
            "d": args.d,
            "k": args.k,
            "census": census.to_json(),
            "pancyclic_range": pancyclic_range(census),
        }
        _emit(json.dumps(obj, indent=2) + "\n", args.output)
    else:
        text = census.to_csv()
        if census.exhausted:
            text += "# partial: work budget exhausted\n"
        _emit(text, args.output)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    lim = _limits(args)
    entries = []
    ok = True
    for k in range(args.k_min, args.k_max + 1):
        r = verify_spectrum(args.d, k, lim.max_charpoly)
        ok &= r.passed
        entries.append(r.to_json())
    roots = numeric_roots_check(args.d, args.tolerance)
    ok &= roots.passed
    if args.format == "json":
        obj = {
            "schema_version": SCHEMA_VERSION,
            "command": "spectrum",
            "d": args.d,
            "phi_d": phi_d(args.d).to_json(),
            "instances": entries,
            "roots": roots.to_json(),
            "passed": ok,
        }
        text = json.dumps(obj, indent=2) + "\n"
    else:
        lines = [f"phi_{args.d}(x) = {phi_d(args.d)}"]
        for e in entries:
            lines.append(f"F({e['d']},{e['k']}): N={e['N']}  {e['factored']}  {'ok' if e['passed'] else 'MISMATCH'}")
        lines.append("roots: " + ", ".join(f"{complex(a, b):.10g}" for a, b in roots.to_json()["roots"]))
        lines.extend(roots.messages)
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK if ok else EXIT_FAIL


# ----- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fibdigraph", description="d-Fibonacci digraph toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(p):
        p.add_argument("--family", choices=["fib", "debruijn", "t", "line"], default="fib")
        p.add_argument("-d", type=alphabet, required=True)
        p.add_argument("-k", type=positive)
        _add_caps(p)

    p = sub.add_parser("gen", help="construct a digraph and serialize it")
    family_args(p)
    p.add_argument("--format", choices=sorted(export.FORMATS), default="text")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("export", help="write a digraph in several formats to a directory")
    family_args(p)
    p.add_argument("--dir", required=True)
    p.add_argument("--formats", nargs="+", choices=sorted(export.FORMATS), default=["dot", "csv", "json"])
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify", help="run verification suites over a (d, k) grid")
    p.add_argument("--suite", action="append", choices=list(SUITES) + ["all"])
    p.add_argument("-d", type=alphabet, action="append")
    p.add_argument("--k-min", type=positive, default=1)
    p.add_argument("--k-max", type=positive, default=5)
    p.add_argument("-o", "--output")
    _add_caps(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="last-digit count vectors and vertex counts")
    p.add_argument("-d", type=alphabet, required=True)
    p.add_argument("--rows", type=positive, default=8)
    p.add_argument("--format", choices=["csv", "markdown", "json"], default="csv")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("cycles", help="simple-cycle census of F(d, k)")
    p.add_argument("-d", type=alphabet, default=2)
    p.add_argument("-k", type=positive, required=True)
    p.add_argument("--cutoff", type=positive)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--dump", action="store_true", help="print every cycle as a label sequence")
    p.add_argument("--constructive", action="store_true", help="print the explicit cycle families (d = 2)")
    p.add_argument("-o", "--output")
    _add_caps(p)
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("spectrum", help="characteristic polynomials of F(d, k)")
    p.add_argument("-d", type=alphabet, required=True)
    p.add_argument("--k-min", type=positive, default=1)
    p.add_argument("--k-max", type=positive, default=5)
    p.add_argument("--tolerance", type=float, default=1e-10)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("-o", "--output")
    _add_caps(p)
    p.set_defaults(func=cmd_spectrum)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"fibdigraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapError as exc:
        print(f"fibdigraph: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
