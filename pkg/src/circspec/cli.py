"""circspec command line.

    circspec spectrum --icg 9 1
    circspec spectrum --circulant 5 1,4
    circspec classify --icg 12 2,4
    circspec search-prime 13 --distinct 3
    circspec verify T4-ucg-srg --max-n 300 --out report.json --csv report.csv
    circspec export --icg 6 1 --format edgelist

Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 environment error.
"""
from __future__ import annotations

import argparse
from math import gcd
import json
import sys
from pathlib import Path

from . import harness
from .classify import classify
from .graphs import (DenseCapExceeded, DivisorSet, SymbolSet, expand_divisor_set,
                     graph_from_json, is_connected, symbol_connected, to_dense)
from .numtheory import proper_divisors
from .ops import line_graph
from .search import search_prime
from .spectra import (Spectrum, eigensolver_oracle, spectrum_circulant, spectrum_icg)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ENV = 0, 1, 2, 3


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}")


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--icg", nargs=2, metavar=("N", "DIVISORS"), help="integral circulant ICG_N(D), D comma-separated")
    g.add_argument("--circulant", nargs=2, metavar=("N", "SYMBOL"), help="circulant G(N; S), S comma-separated")
    g.add_argument("--json", metavar="FILE", help="graph JSON file ('-' for stdin)")
    p.add_argument("--loops", action="store_true", help="add a loop at every vertex (circulant only)")


def parse_graph(args) -> SymbolSet | DivisorSet:
    try:
        if args.icg:
            return DivisorSet(int(args.icg[0]), _ints(args.icg[1]))
        if args.circulant:
            return SymbolSet(int(args.circulant[0]), _ints(args.circulant[1]), loops=args.loops)
        text = sys.stdin.read() if args.json == "-" else Path(args.json).read_text()
        return graph_from_json(text)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        raise UsageError(str(exc))


def as_divisor_set(sym: SymbolSet) -> DivisorSet | None:
    """The ICG form of a loop-free circulant whose symbol is a union of gcd classes."""
    if sym.loops or not sym.symbol or sym.n < 2:
        return None
    try:
        spec = DivisorSet(sym.n, {gcd(s, sym.n) for s in sym.symbol})
    except ValueError:
        return None
    return spec if expand_divisor_set(spec).symbol == sym.symbol else None


def compute_spectrum(graph, mode: str, tol: float | None) -> Spectrum:
    if isinstance(graph, DivisorSet):
        return spectrum_circulant(expand_divisor_set(graph), tol) if mode == "numeric" else spectrum_icg(graph)
    if mode == "exact":
        spec = as_divisor_set(graph)
        if spec is None:
            raise UsageError("--exact needs an integral circulant (symbol a union of gcd classes)")
        return spectrum_icg(spec)
    return spectrum_circulant(graph, tol)


def cmd_spectrum(args) -> int:
    graph = parse_graph(args)
    mode = "exact" if args.exact else "numeric" if args.numeric else "auto"
    sys.stdout.write(dumps(compute_spectrum(graph, mode, args.tol).to_json()))
    return EXIT_OK


def cmd_classify(args) -> int:
    graph = parse_graph(args)
    if isinstance(graph, DivisorSet):
        s, connected, n = spectrum_icg(graph), is_connected(graph), graph.n
    else:
        spec = as_divisor_set(graph)
        s = spectrum_icg(spec) if spec else spectrum_circulant(graph, args.tol)
        connected, n = symbol_connected(graph), graph.n
    sys.stdout.write(dumps(classify(s, n, connected).to_json()))
    return EXIT_OK


def cmd_search_prime(args) -> int:
    try:
        found = search_prime(args.p, args.distinct)
    except ValueError as exc:
        raise UsageError(str(exc))
    sys.stdout.write(dumps({"p": args.p, "distinct": args.distinct,
                            "symbols": [list(s.symbol) for s in found], "count": len(found)}))
    return EXIT_OK


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    Path(path).write_text(text)


def cmd_verify(args) -> int:
    if args.list:
        for tid, th in harness.REGISTRY.items():
            print(f"{tid:15s} {th.description}")
        return EXIT_OK
    if args.theorem not in harness.REGISTRY:
        raise UsageError(f"unknown theorem id {args.theorem!r}; try --list")
    kwargs = {}
    if args.theorem == "T5-line-srg":
        kwargs["explicit_max"] = args.explicit_max
    if args.theorem == "T4.7-cubic" and args.cubic_closure:
        kwargs["cosets_only"] = False
    report = harness.run(args.theorem, args.max_n, jobs=args.jobs, **kwargs)
    _write(args.out, dumps(report.to_json()))
    if args.csv:
        _write(args.csv, report.to_csv())
    s = report.summary
    print(f"{report.theorem}: {s['passed']}/{s['total']} passed", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_export(args) -> int:
    graph = parse_graph(args)
    if args.line == 0 and args.format == "json":
        _write(args.out, dumps(graph.to_json()))
        return EXIT_OK
    sym = expand_divisor_set(graph) if isinstance(graph, DivisorSet) else graph
    dense = to_dense(sym)
    for _ in range(args.line):
        dense = line_graph(dense)
    if args.format == "edgelist":
        _write(args.out, dense.to_edgelist())
    else:
        _write(args.out, dumps({"order": dense.order, "loops": dense.loops,
                                "edges": [list(e) for e in dense.edges()]}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="circspec", description="Spectra of circulant graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="print a spectrum as JSON")
    _add_graph_args(p)
    m = p.add_mutually_exclusive_group()
    m.add_argument("--exact", action="store_true", help="exact integer spectrum (integral circulants)")
    m.add_argument("--numeric", action="store_true", help="cosine-sum spectrum")
    p.add_argument("--tol", type=float, default=None, help="grouping tolerance for numeric spectra")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("classify", help="connectivity, distinct eigenvalues, SRG parameters")
    _add_graph_args(p)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("search-prime", help="symbol sets of G(p; S) with a given distinct count")
    p.add_argument("p", type=int)
    p.add_argument("--distinct", type=int, required=True)
    p.set_defaults(func=cmd_search_prime)

    p = sub.add_parser("verify", help="run a theorem check over its parameter range")
    p.add_argument("theorem", nargs="?", default="")
    p.add_argument("--list", action="store_true", help="list theorem ids")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (env SPECTRAL_CIRC_JOBS overrides)")
    p.add_argument("--out", default=None, help="JSON report path (default stdout)")
    p.add_argument("--csv", default=None, help="CSV report path")
    p.add_argument("--explicit-max", type=int, default=40,
                   help="T5: also build L(X_n) and run the eigensolver for n up to this")
    p.add_argument("--cubic-closure", action="store_true",
                   help="T4.7: expect cosets and their complements instead of cosets only")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write a graph as an edge list or JSON")
    _add_graph_args(p)
    p.add_argument("--format", choices=["edgelist", "json"], default="edgelist")
    p.add_argument("--line", type=int, default=0, metavar="K", help="apply the line graph K times first")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DenseCapExceeded) as exc:
        print(f"circspec: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"circspec: {exc}", file=sys.stderr)
        return EXIT_ENV


if __name__ == "__main__":
    raise SystemExit(main())
