"""Command-line surface: generate, inspect, classify, search, compare.

Exit codes: 0 success / property verified; 1 counterexample or Violation
found; 2 usage, parse, or budget error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import engine
from .families import alternating_c4, h_m, h_m_k, h_m_plus, mono_clique
from .formats import EcgParseError, emit_dot, emit_ecg, parse_ecg, parse_graph6
from .graph import ColoredGraph
from .iso import are_isomorphic
from .patterns import has_nonmono_triangle
from .search import BudgetExceededError, DEFAULT_BUDGET, SearchSpec, run_search
from .theorems import (
    VIOLATION,
    classify_tight,
    conjecture1_premise,
    conjecture2_premise,
    corollary_premise,
    generalized_min_premise,
    main_premise_strict,
    main_premise_weak,
    mantel_premise,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2


def _read_graph(path: str) -> ColoredGraph:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    if text.lstrip().startswith("ecg"):
        return parse_ecg(text)
    return parse_graph6(text)


def _write_text(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "mono-clique":
        if args.n is None:
            raise SystemExit("gen mono-clique requires --n")
        g = mono_clique(args.n, args.color, max(args.k, args.color))
    elif args.family == "alt-c4":
        g = alternating_c4()
    elif args.family == "hm":
        if args.m is None:
            raise SystemExit("gen hm requires --m")
        g = h_m(args.m)
    elif args.family == "hm-plus":
        if args.m is None:
            raise SystemExit("gen hm-plus requires --m")
        g = h_m_plus(args.m)
    else:  # hmk
        if args.m is None:
            raise SystemExit("gen hmk requires --m")
        g = h_m_k(args.m, args.k)
    text = emit_dot(g) if args.dot else emit_ecg(g)
    _write_text(text, args.output)
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    s = g.stats()
    print(f"n={g.n} k={g.k} edges={s.edge_total} pairs={s.pair_total} "
          f"class_sizes={list(s.class_sizes)}")
    if g.n >= 2:
        d = g.density()
        print(f"density = {s.edge_total}/{s.pair_total} = {d}")
    else:
        print("density = undefined (n < 2)")
    print(f"mantel_premise (4|E| > n^2): {mantel_premise(g)}")
    if g.k == 2:
        print(f"main_premise_strict: {main_premise_strict(g)}")
        print(f"main_premise_weak: {main_premise_weak(g)}")
        print(f"corollary_premise: {corollary_premise(g)}")
    else:
        print(f"min_premise_strict (k>2 extension): {generalized_min_premise(g, True)}")
        print(f"min_premise_weak (k>2 extension): {generalized_min_premise(g, False)}")
    print(f"conjecture1_premise: {conjecture1_premise(g)}")
    print(f"conjecture2_premise: {conjecture2_premise(g)}")
    w = has_nonmono_triangle(g)
    if w is None:
        print("non-mono triangle: none")
    else:
        print(f"non-mono triangle: {w.vertices} colors={w.colors} ({w.profile})")
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    try:
        cls = classify_tight(g)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(cls.label)
    return EXIT_COUNTEREXAMPLE if cls.kind == VIOLATION else EXIT_OK


def _cmd_search(args: argparse.Namespace) -> int:
    mode = args.mode
    k = args.k
    if mode == "lemma":
        k = 1
    elif mode in ("theorem", "tight", "claims"):
        k = 2
    spec = SearchSpec(mode=mode, n=args.n, k=k, dedup=args.dedup,
                      shards=args.shards, budget=args.budget,
                      prune=not args.no_prune,
                      conj1_binomial=args.binomial_threshold,
                      conj2_weak=args.allow_equality)
    report = run_search(spec)
    summary = {
        "enumerated": report.enumerated,
        "premise_hits": report.premise_hits,
        "conclusion_hits": report.conclusion_hits,
        "tight_classes": [(label, mult) for _, label, mult in report.tight_classes],
        "counterexamples": len(report.counterexamples),
        "wall_time_ms": round(report.wall_time_ms, 1),
    }
    for key, val in sorted(report.extras.items()):
        summary[key] = val
    for key, val in summary.items():
        print(f"{key}: {val}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(report.to_json_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
        print(f"report written to {args.json}")
    if not report.verified:
        print("RESULT: counterexample / violation found")
        return EXIT_COUNTEREXAMPLE
    print("RESULT: verified on this domain")
    return EXIT_OK


def _cmd_iso(args: argparse.Namespace) -> int:
    g = _read_graph(args.file1)
    h = _read_graph(args.file2)
    cert = are_isomorphic(g, h)
    if cert is None:
        print("non-isomorphic")
    else:
        print(f"isomorphic: vertex_map={list(cert.vertex_map)} "
              f"color_perm={list(cert.color_perm)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nmtri",
        description="Non-monochromatic triangles in edge-colored graphs: "
                    "extremal families, premise checks, exhaustive sweeps.")
    parser.add_argument("--version", action="store_true",
                        help="print version and backend, then exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("gen", help="generate an extremal family as .ecg")
    p.add_argument("family", choices=["mono-clique", "alt-c4", "hm", "hm-plus", "hmk"])
    p.add_argument("--n", type=int, help="vertex count (mono-clique)")
    p.add_argument("--m", type=int, help="part size (hm, hm-plus, hmk)")
    p.add_argument("--k", type=int, default=2, help="color count (hmk, mono-clique)")
    p.add_argument("--color", type=int, default=1, help="clique color (mono-clique)")
    p.add_argument("--dot", action="store_true", help="emit DOT instead of .ecg")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("check", help="print stats, premises, first witness")
    p.add_argument("file", nargs="?", default="-", help=".ecg or graph6 file ('-' = stdin)")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("classify", help="tight-case classification of a weak-premise graph")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("search", help="exhaustive sweep over all colorings")
    p.add_argument("--mode", required=True,
                   choices=["theorem", "tight", "lemma", "conj1", "conj2", "claims"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--dedup", action="store_true",
                   help="bucket tight colorings by canonical key")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="maximum admissible domain size (leaves)")
    p.add_argument("--no-prune", action="store_true",
                   help="disable count-preserving pruning (for audits)")
    p.add_argument("--binomial-threshold", action="store_true",
                   help="conj1: compare against C(n,2) instead of n^2/2")
    p.add_argument("--allow-equality", action="store_true",
                   help="conj2: use >= instead of >")
    p.add_argument("--json", help="write the full JSON report here")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("iso", help="colored-graph isomorphism certificate")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_iso)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.version:
        from . import __version__
        print(f"nmtri {__version__} (backend: {engine.BACKEND})")
        return EXIT_OK
    if not getattr(args, "func", None):
        parser.print_help()
        return EXIT_USAGE
    try:
        return args.func(args)
    except (EcgParseError, BudgetExceededError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
