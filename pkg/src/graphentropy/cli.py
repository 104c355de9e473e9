"""Command-line entry points.

Four subcommands: ``entropy`` (per-graph reports for graph6 input or a named
family), ``table1`` (star-test failure counts over connected graphs),
``verify`` (run one registered claim check), and ``augment`` (search for an
edge set reaching a target entropy). Machine output goes to stdout as JSON
lines or CSV; progress and summaries go to stderr. Exit codes: 0 normal
completion, 1 usage or input error, 2 a proved statement failed (bug),
3 a scan reported counterexamples.

Stdout is deterministic: identical inputs give byte-identical output for any
thread count (timings go to stderr only), and floats are rounded to 12
significant digits in every format.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import asdict
from fractions import Fraction
from typing import Iterable, Sequence

from .entropy import entropy_augmentation, entropy_report
from .enumeration import stream_graph6
from .graphs import (
    Graph,
    Graph6Error,
    complete,
    complete_bipartite,
    parse_graph6,
    path,
    star,
    write_graph6,
)
from .verify import (
    TheoremViolation,
    VerificationResult,
    coentropy_search,
    edge_add_decrease_search,
    param_comparability,
    table1_row,
    verify_density_implies_star,
    verify_renyi_max,
    verify_renyi_star_min,
    verify_star_min_von_neumann,
    verify_tree_extremes,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_THEOREM = 2
EXIT_COUNTEREXAMPLE = 3


def _round12(obj):
    """Round every float to 12 significant digits; stringify fractions."""
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {k: _round12(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round12(v) for v in obj]
    return obj


def _parse_order_range(text: str) -> list[int]:
    """'5' -> [5]; '2..8' -> [2, 3, ..., 8]."""
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = int(lo_s), int(hi_s)
        if lo > hi:
            raise ValueError(f"empty order range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _family_graph(family: str, spec: str) -> Graph:
    if family == "bipartite":
        parts = spec.split(",")
        if len(parts) != 2:
            raise ValueError("bipartite needs --n a,b")
        return complete_bipartite(int(parts[0]), int(parts[1]))
    n = int(spec)
    if family == "star":
        return star(n)
    if family == "path":
        return path(n)
    if family == "complete":
        return complete(n)
    raise ValueError(f"unknown family {family!r}")


def _threads(args: argparse.Namespace) -> int:
    if getattr(args, "threads", None) is not None:
        return max(1, args.threads)
    env = os.environ.get("GEL_THREADS")
    return max(1, int(env)) if env else 1


# --- entropy ---------------------------------------------------------------


def _report_row(g: Graph, alphas: Sequence[float]) -> dict:
    rep = entropy_report(g, alphas)
    row: dict = {
        "graph6": rep.graph6,
        "n": rep.n,
        "m": rep.m,
        "S": rep.S,
        "tr2": rep.tr2,
        "star_test": rep.star_test,
        "density_test": rep.density_test,
    }
    for a in alphas:
        row[f"H_{a:g}"] = rep.H.get(float(a))
    return _round12(row)


def _iter_input_graphs(args: argparse.Namespace) -> Iterable[Graph]:
    if args.family:
        yield _family_graph(args.family, args.n)
        return
    if args.input in (None, "-"):
        yield from stream_graph6(sys.stdin)
    else:
        with open(args.input, "r", encoding="ascii") as fh:
            yield from stream_graph6(fh)


def _cmd_entropy(args: argparse.Namespace) -> int:
    alphas = [float(a) for a in args.alpha] if args.alpha else []
    rows = (_report_row(g, alphas) for g in _iter_input_graphs(args))
    if args.format == "json":
        for row in rows:
            print(json.dumps(row))
    elif args.format == "csv":
        import csv

        writer = None
        for row in rows:
            if writer is None:
                writer = csv.DictWriter(sys.stdout, fieldnames=list(row))
                writer.writeheader()
            writer.writerow(row)
    else:
        for row in rows:
            bits = [f"{k}={row[k]}" for k in row]
            print("  ".join(bits))
    return EXIT_OK


# --- table1 ----------------------------------------------------------------


def _cmd_table1(args: argparse.Namespace) -> int:
    orders = _parse_order_range(args.n)
    workers = _threads(args)
    rows = []
    failing_all: list[str] = []
    for n in orders:
        failures, total, failing = table1_row(n, workers=workers)
        rows.append({"n": n, "failures": failures, "total": total})
        failing_all.extend(failing)
    if args.emit_failing:
        with open(args.emit_failing, "w", encoding="ascii") as fh:
            for g6 in failing_all:
                fh.write(g6 + "\n")
    if args.format == "json":
        for row in rows:
            print(json.dumps(row))
    elif args.format == "csv":
        print("n,failures,total")
        for row in rows:
            print(f"{row['n']},{row['failures']},{row['total']}")
    else:
        print(f"{'n':>3} {'failures':>9} {'total':>9}")
        for row in rows:
            print(f"{row['n']:>3} {row['failures']:>9} {row['total']:>9}")
    return EXIT_OK


# --- verify ----------------------------------------------------------------


def _run_claim(args: argparse.Namespace) -> VerificationResult:
    workers = _threads(args)
    cap = args.witness_cap
    n = int(args.n)
    claim = args.claim
    if claim == "star-min-S":
        return verify_star_min_von_neumann(n, witness_cap=cap, workers=workers)
    if claim == "tree-extremes":
        return verify_tree_extremes(n, entropy=args.entropy, witness_cap=cap)
    if claim == "renyi-star-min":
        if not args.alpha:
            raise ValueError("renyi-star-min needs --alpha")
        return verify_renyi_star_min(n, float(args.alpha[0]), witness_cap=cap, workers=workers)
    if claim == "renyi-max":
        if not args.alpha:
            raise ValueError("renyi-max needs --alpha")
        return verify_renyi_max(n, float(args.alpha[0]), witness_cap=cap, workers=workers)
    if claim == "edge-add-decrease":
        return edge_add_decrease_search(n, witness_cap=cap, workers=workers)
    if claim == "coentropy":
        groups = coentropy_search(n, workers=workers)
        return VerificationResult(
            claim="coentropy",
            order=n,
            universe="connected",
            holds=True,
            extremal_graphs=[],
            witnesses=[],
            stats={
                "group_count": len(groups),
                "groups": [asdict(grp) for grp in groups],
            },
            runtime=0.0,
        )
    if claim == "param-compare":
        pc = param_comparability(n, args.param, workers=workers)
        return VerificationResult(
            claim="param-compare",
            order=n,
            universe="connected",
            holds=True,
            extremal_graphs=[],
            witnesses=[],
            stats=_round12(asdict(pc)),
            runtime=0.0,
        )
    if claim == "density-implies-star":
        return verify_density_implies_star(n, workers=workers)
    raise ValueError(f"unknown claim {claim!r}")


CLAIMS = [
    "star-min-S",
    "tree-extremes",
    "renyi-star-min",
    "renyi-max",
    "edge-add-decrease",
    "coentropy",
    "param-compare",
    "density-implies-star",
]


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        result = _run_claim(args)
    except TheoremViolation as exc:
        print(f"THEOREM VIOLATION: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    body = {
        "claim": result.claim,
        "order": result.order,
        "universe": result.universe,
        "holds": result.holds,
        "extremal_graphs": result.extremal_graphs,
        "witnesses": result.witnesses,
        "stats": result.stats,
    }
    if args.format == "json":
        print(json.dumps(_round12(body)))
    else:
        print(f"claim: {body['claim']}  n={body['order']}  universe={body['universe']}")
        print(f"holds: {body['holds']}")
        if body["extremal_graphs"]:
            print(f"extremal: {' '.join(body['extremal_graphs'])}")
        if body["witnesses"]:
            print(f"witnesses ({len(body['witnesses'])} shown): {' '.join(body['witnesses'])}")
        for k, v in _round12(body["stats"]).items():
            print(f"  {k}: {v}")
    print(
        f"{result.claim} n={result.order}: holds={result.holds} ({result.runtime:.2f}s)",
        file=sys.stderr,
    )
    return EXIT_OK if result.holds else EXIT_COUNTEREXAMPLE


# --- augment ---------------------------------------------------------------


def _cmd_augment(args: argparse.Namespace) -> int:
    if args.input == "-":
        text = sys.stdin.readline()
    else:
        text = args.input
    g = parse_graph6(text)
    k = args.k
    missing = len(g.non_edges())
    if k > missing:
        print(f"warning: k={k} clamped to {missing} absent edges", file=sys.stderr)
        k = missing
    found = entropy_augmentation(g, k, args.x)
    if found is None:
        print("NO")
    else:
        if found:
            edges = ",".join(f"{u}-{v}" for u, v in found)
        else:
            edges = "(no edges needed)"
        print(f"YES {edges}")
        print(f"result graph6: {write_graph6(_augmented(g, found))}")
    return EXIT_OK


def _augmented(g: Graph, combo) -> Graph:
    from .graphs import add_edges

    return add_edges(g, combo)


# --- parser ----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage, which this tool reserves
    # for failed proved statements; remap usage errors to exit 1
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> argparse.ArgumentParser:
    top = _Parser(
        prog="graphentropy",
        description="Graph entropy reports and exhaustive claim verification.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p_ent = sub.add_parser("entropy", help="entropy report per input graph")
    p_ent.add_argument("--input", help="graph6 file, or - for stdin (default)")
    p_ent.add_argument("--family", choices=["star", "path", "complete", "bipartite"])
    p_ent.add_argument("--n", help="order for --family (a,b for bipartite)")
    p_ent.add_argument("--alpha", action="append", help="Renyi order; repeatable")
    p_ent.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p_ent.set_defaults(func=_cmd_entropy)

    p_tab = sub.add_parser("table1", help="star-test failure counts per order")
    p_tab.add_argument("--n", required=True, help="order or range, e.g. 5 or 2..8")
    p_tab.add_argument("--emit-failing", help="write failing graphs (graph6) to this file")
    p_tab.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p_tab.add_argument("--threads", type=int)
    p_tab.set_defaults(func=_cmd_table1)

    p_ver = sub.add_parser("verify", help="run one registered claim check")
    p_ver.add_argument("claim", choices=CLAIMS)
    p_ver.add_argument("--n", required=True)
    p_ver.add_argument("--alpha", action="append")
    p_ver.add_argument("--entropy", choices=["S", "H2"], default="S",
                       help="measure for tree-extremes")
    p_ver.add_argument("--param", choices=["matching", "diameter", "max_degree"],
                       default="diameter", help="parameter for param-compare")
    p_ver.add_argument("--witness-cap", type=int, default=1000)
    p_ver.add_argument("--format", choices=["json", "text"], default="json")
    p_ver.add_argument("--threads", type=int)
    p_ver.set_defaults(func=_cmd_verify)

    p_aug = sub.add_parser("augment", help="search for edges reaching a target entropy")
    p_aug.add_argument("--input", required=True, help="graph6 word, or - for one stdin line")
    p_aug.add_argument("--k", type=int, required=True, help="max edges to add")
    p_aug.add_argument("--x", type=float, required=True, help="entropy target (bits)")
    p_aug.set_defaults(func=_cmd_augment)
    return top


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:  # --help exits 0, usage errors exit 1
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (Graph6Error, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
