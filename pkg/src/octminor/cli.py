"""Command-line interface.

Graph arguments accept a file (graph6 or edge list), an atlas name with
the ``name:`` prefix, a bare atlas name, or a literal graph6 string.
Exit status: 0/1 for the boolean answer, 2 for errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import atlas
from .characterize import (
    classify_C_or_L,
    decide_oct1_free_4connected,
    decide_oct1_free_planar,
    decide_oct2_free_4connected,
)
from .claims import claim_ids, exit_code, render_report, run_claims, summary_json
from .connectivity import is_cyclically_4_connected_cubic, is_k_connected, vertex_connectivity
from .graph import GraphError, SimpleGraph
from .io import decode_graph6, format_graph, load_graph
from .minors import SearchBudgetExceeded, find_minor, find_topological_minor, is_planar, verify_model

DECIDERS = {
    "14": decide_oct1_free_4connected,
    "15": decide_oct1_free_planar,
    "16": decide_oct2_free_4connected,
    "oct1-4conn": decide_oct1_free_4connected,
    "oct1-planar": decide_oct1_free_planar,
    "oct2-4conn": decide_oct2_free_4connected,
}


class UsageError(Exception):
    pass


def resolve_graph(arg: str) -> SimpleGraph:
    if arg.startswith("name:"):
        return atlas.build(arg[5:])
    path = Path(arg)
    if path.is_file():
        return load_graph(path)
    try:
        return atlas.build(arg)
    except (GraphError, KeyError, ValueError):
        pass
    try:
        return decode_graph6(arg)
    except GraphError:
        raise UsageError(f"{arg!r} is neither a readable file, an atlas name, nor graph6") from None


def _budget(args: argparse.Namespace) -> int | None:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("OCTMINOR_BUDGET")
    return int(env) if env else None


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_atlas(args: argparse.Namespace) -> int:
    if args.list or not args.name:
        _emit(args, "\n".join(atlas.NAMES) + "\n")
        return 0
    g = atlas.build(args.name[5:] if args.name.startswith("name:") else args.name)
    _emit(args, format_graph(g, args.format))
    return 0


def cmd_minor(args: argparse.Namespace) -> int:
    g, h = resolve_graph(args.graph), resolve_graph(args.minor)
    budget = _budget(args)
    if args.topological:
        model = find_topological_minor(g, h, budget)
        found = model is not None
        lines = ["TOPOLOGICAL MINOR FOUND" if found else "NO TOPOLOGICAL MINOR"]
        if found and args.witness:
            lines.append(model.to_text())
    else:
        model = find_minor(g, h, budget)
        found = model is not None
        if found and not verify_model(g, h, model):
            raise AssertionError("minor model failed verification")
        lines = ["MINOR FOUND" if found else "NO MINOR"]
        if found:
            lines.append(model.to_text())
    print("\n".join(lines))
    return 0 if found else 1


def cmd_planar(args: argparse.Namespace) -> int:
    g = resolve_graph(args.graph)
    planar, wit = is_planar(g, witness=True, method=args.method, budget=_budget(args))
    print("planar" if planar else "non-planar")
    if wit is not None and args.witness:
        print(f"witness: {wit.name} minor")
        print(wit.model.to_text())
    return 0 if planar else 1


def cmd_conn(args: argparse.Namespace) -> int:
    g = resolve_graph(args.graph)
    if args.cyclic:
        ok, cut = is_cyclically_4_connected_cubic(g, witness=True)
        print("cyclically 4-connected" if ok else "not cyclically 4-connected")
        if cut is not None and args.witness:
            print("cut edges: " + " ".join(f"{a}-{b}" for a, b in cut.elements))
        return 0 if ok else 1
    kappa, cut = vertex_connectivity(g, witness=True)
    print(f"connectivity: {kappa}")
    if cut is not None and args.witness:
        print("cut vertices: " + " ".join(map(str, cut.elements)))
    if args.k is None:
        return 0
    ok = is_k_connected(g, args.k)
    print(f"{args.k}-connected: {'yes' if ok else 'no'}")
    return 0 if ok else 1


def cmd_classify(args: argparse.Namespace) -> int:
    g = resolve_graph(args.graph)
    if args.thm is None:
        out = classify_C_or_L(g)
        if out.kind == "C":
            print(f"C: squared cycle on {out.n} vertices")
        elif out.kind == "L":
            print(f"L: line graph of {format_graph(out.root).strip()}")
        else:
            print("neither")
        return 0 if out.kind != "neither" else 1
    decide = DECIDERS[args.thm]
    budget = _budget(args)
    result = decide(g) if decide is decide_oct1_free_planar else decide(g, budget=budget)
    text = result.to_text()
    print(text if args.witness else text.splitlines()[0] + "\n" + text.splitlines()[1])
    return 0 if result.verdict else 1


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "cubic-cyc4":
        cat = atlas.gen_cubic_cyc4(args.bound, max_vertices=args.max_vertices)
    elif args.family == "k4-3sum":
        cat = atlas.gen_special_3sum_K4(args.bound, allow_deletions=args.deletions)
    else:
        if args.bound > atlas.CENSUS_MAX or (args.bound == atlas.CENSUS_MAX and not args.slow):
            raise UsageError(f"census beyond n = {atlas.CENSUS_MAX - 1} needs --slow (max {atlas.CENSUS_MAX})")
        pred = {None: None, "4conn": atlas.is_4_connected, "3conn": lambda x: is_k_connected(x, 3),
                "planar": is_planar}[args.filter]
        cat = atlas.gen_all_graphs(args.bound, pred)
    graphs = cat.graphs()
    if args.out and args.format == "graph6":
        cat.save(args.out)
    else:
        _emit(args, "".join(format_graph(g, args.format) for g in graphs))
    print(f"{len(graphs)} graphs" + (" (truncated)" if cat.truncated else ""), file=sys.stderr)
    return 0


def cmd_verify_paper(args: argparse.Namespace) -> int:
    if args.list:
        print("\n".join(claim_ids()))
        return 0
    reports = run_claims(args.claim or None, slow=args.slow, workers=args.workers)
    _emit(args, render_report(reports))
    if args.json:
        Path(args.json).write_text(summary_json(reports))
    return exit_code(reports)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="octminor", description="Octahedron-split minor toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, fmt=False, out=False, budget=False, witness=False):
        if fmt:
            sp.add_argument("--format", choices=("graph6", "edges", "dot"), default="graph6")
        if out:
            sp.add_argument("--out", help="write output to this path")
        if budget:
            sp.add_argument("--budget", type=int, help="search node budget (default $OCTMINOR_BUDGET)")
        if witness:
            sp.add_argument("--witness", action="store_true", help="print certificates")

    sp = sub.add_parser("atlas", help="print a named graph or list names")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--list", action="store_true")
    common(sp, fmt=True, out=True)
    sp.set_defaults(func=cmd_atlas)

    sp = sub.add_parser("minor", help="test whether H is a minor of G")
    sp.add_argument("graph")
    sp.add_argument("minor")
    sp.add_argument("--topological", action="store_true", help="look for a subdivision instead")
    common(sp, budget=True, witness=True)
    sp.set_defaults(func=cmd_minor)

    sp = sub.add_parser("planar", help="planarity with Kuratowski witness")
    sp.add_argument("graph")
    sp.add_argument("--method", choices=("auto", "minor"), default="auto")
    common(sp, budget=True, witness=True)
    sp.set_defaults(func=cmd_planar)

    sp = sub.add_parser("conn", help="vertex connectivity or cyclic 4-connectivity")
    sp.add_argument("graph")
    sp.add_argument("-k", type=int, help="answer whether the graph is k-connected")
    sp.add_argument("--cyclic", action="store_true", help="cyclic 4-connectivity of a cubic graph")
    common(sp, witness=True)
    sp.set_defaults(func=cmd_conn)

    sp = sub.add_parser("classify", help="decide membership in a characterized class")
    sp.add_argument("graph")
    sp.add_argument("--thm", choices=tuple(DECIDERS), help="14/oct1-4conn, 15/oct1-planar, 16/oct2-4conn")
    common(sp, budget=True, witness=True)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("gen", help="generate a graph family")
    sp.add_argument("family", choices=("cubic-cyc4", "k4-3sum", "census"))
    sp.add_argument("bound", type=int, help="handle steps, max vertices, or census order")
    sp.add_argument("--max-vertices", type=int, default=64)
    sp.add_argument("--deletions", action="store_true", help="allow deleting shared triangle edges")
    sp.add_argument("--filter", choices=("4conn", "3conn", "planar"))
    sp.add_argument("--slow", action="store_true")
    common(sp, fmt=True, out=True)
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify-paper", help="run the claim harness")
    sp.add_argument("--claim", action="append", help="claim id (repeatable)")
    sp.add_argument("--list", action="store_true")
    sp.add_argument("--slow", action="store_true")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--json", help="write a machine-readable summary here")
    common(sp, out=True)
    sp.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SearchBudgetExceeded as exc:
        print(f"error: search budget exhausted ({exc}); raise --budget or OCTMINOR_BUDGET", file=sys.stderr)
        return 2
    except (UsageError, GraphError, KeyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
