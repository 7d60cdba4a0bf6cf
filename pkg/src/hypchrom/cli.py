"""Command-line surface for the construction, certification and coloring
pipeline.

Exit codes: 0 = verdict obtained, 1 = integrity failure, 2 = usage error.
Numeric bounds may be set by flag, environment variable, or default, in
that order of precedence.
"""

from __future__ import annotations

import argparse
import os
import sys

from .augment import AugmentConfig, grow_pipeline, DEFAULT_SCHEDULE
from .bundle import BundleFormatError, read_bundle, write_bundle
from .coloring import (
    ACTIVE_BACKEND,
    AdjacencyGraph,
    minimal_non_k_prefix,
    search_k_coloring,
    verify_coloring,
)
from .dimacs import emit_dimacs, parse_dimacs
from .geometry import GraphIntegrityError, build_g9, certify_graph
from .svg import emit_svg

EXIT_OK = 0
EXIT_INTEGRITY = 1
EXIT_USAGE = 2


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise SystemExit(f"environment variable {name} must be an integer")


def _load_adjacency(path: str) -> AdjacencyGraph:
    if path.endswith(".col") or path.endswith(".dimacs"):
        return parse_dimacs(path)
    return AdjacencyGraph.from_graph(read_bundle(path))


def _cmd_build_g9(args) -> int:
    g = build_g9()
    write_bundle(g, args.out)
    print(f"seed graph: order {g.order}, size {g.size} -> {args.out}")
    return EXIT_OK


def _cmd_augment(args) -> int:
    g = read_bundle(args.input, verify=not args.no_verify)
    denom_default = _env_int("HYPCHROM_DENOM_BOUND", 10_000)
    denom = args.denom_bound or denom_default
    if args.no_reference_selection:
        cfg = AugmentConfig(denom_bound=denom)
    else:
        cfg = AugmentConfig.reference(denom_bound=denom)
    if args.min_neighbors:
        schedule = [int(tok) for tok in args.min_neighbors.split(",")]
        if args.phases and args.phases != len(schedule):
            print("--phases disagrees with --min-neighbors list", file=sys.stderr)
            return EXIT_USAGE
    else:
        phases = args.phases if args.phases is not None else len(DEFAULT_SCHEDULE)
        schedule = list(DEFAULT_SCHEDULE[:phases])
        if phases > len(DEFAULT_SCHEDULE):
            schedule += [3] * (phases - len(DEFAULT_SCHEDULE))
    graphs = grow_pipeline(g, schedule, cfg=cfg)
    for stage in graphs:
        if stage.phase_report:
            print(stage.phase_report.summary(), file=sys.stderr)
    final = graphs[-1]
    write_bundle(final, args.out)
    if args.emit_intermediate:
        os.makedirs(args.emit_intermediate, exist_ok=True)
        for stage in graphs:
            write_bundle(
                stage,
                os.path.join(args.emit_intermediate, f"g{stage.order}.bundle"),
            )
    print(f"final graph: order {final.order}, size {final.size} -> {args.out}")
    return EXIT_OK


def _cmd_certify(args) -> int:
    g = read_bundle(args.input, verify=False)
    report = certify_graph(g, exhaustive_order_limit=args.exhaustive_limit)
    print(
        f"edges checked: {report.edges_checked}, "
        f"non-edges checked: {report.nonedges_checked}, "
        f"failures: {len(report.failures)}"
    )
    for kind, i, j in report.failures:
        print(f"  {kind} failure at pair ({i + 1},{j + 1})")
    return EXIT_OK if report.ok else EXIT_INTEGRITY


def _cmd_color(args) -> int:
    g = _load_adjacency(args.input)
    if args.prefix is not None:
        g = g.induced_prefix(args.prefix)
    if args.degeneracy_order:
        from .coloring import find_coloring_reordered

        coloring, stats = find_coloring_reordered(g, args.k)
    else:
        coloring, stats = search_k_coloring(
            g, args.k, symmetry_break=not args.no_symmetry_break
        )
    verdict = "SAT" if coloring is not None else "UNSAT"
    print(f"verdict: {verdict}")
    print(
        f"stats: backend={ACTIVE_BACKEND} nodes={stats.nodes_visited} "
        f"max-depth={stats.max_depth} forced={stats.forced_assignments} "
        f"elapsed={stats.elapsed:.3f}s"
    )
    if coloring is not None:
        assert verify_coloring(g, coloring)
        if args.witness_out:
            with open(args.witness_out, "w") as fh:
                fh.write(" ".join(str(c + 1) for c in coloring) + "\n")
            print(f"witness -> {args.witness_out}")
        else:
            print("witness:", " ".join(str(c + 1) for c in coloring))
    return EXIT_OK


def _cmd_prefix_search(args) -> int:
    g = _load_adjacency(args.input)
    try:
        m = minimal_non_k_prefix(g, args.k)
    except ValueError as exc:
        print(str(exc))
        return EXIT_OK
    print(f"minimal non-{args.k}-colorable prefix: {m}")
    return EXIT_OK


def _cmd_export(args) -> int:
    g = read_bundle(args.input, verify=not args.no_verify)
    wrote = False
    if args.dimacs:
        emit_dimacs(AdjacencyGraph.from_graph(g), args.dimacs)
        print(f"dimacs -> {args.dimacs}")
        wrote = True
    if args.svg:
        emit_svg(g, args.svg, vertices_only=args.vertices_only, geodesic=not args.chords)
        print(f"svg -> {args.svg}")
        wrote = True
    if args.bundle:
        write_bundle(g, args.bundle)
        print(f"bundle -> {args.bundle}")
        wrote = True
    if not wrote:
        print("export: pass at least one of --dimacs/--svg/--bundle", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def _cmd_stats(args) -> int:
    g = read_bundle(args.input, verify=False)
    phases: dict[int, int] = {}
    for origin in g.origins:
        phases[0 if origin is None else origin.phase] = (
            phases.get(0 if origin is None else origin.phase, 0) + 1
        )
    degs = [0] * g.order
    for i, j in g.edges:
        degs[i] += 1
        degs[j] += 1
    print(f"order: {g.order}")
    print(f"size: {g.size}")
    print(f"degree: min {min(degs) if degs else 0} max {max(degs) if degs else 0}")
    for phase in sorted(phases):
        label = "seed" if phase == 0 else f"phase {phase}"
        print(f"{label}: {phases[phase]} vertices")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypchrom",
        description="exact distance-graph construction and coloring in the hyperbolic disk",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-g9", help="emit the certified order-9 seed graph")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_build_g9)

    p = sub.add_parser("augment", help="run growth phases on a bundle")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--phases", type=int, default=None)
    p.add_argument(
        "--min-neighbors",
        default=None,
        help="comma-separated per-phase minimum neighbor counts",
    )
    p.add_argument("--denom-bound", type=int, default=None)
    p.add_argument(
        "--no-reference-selection",
        action="store_true",
        help="disable the published-selection exclusions of the first phase",
    )
    p.add_argument("--emit-intermediate", default=None, metavar="DIR")
    p.add_argument("--no-verify", action="store_true")
    p.set_defaults(func=_cmd_augment)

    p = sub.add_parser("certify", help="re-certify a bundle exactly")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--exhaustive-limit", type=int, default=119)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("color", help="decide k-colorability")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--prefix", type=int, default=None)
    p.add_argument("--no-symmetry-break", action="store_true")
    p.add_argument(
        "--degeneracy-order",
        action="store_true",
        help="search over a smallest-last order (witness mapped back)",
    )
    p.add_argument("--witness-out", default=None)
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("prefix-search", help="minimal non-k-colorable vertex prefix")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--k", type=int, default=4)
    p.set_defaults(func=_cmd_prefix_search)

    p = sub.add_parser("export", help="export a bundle to other formats")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--dimacs", default=None)
    p.add_argument("--svg", default=None)
    p.add_argument("--vertices-only", action="store_true")
    p.add_argument("--chords", action="store_true", help="draw edges as chords")
    p.add_argument("--bundle", default=None)
    p.add_argument("--no-verify", action="store_true")
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("stats", help="summarize a bundle")
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=_cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphIntegrityError, BundleFormatError) as exc:
        print(f"integrity failure: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
