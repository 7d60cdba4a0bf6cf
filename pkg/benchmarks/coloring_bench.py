"""Benchmark the compiled color-search kernel against the pure-Python twin.

Runs the same searches through both backends and prints wall times and the
speedup.  The two kernels are semantically identical (same verdicts,
witnesses and statistics), so any difference is pure execution speed.

Usage: python benchmarks/coloring_bench.py [--quick]
"""

import argparse
import random
import sys
import time

sys.path.insert(0, "src")

from hypchrom import _colorsearch_py  # noqa: E402
from hypchrom.augment import AugmentConfig, grow_pipeline  # noqa: E402
from hypchrom.coloring import AdjacencyGraph, search_k_coloring  # noqa: E402
from hypchrom.geometry import build_g9  # noqa: E402

try:
    from hypchrom import _colorsearch
except ImportError:
    _colorsearch = None


def run(name, g, k, repeat=1):
    rows = []
    for backend, label in ((_colorsearch, "compiled"), (_colorsearch_py, "python")):
        if backend is None:
            rows.append((label, None, None))
            continue
        best = float("inf")
        verdict = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            coloring, stats = search_k_coloring(g, k, backend=backend)
            best = min(best, time.perf_counter() - t0)
            verdict = "SAT" if coloring is not None else "UNSAT"
        rows.append((label, best, verdict))
    (l1, t1, v1), (l2, t2, v2) = rows
    if t1 is None:
        print(f"{name:<34} {l2}: {t2:8.3f}s [{v2}]  (compiled kernel unavailable)")
        return
    assert v1 == v2, "backends disagree"
    print(f"{name:<34} {v1:<5} compiled {t1:8.4f}s  python {t2:8.4f}s  x{t2 / t1:6.1f}")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="skip the large instances")
    args = parser.parse_args()

    print("building growth pipeline...", flush=True)
    graphs = grow_pipeline(build_g9(), cfg=AugmentConfig.reference())
    by_order = {g.order: AdjacencyGraph.from_graph(g) for g in graphs}
    final = AdjacencyGraph.from_graph(graphs[-1])

    rng = random.Random(7)
    n = 60
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.25]
    random_g = AdjacencyGraph(n, edges)

    print(f"\n{'instance':<34} {'':<5} {'':>8}")
    run("random n=60 p=0.25, k=4", random_g, 4, repeat=3)
    run("order-42 graph, k=3 (UNSAT)", by_order[42], 3, repeat=3)
    run("order-42 graph, k=4 (SAT)", by_order[42], 4, repeat=3)
    if 226 in by_order:
        run("order-226 graph, k=4 (SAT)", by_order[226], 4, repeat=3)
    if not args.quick:
        run(f"final graph n={final.n}, k=4 (UNSAT)", final, 4)
        run(f"final prefix 800, k=4 (UNSAT)", final.induced_prefix(800), 4)


if __name__ == "__main__":
    main()
