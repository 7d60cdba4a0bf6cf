"""Search tool for the reference construction's excluded candidate points.

The published growth sequence omits a few candidates that are valid under
its stated rule.  Exclusions are persistent (an omitted point stays
omitted when later phases regenerate it), so the search state is a set of
excluded points.  At each phase the accept list is computed once; any
order excess over the published trajectory must be newly excluded
vertices of total degree 3 (removal then cannot change the other
acceptance decisions of the phase).  Branches are prioritized by octuple
denominator, which is how the two phase-4 exclusions now pinned in
reference_data.py were found (denominators 79/158, like two of the three
phase-1 exclusions, and absent from every published table).

Beyond the fifth milestone the published selection drops dozens of
points, including higher-degree ones, and no chain consistent with the
degree-3 model exists; the pipeline documents that deviation instead.
Complete chains, if any, are written to selection_solutions.txt.
"""

import sys
import itertools
import time

sys.path.insert(0, "src")

from hypchrom.geometry import build_g9, Graph  # noqa: E402
from hypchrom.augment import phase_augment, AugmentConfig  # noqa: E402
from hypchrom.reference_data import reference_excluded_points  # noqa: E402

TARGETS = [(28, 61), (42, 111), (68, 201), (119, 385), (226, 786), (455, 1679), (762, 2983)]
SCHEDULE = [2, 3, 3, 3, 3, 3, 3]


def remove_vertices(g: Graph, drop: set) -> Graph:
    keep = [i for i in range(g.order) if i not in drop]
    remap = {old: new for new, old in enumerate(keep)}
    return Graph(
        [g.vertices[i] for i in keep],
        [(remap[i], remap[j]) for i, j in g.edges if i not in drop and j not in drop],
        [g.origins[i] for i in keep],
    )


def deg3_new_vertices(g: Graph, n_before: int) -> list[int]:
    deg = [0] * g.order
    for i, j in g.edges:
        deg[i] += 1
        deg[j] += 1
    return [i for i in range(n_before, g.order) if deg[i] == 3]


def describe(g: Graph, idx: int) -> str:
    o = g.origins[idx]
    v = g.vertices[idx]
    den = max(q.denominator for q in v.octuple)
    return f"ph{o.phase}:pair({o.source_pair[0] + 1},{o.source_pair[1] + 1}){o.branch}:den{den}"


solutions = []
t_start = time.time()
evals = [0]


def explore(g: Graph, phase_idx: int, excluded: frozenset, history: list, budget_s: float):
    if time.time() - t_start > budget_s:
        return
    if phase_idx == len(SCHEDULE):
        solutions.append(list(history))
        print("SOLUTION:", history, flush=True)
        return
    cfg = AugmentConfig(excluded_points=excluded)
    n_before = g.order
    g_full = phase_augment(g, SCHEDULE[phase_idx], cfg=cfg, phase_index=phase_idx + 1)
    evals[0] += 1
    to, ts = TARGETS[phase_idx]
    excess_o = g_full.order - to
    excess_s = g_full.size - ts
    if excess_o < 0 or excess_s != 3 * excess_o:
        return
    if excess_o == 0:
        explore(g_full, phase_idx + 1, excluded, history, budget_s)
        return
    cands = deg3_new_vertices(g_full, n_before)
    if len(cands) < excess_o:
        return
    # high-denominator candidates first: known exclusions look like that
    def denom(i):
        return max(q.denominator for q in g_full.vertices[i].octuple)

    combos = sorted(
        itertools.combinations(cands, excess_o),
        key=lambda combo: -min(denom(i) for i in combo),
    )
    print(f"  phase {phase_idx + 1}: excess {excess_o}, {len(cands)} candidates, "
          f"{len(combos)} combos; denoms {[denom(i) for i in cands]}", flush=True)
    for combo in combos:
        if time.time() - t_start > budget_s:
            return
        g_next = remove_vertices(g_full, set(combo))
        tags = tuple(describe(g_full, i) for i in combo)
        new_excluded = excluded | {g_full.vertices[i] for i in combo}
        explore(g_next, phase_idx + 1, new_excluded, history + [tags], budget_s)


if __name__ == "__main__":
    budget = float(sys.argv[1]) if len(sys.argv) > 1 else 1800
    explore(build_g9(), 0, reference_excluded_points(), [], budget)
    print(f"{evals[0]} phase evaluations in {time.time() - t_start:.0f}s; "
          f"{len(solutions)} solutions", flush=True)
    with open("benchmarks/selection_solutions.txt", "w") as fh:
        for sol in solutions:
            fh.write(repr(sol) + "\n")
