"""Pure-Python backtracking color search with unit propagation.

Reference implementation of the kernel; the compiled extension mirrors
these semantics exactly (same visit order, same witness, same statistics),
so either can back the public API.
"""

from __future__ import annotations

import sys

UNCOLORED = -1

BACKEND = "python"


def search(n, indptr, indices, k, preassigned):
    """Depth-first search for a proper k-coloring over the fixed vertex order.

    The graph is in CSR form (indptr, indices).  preassigned is a sequence
    of (vertex, color) pairs applied with full propagation before the
    search.  Returns (colors_or_None, (nodes_visited, max_depth, forced)).
    """
    if k < 1 or k > 32:
        raise ValueError("color count must be between 1 and 32")
    full_mask = (1 << k) - 1
    colors = [UNCOLORED] * n
    feasible = [full_mask] * n
    trail: list = []      # (vertex, previous feasible mask)
    assigned: list = []   # vertices colored since the last mark
    stats = [0, 0, 0]     # nodes visited, max depth, forced assignments

    def assign(v, color_bit):
        # colors v, strips the color from uncolored neighbors, and keeps
        # assigning any neighbor whose feasible set becomes a singleton;
        # False as soon as some feasible set empties
        queue = [(v, color_bit)]
        qi = 0
        while qi < len(queue):
            u, bit = queue[qi]
            qi += 1
            if colors[u] != UNCOLORED:
                if feasible[u] == bit:
                    continue
                return False
            colors[u] = bit.bit_length() - 1
            assigned.append(u)
            trail.append((u, feasible[u]))
            feasible[u] = bit
            for t in range(indptr[u], indptr[u + 1]):
                w = indices[t]
                old = feasible[w]
                if colors[w] != UNCOLORED:
                    if old == bit:
                        return False
                    continue
                if old & bit:
                    new = old & ~bit
                    if new == 0:
                        return False
                    trail.append((w, old))
                    feasible[w] = new
                    if (new & (new - 1)) == 0:
                        stats[2] += 1
                        queue.append((w, new))
        return True

    def rollback(trail_mark, assigned_mark):
        while len(assigned) > assigned_mark:
            colors[assigned.pop()] = UNCOLORED
        while len(trail) > trail_mark:
            v, old = trail.pop()
            feasible[v] = old

    for v, color in preassigned:
        bit = 1 << color
        if colors[v] != UNCOLORED:
            if feasible[v] == bit:
                continue
            return None, tuple(stats)
        if not feasible[v] & bit:
            return None, tuple(stats)
        if not assign(v, bit):
            return None, tuple(stats)

    def walk(vertex):
        stats[0] += 1
        if vertex == n:
            return True
        if vertex + 1 > stats[1]:
            stats[1] = vertex + 1
        if colors[vertex] != UNCOLORED:
            return walk(vertex + 1)
        mask = feasible[vertex]
        while mask:
            bit = mask & -mask
            mask ^= bit
            t_mark, a_mark = len(trail), len(assigned)
            if assign(vertex, bit):
                if walk(vertex + 1):
                    return True
            rollback(t_mark, a_mark)
        return False

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, n + 512))
    try:
        found = walk(0)
    finally:
        sys.setrecursionlimit(old_limit)
    return (list(colors) if found else None), tuple(stats)
