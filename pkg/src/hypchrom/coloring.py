"""Proper-coloring decisions by backtracking search with unit propagation.

The search walks vertices in their fixed construction order, skipping any
vertex whose color was forced by propagation.  A compiled kernel is used
when available, with a pure-Python twin selected at import time otherwise;
the two produce identical verdicts, witnesses and statistics.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import _colorsearch_py

try:
    from . import _colorsearch  # compiled extension

    _KERNEL = _colorsearch
except ImportError:  # pragma: no cover - depends on build environment
    _KERNEL = _colorsearch_py

UNCOLORED = -1

#: name of the kernel backing search_k_coloring ("compiled" or "python")
ACTIVE_BACKEND = _KERNEL.BACKEND


class AdjacencyGraph:
    """Symmetric adjacency structure with a fixed vertex order."""

    __slots__ = ("n", "neighbors", "_indptr", "_indices")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        self.n = n
        adj: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge ({i}, {j}) out of range")
            key = (min(i, j), max(i, j))
            if key in seen:
                continue
            seen.add(key)
            adj[i].append(j)
            adj[j].append(i)
        self.neighbors = tuple(tuple(sorted(lst)) for lst in adj)
        indptr = [0]
        indices: list[int] = []
        for lst in self.neighbors:
            indices.extend(lst)
            indptr.append(len(indices))
        self._indptr = indptr
        self._indices = indices

    @property
    def size(self) -> int:
        return len(self._indices) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in self.neighbors[i] if i < j]

    def induced_prefix(self, m: int) -> "AdjacencyGraph":
        """Subgraph induced by the first m vertices, order preserved."""
        if not 0 <= m <= self.n:
            raise ValueError("prefix length out of range")
        return AdjacencyGraph(
            m, [(i, j) for i, j in self.edges() if i < m and j < m]
        )

    @classmethod
    def from_graph(cls, g) -> "AdjacencyGraph":
        return cls(g.order, g.edges)


@dataclass
class SearchStats:
    nodes_visited: int
    max_depth: int
    forced_assignments: int
    elapsed: float


class ColorSearchState:
    """Explicit search state: per-vertex colors, feasible-color masks, and a
    trail that makes assign/rollback exact inverses.

    This is the reference, inspectable form of the state the kernels keep in
    flat arrays; useful for stepping through propagation in tests or tools.
    """

    __slots__ = ("graph", "k", "colors", "feasible", "trail", "assigned", "forced")

    def __init__(self, graph: AdjacencyGraph, k: int):
        if not 1 <= k <= 32:
            raise ValueError("color count must be between 1 and 32")
        self.graph = graph
        self.k = k
        self.colors = [UNCOLORED] * graph.n
        self.feasible = [(1 << k) - 1] * graph.n
        self.trail: list[tuple[int, int]] = []
        self.assigned: list[int] = []
        self.forced = 0

    def mark(self) -> tuple[int, int]:
        return (len(self.trail), len(self.assigned))

    def assign_propagate(self, v: int, color: int) -> bool:
        """Color v, propagate singleton feasible sets recursively; False on
        a conflict (some feasible set emptied).  The trail records enough
        to roll back either way."""
        if self.colors[v] != UNCOLORED:
            raise ValueError(f"vertex {v} is already colored")
        bit = 1 << color
        if not self.feasible[v] & bit:
            raise ValueError(f"color {color} not feasible for vertex {v}")
        colors, feasible = self.colors, self.feasible
        trail, assigned = self.trail, self.assigned
        neighbors = self.graph.neighbors
        queue = [(v, bit)]
        qi = 0
        while qi < len(queue):
            u, b = queue[qi]
            qi += 1
            if colors[u] != UNCOLORED:
                if feasible[u] == b:
                    continue
                return False
            colors[u] = b.bit_length() - 1
            assigned.append(u)
            trail.append((u, feasible[u]))
            feasible[u] = b
            for w in neighbors[u]:
                old = feasible[w]
                if colors[w] != UNCOLORED:
                    if old == b:
                        return False
                    continue
                if old & b:
                    new = old & ~b
                    if new == 0:
                        return False
                    trail.append((w, old))
                    feasible[w] = new
                    if (new & (new - 1)) == 0:
                        self.forced += 1
                        queue.append((w, new))
        return True

    def rollback(self, mark: tuple[int, int]) -> None:
        """Restore the state exactly as it was when mark() was taken."""
        trail_mark, assigned_mark = mark
        while len(self.assigned) > assigned_mark:
            self.colors[self.assigned.pop()] = UNCOLORED
        while len(self.trail) > trail_mark:
            v, old = self.trail.pop()
            self.feasible[v] = old

    def snapshot(self) -> tuple:
        return (tuple(self.colors), tuple(self.feasible))


def greedy_seed_clique(g: AdjacencyGraph, limit: int = 12) -> list[int]:
    """Greedy clique among the first vertices, used to break color symmetry."""
    clique: list[int] = []
    for v in range(min(limit, g.n)):
        if all(v in g.neighbors[u] for u in clique):
            clique.append(v)
    return clique


def search_k_coloring(
    g: AdjacencyGraph,
    k: int,
    symmetry_break: bool = True,
    backend=None,
) -> tuple[Optional[list[int]], SearchStats]:
    """Find a proper k-coloring or decide that none exists.

    Returns (coloring, stats); the coloring is verified before being
    returned.  With symmetry_break, a greedy clique among the first
    vertices is pre-colored (sound: any proper coloring can be permuted to
    agree on a clique); disable it to make depth statistics comparable
    across runs.
    """
    if k < 1:
        raise ValueError("k must be positive")
    kernel = backend if backend is not None else _KERNEL
    pre: list[tuple[int, int]] = []
    if symmetry_break and g.n:
        clique = greedy_seed_clique(g)
        pre = [(v, c) for c, v in enumerate(clique[: min(k, len(clique))])]
    started = time.perf_counter()
    coloring, (nodes, depth, forced) = kernel.search(
        g.n, g._indptr, g._indices, k, pre
    )
    elapsed = time.perf_counter() - started
    stats = SearchStats(nodes, depth, forced, elapsed)
    if coloring is not None and not verify_coloring(g, coloring):
        raise AssertionError("search returned an improper coloring")
    return coloring, stats


def verify_coloring(g: AdjacencyGraph, coloring: Sequence[int]) -> bool:
    """Independent checker: a total assignment with no monochromatic edge."""
    if len(coloring) != g.n:
        return False
    if any(c == UNCOLORED for c in coloring):
        return False
    for i in range(g.n):
        ci = coloring[i]
        for j in g.neighbors[i]:
            if j > i and coloring[j] == ci:
                return False
    return True


def brute_force_k_colorable(g: AdjacencyGraph, k: int) -> bool:
    """Exhaustive enumeration over vertex-by-vertex assignments; prunes only
    on explicit edge conflicts.  Independent of the search machinery."""
    colors = [UNCOLORED] * g.n

    def extend(v: int) -> bool:
        if v == g.n:
            return True
        for c in range(k):
            if all(colors[w] != c for w in g.neighbors[v] if w < v):
                colors[v] = c
                if extend(v + 1):
                    return True
                colors[v] = UNCOLORED
        return False

    return extend(0)


def brute_force_chromatic(g: AdjacencyGraph, upper: int = 12) -> int:
    for k in range(1, upper + 1):
        if brute_force_k_colorable(g, k):
            return k
    raise ValueError(f"chromatic number exceeds {upper}")


def chromatic_number(g: AdjacencyGraph, upper_bound: int = 16) -> Optional[int]:
    """Smallest k <= upper_bound admitting a proper k-coloring, else None."""
    if upper_bound < 1:
        raise ValueError("upper_bound must be positive")
    if g.n == 0:
        return 0 if upper_bound >= 0 else None
    for k in range(1, upper_bound + 1):
        coloring, _ = search_k_coloring(g, k)
        if coloring is not None:
            return k
    return None


def minimal_non_k_prefix(g: AdjacencyGraph, k: int) -> int:
    """Smallest m such that the first m vertices induce no k-colorable
    subgraph.  Binary search; sound because non-colorability of a prefix is
    inherited by every longer prefix."""
    coloring, _ = search_k_coloring(g, k)
    if coloring is not None:
        raise ValueError(f"graph is {k}-colorable; no prefix is a witness")
    lo, hi = 1, g.n  # invariant: prefix hi is not k-colorable
    while lo < hi:
        mid = (lo + hi) // 2
        coloring, _ = search_k_coloring(g.induced_prefix(mid), k)
        if coloring is None:
            hi = mid
        else:
            lo = mid + 1
    return hi


def minimal_non4_prefix(g: AdjacencyGraph) -> int:
    return minimal_non_k_prefix(g, 4)


def smallest_last_order(g: AdjacencyGraph) -> list[int]:
    """Degeneracy (smallest-last) vertex order: repeatedly peel a minimum
    degree vertex, then reverse."""
    import heapq

    deg = [len(g.neighbors[v]) for v in range(g.n)]
    removed = [False] * g.n
    heap = [(deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    peeled: list[int] = []
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        peeled.append(v)
        for w in g.neighbors[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    peeled.reverse()
    return peeled


def find_coloring_reordered(
    g: AdjacencyGraph, k: int
) -> tuple[Optional[list[int]], SearchStats]:
    """Witness finder: run the search over a degeneracy order and map the
    coloring back to the original vertex numbering.

    The fixed-order solver can stall on satisfiable instances whose
    construction order front-loads the dense core; a smallest-last order
    makes those easy.  Verdicts agree with the fixed-order search; only
    the vertex order (and hence the witness) differs.
    """
    order = smallest_last_order(g)
    pos = {v: i for i, v in enumerate(order)}
    permuted = AdjacencyGraph(g.n, [(pos[i], pos[j]) for i, j in g.edges()])
    coloring, stats = search_k_coloring(permuted, k)
    if coloring is None:
        return None, stats
    back = [0] * g.n
    for v in range(g.n):
        back[v] = coloring[pos[v]]
    if not verify_coloring(g, back):
        raise AssertionError("permuted witness failed verification")
    return back, stats


def moser_spindle() -> AdjacencyGraph:
    """The 7-vertex, 11-edge double-rhombus graph (4-chromatic)."""
    from .geometry import SPINDLE_EDGES

    return AdjacencyGraph(7, SPINDLE_EDGES)
