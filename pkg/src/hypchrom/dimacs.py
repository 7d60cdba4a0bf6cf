"""DIMACS edge-format input and output (1-indexed, each edge once)."""

from __future__ import annotations

from .coloring import AdjacencyGraph


def emit_dimacs(g: AdjacencyGraph, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(f"p edge {g.n} {g.size}\n")
        for i, j in g.edges():
            fh.write(f"e {i + 1} {j + 1}\n")


def parse_dimacs(path: str) -> AdjacencyGraph:
    n = None
    edges = []
    with open(path) as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("c"):
                continue
            parts = line.split()
            if parts[0] == "p":
                if len(parts) != 4 or parts[1] != "edge":
                    raise ValueError(f"line {line_no}: malformed problem line")
                n = int(parts[2])
            elif parts[0] == "e":
                if len(parts) != 3:
                    raise ValueError(f"line {line_no}: malformed edge line")
                if n is None:
                    raise ValueError(f"line {line_no}: edge before problem line")
                i, j = int(parts[1]) - 1, int(parts[2]) - 1
                edges.append((i, j))
            else:
                raise ValueError(f"line {line_no}: unknown record {parts[0]!r}")
    if n is None:
        raise ValueError("missing problem line")
    return AdjacencyGraph(n, edges)
