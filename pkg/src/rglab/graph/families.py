"""Named graph families used as fixtures, examples and oracles."""

from __future__ import annotations

from collections.abc import Sequence

from rglab.graph.graph_model import DiGraph, Graph


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        return path_graph(n)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Centre 0 joined to ``leaves`` leaves."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with sides ``0..a-1`` and ``a..a+b-1``."""
    return Graph(a + b, [(u, a + w) for u in range(a) for w in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph(offset, edges)


def transitive_tournament(n: int) -> DiGraph:
    """Arc ``u -> v`` for every ``u < v``."""
    return DiGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def two_component_fixture() -> Graph:
    """The eight-vertex two-component graph used for the golden DFS trace.

    Labels are 0-indexed; the 1-indexed edge list is
    1-3, 3-8, 8-1, 2-4, 4-7, 7-2, 4-6, 6-5, 2-6.
    """
    one_indexed = [(1, 3), (3, 8), (8, 1), (2, 4), (4, 7), (7, 2), (4, 6), (6, 5), (2, 6)]
    return Graph(8, [(u - 1, v - 1) for u, v in one_indexed])
