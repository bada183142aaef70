"""
Set-level primitives on graphs.

``N(U)``, ``e(U, W)`` and ``e(U)`` in the usual notation, plus connected
components. All vertex sets are validated against the graph's vertex range.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable

from rglab.exceptions import InvalidInputError
from rglab.graph.graph_model import Graph


def _vertex_set(g: Graph, vertices: Iterable[int], name: str) -> frozenset[int]:
    out = frozenset(int(v) for v in vertices)
    for v in out:
        if not 0 <= v < g.n:
            raise InvalidInputError(f"vertex {v} in {name} outside [0, {g.n})", field=name, value=v)
    return out


def external_neighborhood(g: Graph, U: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``U`` with at least one neighbour in ``U``.

    Examples
    --------
    >>> from rglab.graph.families import path_graph
    >>> sorted(external_neighborhood(path_graph(5), {1, 2}))
    [0, 3]
    """
    us = _vertex_set(g, U, "U")
    out: set[int] = set()
    for u in us:
        out.update(g.neighbors(u))
    return frozenset(out - us)


def edges_between(g: Graph, U: Iterable[int], W: Iterable[int]) -> int:
    """Number of edges with one end in ``U`` and the other in ``W``.

    Raises
    ------
    InvalidInputError
        If ``U`` and ``W`` intersect or hold out-of-range vertices.
    """
    us = _vertex_set(g, U, "U")
    ws = _vertex_set(g, W, "W")
    common = us & ws
    if common:
        raise InvalidInputError("U and W must be disjoint", field="W", value=min(common))
    if len(us) > len(ws):
        us, ws = ws, us
    return sum(1 for u in us for v in g.neighbors(u) if v in ws)


def edges_within(g: Graph, U: Iterable[int]) -> int:
    """Number of edges spanned by ``U``."""
    us = _vertex_set(g, U, "U")
    return sum(1 for u in us for v in g.neighbors(u) if v > u and v in us)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Components in order of their smallest vertex (iterative BFS)."""
    seen = [False] * g.n
    components: list[frozenset[int]] = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        comp = [root]
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        components.append(frozenset(comp))
    return components


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1
