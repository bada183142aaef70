"""
Simple graph, digraph, path and cycle types.

Vertices are the integers ``0 .. n-1``. Adjacency is kept as sorted tuples so
iteration order is deterministic (DFS traces depend on it); membership sets
are built lazily on first use. Graphs are immutable once constructed and are
safe to share between trial workers. Self-loops and parallel edges are
rejected at construction.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from typing import Protocol

import numpy as np

from rglab.exceptions import InvalidInputError


class Adjacency(Protocol):  # pragma: no cover - structural typing helper
    """Anything a path or cycle can be validated against."""

    n: int

    def adjacent(self, u: int, v: int) -> bool: ...


def _check_n(n: int) -> int:
    if int(n) != n or n < 0:
        raise InvalidInputError(f"vertex count must be a non-negative integer, got {n!r}", field="n", value=n)
    return int(n)


def _sorted_adjacency(n: int, src: np.ndarray, dst: np.ndarray) -> tuple[tuple[int, ...], ...]:
    """Group ``dst`` by ``src`` into per-vertex sorted tuples."""
    if src.size == 0:
        return tuple(() for _ in range(n))
    order = np.lexsort((dst, src))
    src_sorted = src[order]
    dst_sorted = dst[order]
    bounds = np.searchsorted(src_sorted, np.arange(n + 1))
    flat = dst_sorted.tolist()
    starts = bounds.tolist()
    return tuple(tuple(flat[starts[v] : starts[v + 1]]) for v in range(n))


class Graph:
    """Simple undirected graph on ``n`` labelled vertices.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of (int, int), optional
        Edge list. Order of the two endpoints is irrelevant.

    Raises
    ------
    InvalidInputError
        On out-of-range vertices, self-loops or repeated edges.

    Examples
    --------
    >>> g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    >>> g.edge_count, g.degree(1), g.neighbors(1)
    (3, 2, (0, 2))
    """

    __slots__ = ("n", "_adj", "_sets", "_edge_count")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        n = _check_n(n)
        sets: list[set[int]] = [set() for _ in range(n)]
        count = 0
        for pair in edges:
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"edge ({u}, {v}) has a vertex outside [0, {n})", field="edges", value=(u, v))
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}", field="edges", value=(u, v))
            if v in sets[u]:
                raise InvalidInputError(f"duplicate edge ({min(u, v)}, {max(u, v)})", field="edges", value=(u, v))
            sets[u].add(v)
            sets[v].add(u)
            count += 1
        self.n = n
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in sets)
        self._sets: tuple[frozenset[int], ...] | None = tuple(frozenset(s) for s in sets)
        self._edge_count = count

    @classmethod
    def from_arrays(cls, n: int, us: np.ndarray, vs: np.ndarray) -> Graph:
        """Build from parallel endpoint arrays known to hold distinct non-loop pairs.

        Generators use this path; it skips the per-edge duplicate checks.
        """
        n = _check_n(n)
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        g = cls.__new__(cls)
        g.n = n
        g._adj = _sorted_adjacency(n, np.concatenate([us, vs]), np.concatenate([vs, us]))
        g._sets = None
        g._edge_count = int(us.size)
        return g

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> Graph:
        """Build from a symmetric adjacency list."""
        edges = [(u, v) for u, nbrs in enumerate(adjacency) for v in nbrs if u < v]
        g = cls(len(adjacency), edges)
        for u, nbrs in enumerate(adjacency):
            if set(nbrs) != g.neighbor_set(u):
                raise InvalidInputError(f"adjacency is not symmetric at vertex {u}", field="adjacency", value=u)
        return g

    # -- basic queries -------------------------------------------------------------

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def vertices(self) -> range:
        return range(self.n)

    def check_vertex(self, v: int) -> int:
        """Return ``v`` as an int or raise :class:`InvalidInputError`."""
        if int(v) != v or not 0 <= v < self.n:
            raise InvalidInputError(f"vertex {v!r} outside [0, {self.n})", field="vertex", value=v)
        return int(v)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        if self._sets is None:
            self._sets = tuple(frozenset(a) for a in self._adj)
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_set(u)

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.neighbor_set(u)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield every edge once as ``(u, v)`` with ``u < v``, lexicographically."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if v > u:
                    yield (u, v)

    def non_edges(self) -> Iterator[tuple[int, int]]:
        """Yield every non-adjacent pair ``(u, v)``, ``u < v``, lexicographically."""
        for u in range(self.n):
            nbrs = self.neighbor_set(u)
            for v in range(u + 1, self.n):
                if v not in nbrs:
                    yield (u, v)

    def adjacency_masks(self) -> list[int]:
        """Per-vertex neighbourhoods as integer bitmasks (for exact oracles)."""
        masks = []
        for nbrs in self._adj:
            m = 0
            for v in nbrs:
                m |= 1 << v
            masks.append(m)
        return masks

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> Graph:
        """Return a new graph with ``extra`` edges added."""
        return Graph(self.n, [*self.edges(), *extra])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self._edge_count})"


class DiGraph:
    """Simple directed graph; at most one arc per ordered pair, no loops.

    Examples
    --------
    >>> d = DiGraph(3, [(0, 1), (1, 0), (1, 2)])
    >>> d.arc_count, d.out_neighbors(1), d.in_neighbors(0)
    (3, (0, 2), (1,))
    """

    __slots__ = ("n", "_out", "_in", "_out_sets", "_arc_count")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()) -> None:
        n = _check_n(n)
        outs: list[set[int]] = [set() for _ in range(n)]
        count = 0
        for pair in arcs:
            u, v = int(pair[0]), int(pair[1])
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"arc ({u}, {v}) has a vertex outside [0, {n})", field="arcs", value=(u, v))
            if u == v:
                raise InvalidInputError(f"self-loop at vertex {u}", field="arcs", value=(u, v))
            if v in outs[u]:
                raise InvalidInputError(f"duplicate arc ({u}, {v})", field="arcs", value=(u, v))
            outs[u].add(v)
            count += 1
        ins: list[list[int]] = [[] for _ in range(n)]
        for u, s in enumerate(outs):
            for v in s:
                ins[v].append(u)
        self.n = n
        self._out: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in outs)
        self._in: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in ins)
        self._out_sets: tuple[frozenset[int], ...] | None = None
        self._arc_count = count

    @classmethod
    def from_arrays(cls, n: int, tails: np.ndarray, heads: np.ndarray) -> DiGraph:
        """Build from arc arrays known to hold distinct non-loop ordered pairs."""
        n = _check_n(n)
        tails = np.asarray(tails, dtype=np.int64)
        heads = np.asarray(heads, dtype=np.int64)
        d = cls.__new__(cls)
        d.n = n
        d._out = _sorted_adjacency(n, tails, heads)
        d._in = _sorted_adjacency(n, heads, tails)
        d._out_sets = None
        d._arc_count = int(tails.size)
        return d

    @property
    def arc_count(self) -> int:
        return self._arc_count

    def vertices(self) -> range:
        return range(self.n)

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def has_arc(self, u: int, v: int) -> bool:
        if self._out_sets is None:
            self._out_sets = tuple(frozenset(a) for a in self._out)
        return v in self._out_sets[u]

    def adjacent(self, u: int, v: int) -> bool:
        return self.has_arc(u, v)

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u, outs in enumerate(self._out):
            for v in outs:
                yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiGraph):
            return NotImplemented
        return self.n == other.n and self._out == other._out

    def __hash__(self) -> int:
        return hash((self.n, self._out))

    def __repr__(self) -> str:
        return f"DiGraph(n={self.n}, arcs={self._arc_count})"


class Path:
    """Sequence of distinct vertices ``x0 x1 ... xh``; length is counted in edges.

    Adjacency of consecutive vertices is a property of a host graph and is
    checked by :meth:`validate`, not at construction.
    """

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[int]) -> None:
        vs = tuple(int(v) for v in vertices)
        if not vs:
            raise InvalidInputError("a path needs at least one vertex", field="vertices", value=())
        if len(set(vs)) != len(vs):
            raise InvalidInputError("path vertices must be distinct", field="vertices")
        self.vertices = vs

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    def reversed(self) -> Path:
        return Path(self.vertices[::-1])

    def is_path_in(self, g: Adjacency) -> bool:
        vs = self.vertices
        if any(not 0 <= v < g.n for v in vs):
            return False
        return all(g.adjacent(vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    def validate(self, g: Adjacency) -> None:
        """Raise :class:`InvalidInputError` unless this is a path of ``g``."""
        vs = self.vertices
        for v in vs:
            if not 0 <= v < g.n:
                raise InvalidInputError(f"path vertex {v} outside [0, {g.n})", field="path", value=v)
        for i in range(len(vs) - 1):
            if not g.adjacent(vs[i], vs[i + 1]):
                raise InvalidInputError(
                    f"consecutive path vertices {vs[i]} and {vs[i + 1]} are not adjacent",
                    field="path",
                    value=(vs[i], vs[i + 1]),
                )

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __getitem__(self, i: int) -> int:
        return self.vertices[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Path):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        if len(self.vertices) <= 12:
            return f"Path({list(self.vertices)})"
        return f"Path(length={self.length}, {self.start}..{self.end})"


class Cycle:
    """Cyclic sequence of at least three distinct vertices; length = vertex count."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[int]) -> None:
        vs = tuple(int(v) for v in vertices)
        if len(vs) < 3:
            raise InvalidInputError("a cycle needs at least three vertices", field="vertices", value=vs)
        if len(set(vs)) != len(vs):
            raise InvalidInputError("cycle vertices must be distinct", field="vertices")
        self.vertices = vs

    @property
    def length(self) -> int:
        return len(self.vertices)

    def is_cycle_in(self, g: Adjacency) -> bool:
        vs = self.vertices
        if any(not 0 <= v < g.n for v in vs):
            return False
        k = len(vs)
        return all(g.adjacent(vs[i], vs[(i + 1) % k]) for i in range(k))

    def is_spanning(self, n: int) -> bool:
        return len(self.vertices) == n

    def validate(self, g: Adjacency) -> None:
        """Raise :class:`InvalidInputError` unless this is a cycle of ``g``."""
        if not self.is_cycle_in(g):
            raise InvalidInputError("sequence is not a cycle of the host graph", field="cycle")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cycle):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        if len(self.vertices) <= 12:
            return f"Cycle({list(self.vertices)})"
        return f"Cycle(length={self.length})"
