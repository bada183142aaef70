"""
Monotone graph properties and their hitting times on a graph process.

A property object exposes ``holds(graph)`` and may add ``scan(process)``,
an incremental pass over the edge order that returns the hitting time
directly (or ``None`` when the property never holds). :func:`hitting_time`
uses the scan when present and a binary search over snapshots otherwise;
the binary search is only valid for monotone increasing properties.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from enum import Enum
from typing import Protocol, runtime_checkable

from rglab.exceptions import InvalidInputError, NoHittingTimeError
from rglab.graph.graph_model import Graph
from rglab.graph.graph_ops import is_connected
from rglab.hamilton.exact import exact_longest_path
from rglab.random_models.edge_process import EdgeProcess

logger = logging.getLogger(__name__)

_CHUNK = 1 << 16


class HittingMethod(str, Enum):
    AUTO = "auto"
    BINARY = "binary"
    INCREMENTAL = "incremental"


@runtime_checkable
class GraphProperty(Protocol):
    """A monotone increasing graph property."""

    name: str

    def holds(self, g: Graph) -> bool: ...


def _edge_stream(proc: EdgeProcess) -> Iterator[tuple[int, int, int]]:
    """``(i, u, v)`` for every edge of the process, 1-based ``i``."""
    us, vs = proc.edge_arrays(proc.total_pairs)
    for start in range(0, proc.total_pairs, _CHUNK):
        chunk_u = us[start : start + _CHUNK].tolist()
        chunk_v = vs[start : start + _CHUNK].tolist()
        for offset, (u, v) in enumerate(zip(chunk_u, chunk_v)):
            yield start + offset + 1, u, v


class MinDegreeAtLeast:
    """Minimum degree at least ``d``; scanned by incremental degree tracking."""

    __slots__ = ("d", "name")

    def __init__(self, d: int) -> None:
        if d < 0:
            raise InvalidInputError(f"degree bound must be non-negative, got {d}", field="d", value=d)
        self.d = d
        self.name = f"min_degree>={d}"

    def holds(self, g: Graph) -> bool:
        return g.n == 0 or g.min_degree() >= self.d

    def scan(self, proc: EdgeProcess) -> int | None:
        if self.d == 0:
            return 0
        if self.d > proc.n - 1:
            return None
        degree = [0] * proc.n
        deficient = proc.n
        for i, u, v in _edge_stream(proc):
            for x in (u, v):
                degree[x] += 1
                if degree[x] == self.d:
                    deficient -= 1
            if deficient == 0:
                return i
        return None

    def __repr__(self) -> str:
        return f"MinDegreeAtLeast({self.d})"


class Connected:
    """Connectivity; scanned with a union-find over the edge order."""

    __slots__ = ("name",)

    def __init__(self) -> None:
        self.name = "connected"

    def holds(self, g: Graph) -> bool:
        return is_connected(g)

    def scan(self, proc: EdgeProcess) -> int | None:
        parent = list(range(proc.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        components = proc.n
        if components == 1:
            return 0
        for i, u, v in _edge_stream(proc):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                components -= 1
                if components == 1:
                    return i
        return None

    def __repr__(self) -> str:
        return "Connected()"


class HasPathAtLeast:
    """A path with at least ``length`` edges (exact longest path, small ``n`` only)."""

    __slots__ = ("length", "name", "cap")

    def __init__(self, length: int, *, cap: int | None = None) -> None:
        if length < 0:
            raise InvalidInputError(f"path length must be non-negative, got {length}", field="length", value=length)
        self.length = length
        self.cap = cap
        self.name = f"path>={length}"

    def holds(self, g: Graph) -> bool:
        return exact_longest_path(g, cap=self.cap) >= self.length

    def __repr__(self) -> str:
        return f"HasPathAtLeast({self.length})"


def _binary_search(proc: EdgeProcess, prop: GraphProperty) -> int:
    if not prop.holds(proc.snapshot(proc.total_pairs)):
        raise NoHittingTimeError(
            f"property {prop.name} does not hold on the complete graph", property_name=prop.name
        )
    lo, hi = 0, proc.total_pairs
    while lo < hi:
        mid = (lo + hi) // 2
        if prop.holds(proc.snapshot(mid)):
            hi = mid
        else:
            lo = mid + 1
    return lo


def hitting_time(
    proc: EdgeProcess,
    prop: GraphProperty,
    method: HittingMethod | str = HittingMethod.AUTO,
) -> int:
    """First index ``i`` with ``G_i`` having ``prop``.

    Parameters
    ----------
    proc : EdgeProcess
        The graph process.
    prop : GraphProperty
        A monotone increasing property.
    method : {"auto", "binary", "incremental"}
        ``auto`` scans when the property supports it.

    Raises
    ------
    NoHittingTimeError
        If the property fails on ``G_N``.
    InvalidInputError
        If ``incremental`` is asked of a property without a scan.

    Examples
    --------
    >>> from rglab.random_models.edge_process import random_process
    >>> hitting_time(random_process(2, seed=0), MinDegreeAtLeast(1))
    1
    """
    method = HittingMethod(method)
    scan = getattr(prop, "scan", None)
    if method is HittingMethod.INCREMENTAL and scan is None:
        raise InvalidInputError(f"{prop.name} has no incremental scan", field="method", value=method.value)
    if method is HittingMethod.BINARY or scan is None:
        tau = _binary_search(proc, prop)
    else:
        found = scan(proc)
        if found is None:
            raise NoHittingTimeError(
                f"property {prop.name} does not hold on the complete graph", property_name=prop.name
            )
        tau = found
    logger.debug(f"hitting time of {prop.name} on n={proc.n}: {tau} ({method.value})")
    return tau
