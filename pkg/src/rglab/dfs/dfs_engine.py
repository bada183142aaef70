"""
Depth-first search with explicit ``S / U / T`` bookkeeping.

``S`` holds finished vertices, ``U`` is the stack (it always spans a path),
``T`` holds untouched vertices. While ``U`` is non-empty the search queries
the pairs ``(top, u)``, ``u ∈ T``, in priority order; the first positive
answer moves ``u`` from ``T`` to ``U``, otherwise the top moves to ``S``.
When ``U`` is empty the priority-first vertex of ``T`` is pushed for free.

Two drivers share the loop structure:

* :func:`run_dfs` answers queries from a given graph.
* :func:`online_dfs` answers them from a Bernoulli stream, building the
  random graph on the fly.

``T`` is a :class:`~rglab.dfs.rank_set.RankSet` over priority ranks, so the
number of queries a step issues is computed in O(log n) and the online
driver can skip runs of negative answers without touching them.
"""

from __future__ import annotations

import logging
import os
from collections.abc import Sequence
from typing import NamedTuple

import numpy as np

from rglab.dfs.dfs_checks import verify_dfs_trace
from rglab.dfs.dfs_trace import DfsTrace, TraceRecorder
from rglab.dfs.rank_set import RankSet
from rglab.exceptions import InvalidInputError, InvariantViolationError
from rglab.graph.graph_model import Cycle, DiGraph, Graph, Path
from rglab.random_models.bernoulli_stream import BernoulliStream
from rglab.random_models.pair_index import lex_rank, lex_unrank, ordered_unrank, pair_count
from rglab.settings import get_settings

logger = logging.getLogger(__name__)
DFS_DEBUG = bool(os.getenv("RGLAB_DEBUG"))


def _check_order(n: int, order: Sequence[int] | None) -> tuple[int, ...]:
    if order is None:
        return tuple(range(n))
    out = tuple(int(v) for v in order)
    if len(out) != n or sorted(out) != list(range(n)):
        raise InvalidInputError(f"order must be a permutation of 0..{n - 1}", field="order")
    return out


def _search(n: int, order: tuple[int, ...], adjacency: Sequence[Sequence[int]], directed: bool) -> DfsTrace:
    rank = [0] * n
    for r, v in enumerate(order):
        rank[v] = r
    identity = all(order[i] == i for i in range(n))
    if identity:
        nbrs: Sequence[Sequence[int]] = adjacency
    else:
        nbrs = [sorted(a, key=rank.__getitem__) for a in adjacency]

    t = RankSet(n)
    ptr = [0] * n
    scan_pos = [-1] * n
    queries = 0
    rec = TraceRecorder(n)
    stack = rec.stack

    while t.size or stack:
        if not stack:
            u = order[t.kth(0)]
            t.remove(rank[u])
            rec.push(u, queries)
            continue
        v = stack[-1]
        nb = nbrs[v]
        i = ptr[v]
        while i < len(nb) and rank[nb[i]] not in t:
            i += 1
        ptr[v] = i
        before = t.count_below(scan_pos[v] + 1)
        if i < len(nb):
            u = nb[i]
            ru = rank[u]
            queries += t.count_below(ru + 1) - before
            scan_pos[v] = ru
            t.remove(ru)
            rec.push(u, queries)
        else:
            queries += t.size - before
            rec.pop(queries)

    return rec.finish(order=order, directed=directed, query_count=queries)


def _maybe_verify(trace: DfsTrace, g: Graph | DiGraph, *, online: bool = False) -> None:
    if not get_settings().check_invariants:
        return
    violations = verify_dfs_trace(trace, g, online=online)
    if violations:
        raise InvariantViolationError(
            f"DFS trace failed {len(violations)} invariant checks", violations=violations
        )


def run_dfs(g: Graph, order: Sequence[int] | None = None) -> DfsTrace:
    """Run the DFS on ``g`` with priority order ``order`` (identity by default).

    Parameters
    ----------
    g : Graph
        Host graph.
    order : sequence of int, optional
        Permutation of ``0..n-1``; earlier vertices have higher priority.

    Returns
    -------
    DfsTrace
        The event log; its epochs are the connected components of ``g``.

    Raises
    ------
    InvalidInputError
        If ``order`` is not a permutation.

    Examples
    --------
    >>> from rglab.graph.families import complete_graph
    >>> run_dfs(complete_graph(4)).max_u_path
    Path([0, 1, 2, 3])
    """
    trace = _search(g.n, _check_order(g.n, order), [g.neighbors(v) for v in range(g.n)], directed=False)
    if DFS_DEBUG:
        logger.debug(f"run_dfs: {trace!r}")
    _maybe_verify(trace, g)
    return trace


def run_directed_dfs(d: DiGraph, order: Sequence[int] | None = None) -> DfsTrace:
    """DFS following out-neighbourhoods; same ``S / U / T`` contract as :func:`run_dfs`."""
    trace = _search(d.n, _check_order(d.n, order), [d.out_neighbors(v) for v in range(d.n)], directed=True)
    _maybe_verify(trace, d)
    return trace


def online_dfs(
    n: int,
    stream: BernoulliStream,
    *,
    directed: bool = False,
    materialize: bool = True,
) -> tuple[Graph | DiGraph, DfsTrace]:
    """DFS that exposes the random graph while it runs.

    Every query of a pair ``(v, u)`` consumes one stream bit (1 means
    edge). Once ``U`` and ``T`` are empty, every pair that was never queried
    is consumed too, in lexicographic pair order, so exactly
    ``n(n-1)/2`` bits (``n(n-1)`` when ``directed``) are read and the
    returned graph is distributed as G(n,p) (D(n,p)).

    Parameters
    ----------
    n : int
        Vertex count; the priority order is the identity.
    stream : BernoulliStream
        A fresh stream.
    directed : bool, default False
        Query ordered pairs and build a :class:`DiGraph`.
    materialize : bool, default True
        Record which pairs were queried so the tail bits become edges. With
        ``False`` the tail is still consumed, but the returned graph holds
        only the edges revealed by the search (the DFS forest). Required for
        very large ``n``.

    Raises
    ------
    InvalidInputError
        If the stream is not fresh.
    StreamUnderflowError
        If a finite stream runs out.
    """
    if not stream.fresh:
        raise InvalidInputError("online_dfs needs a fresh stream", field="stream", value=stream.position)
    if n < 0:
        raise InvalidInputError("n must be non-negative", field="n", value=n)
    if materialize and n > 5000:
        logger.warning(f"online_dfs with materialize=True at n={n} keeps every queried pair in memory")

    def pair_id(v: int, u: int) -> int:
        if directed:
            return v * (n - 1) + (u if u < v else u - 1)
        return lex_rank(n, v, u)

    t = RankSet(n)
    scan_pos = [-1] * n
    queries = 0
    rec = TraceRecorder(n)
    stack = rec.stack
    tails: list[int] = []
    heads: list[int] = []
    queried: set[int] = set()

    while t.size or stack:
        if not stack:
            u = t.kth(0)
            t.remove(u)
            rec.push(u, queries)
            continue
        v = stack[-1]
        before = t.count_below(scan_pos[v] + 1)
        avail = t.size - before
        hit = stream.scan(avail) if avail else None
        if hit is not None:
            if materialize:
                for j in range(hit + 1):
                    queried.add(pair_id(v, t.kth(before + j)))
            u = t.kth(before + hit)
            queries += hit + 1
            tails.append(v)
            heads.append(u)
            scan_pos[v] = u
            t.remove(u)
            rec.push(u, queries)
        else:
            if materialize and avail:
                for w in t.members_from(scan_pos[v] + 1):
                    queried.add(pair_id(v, w))
            queries += avail
            rec.pop(queries)

    total = n * (n - 1) if directed else pair_count(n)
    remaining = total - queries
    if materialize:
        keep = np.ones(total, dtype=bool)
        if queried:
            keep[np.fromiter(queried, dtype=np.int64, count=len(queried))] = False
        rest = np.flatnonzero(keep)
        base = stream.position
        hits = stream.positions_of_ones(int(rest.size)) - base
        extra = rest[hits]
        xs, ys = ordered_unrank(n, extra) if directed else lex_unrank(n, extra)
        tail_arr = np.concatenate([np.asarray(tails, dtype=np.int64), xs])
        head_arr = np.concatenate([np.asarray(heads, dtype=np.int64), ys])
    else:
        stream.skip(remaining)
        tail_arr = np.asarray(tails, dtype=np.int64)
        head_arr = np.asarray(heads, dtype=np.int64)

    graph: Graph | DiGraph
    if directed:
        graph = DiGraph.from_arrays(n, tail_arr, head_arr)
    else:
        graph = Graph.from_arrays(n, tail_arr, head_arr)
    trace = rec.finish(order=tuple(range(n)), directed=directed, query_count=queries, tail_queries=remaining)
    logger.debug(f"online_dfs: {trace!r}, bits read={stream.position}")
    _maybe_verify(trace, graph, online=True)
    return graph, trace


class LongPathResult(NamedTuple):
    """Outcome of :func:`long_path_dfs2`."""

    path: Path | None
    max_u: int
    balanced_s: int
    balanced_path: Path | None


def long_path_dfs2(g: Graph, order: Sequence[int] | None = None) -> LongPathResult:
    """Longest ``U``-path of a DFS run plus the path held when ``|S| == |T|``.

    If every two disjoint ``k``-sets of ``g`` are joined by an edge, the
    balanced path has at least ``n - 2k + 1`` edges.
    """
    trace = run_dfs(g, order)
    balanced_s = 0
    if trace.balanced_step is not None:
        balanced_s = len(trace.snapshot(trace.balanced_step).S)
    return LongPathResult(trace.max_u_path, trace.max_u, balanced_s, trace.balanced_path())


def directed_long_path(d: DiGraph, order: Sequence[int] | None = None) -> Path | None:
    """Longest directed ``U``-path of a DFS on out-neighbourhoods."""
    return run_directed_dfs(d, order).max_u_path


def cycle_from_path(g: Graph, P: Path, k: int) -> Cycle | None:
    """Close a cycle through an edge between the first ``k`` and last ``k`` vertices of ``P``.

    Among all such edges the one giving the longest cycle wins (ties go to the
    earliest first-block vertex). The cycle has at least
    ``P.length - 2(k - 1)`` edges.

    Raises
    ------
    InvalidInputError
        If ``k < 1`` or ``P`` has fewer than ``2k`` vertices.
    """
    vs = P.vertices
    if k < 1 or len(vs) < 2 * k:
        raise InvalidInputError(f"need 1 <= k and |P| >= 2k, got k={k}, |P|={len(vs)}", field="k", value=k)
    pos = {v: i for i, v in enumerate(vs)}
    last_start = len(vs) - k
    best: tuple[int, int] | None = None
    for i in range(k):
        for b in g.neighbors(vs[i]):
            j = pos.get(b)
            if j is None or j < last_start or j - i < 2:
                continue
            if best is None or j - i > best[1] - best[0]:
                best = (i, j)
    if best is None:
        return None
    return Cycle(vs[best[0] : best[1] + 1])


def directed_cycle_from_path(d: DiGraph, P: Path, k: int) -> Cycle | None:
    """Directed analogue: an arc from the last-``k`` block back to the first-``k`` block."""
    vs = P.vertices
    if k < 1 or len(vs) < 2 * k:
        raise InvalidInputError(f"need 1 <= k and |P| >= 2k, got k={k}, |P|={len(vs)}", field="k", value=k)
    pos = {v: i for i, v in enumerate(vs)}
    best: tuple[int, int] | None = None
    for j in range(len(vs) - k, len(vs)):
        for a in d.out_neighbors(vs[j]):
            i = pos.get(a)
            if i is None or i >= k or j - i < 2:
                continue
            if best is None or j - i > best[1] - best[0]:
                best = (i, j)
    if best is None:
        return None
    return Cycle(vs[best[0] : best[1] + 1])
