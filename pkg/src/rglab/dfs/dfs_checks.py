"""
Independent checks for DFS traces.

:func:`verify_dfs_trace` replays an event log against the host graph and
reports every violation of:

* one vertex per step, along ``T -> U`` or ``U -> S`` (top of stack only);
* no edge between ``S`` and ``T`` (arcs from ``S`` to ``T`` for digraphs);
* consecutive stack entries adjacent, so ``U`` spans a path;
* for online runs, after ``t`` queries with ``T`` non-empty,
  ``|S ∪ U| >= X_1 + ... + X_t`` and ``|U| <= 1 + X_1 + ... + X_t``.

It returns the violations instead of raising; the engine raises
:class:`~rglab.exceptions.InvariantViolationError` in checked mode.
"""

from __future__ import annotations

import itertools

from pydantic import BaseModel, Field

from rglab.dfs.dfs_trace import DfsTrace, Move
from rglab.exceptions import CapacityError, InvalidInputError
from rglab.graph.graph_model import DiGraph, Graph


def verify_dfs_trace(trace: DfsTrace, g: Graph | DiGraph, *, online: bool = False) -> list[str]:
    """Replay ``trace`` on ``g`` and list every invariant violation."""
    n = trace.n
    if g.n != n:
        return [f"trace has n={n} but graph has n={g.n}"]
    violations: list[str] = []
    directed = isinstance(g, DiGraph)
    out = (lambda v: g.out_neighbors(v)) if isinstance(g, DiGraph) else (lambda v: g.neighbors(v))
    in_t = [True] * n
    stack: list[int] = []
    s_size = 0
    t_size = n
    positives = 0
    for step, (v, move) in enumerate(trace.events, start=1):
        if not 0 <= v < n:
            violations.append(f"step {step}: vertex {v} out of range")
            continue
        if move is Move.PUSH:
            if not in_t[v]:
                violations.append(f"step {step}: vertex {v} moved T->U but is not in T")
            if stack:
                if not g.adjacent(stack[-1], v):
                    violations.append(f"step {step}: U stops spanning a path at {stack[-1]}->{v}")
                positives += 1
            in_t[v] = False
            t_size -= 1
            stack.append(v)
        else:
            if not stack or stack[-1] != v:
                violations.append(f"step {step}: vertex {v} moved U->S but is not the top of U")
                if v in stack:
                    stack.remove(v)
            else:
                stack.pop()
            s_size += 1
            for w in out(v):
                if in_t[w]:
                    kind = "arc" if directed else "edge"
                    violations.append(f"step {step}: {kind} {v}-{w} joins S and T")
                    break
        if online and t_size > 0:
            if s_size + len(stack) < positives:
                violations.append(f"step {step}: |S ∪ U| = {s_size + len(stack)} below positive answers {positives}")
            if len(stack) > 1 + positives:
                violations.append(f"step {step}: |U| = {len(stack)} exceeds 1 + positive answers {positives}")
    if stack or t_size or s_size != n:
        violations.append(f"run ended with |S|={s_size}, |U|={len(stack)}, |T|={t_size}")
    covered: set[int] = set()
    for epoch in trace.epochs:
        if covered & epoch.vertices:
            violations.append(f"epoch {epoch.start}-{epoch.end} overlaps an earlier epoch")
        covered |= epoch.vertices
        if epoch.end - epoch.start + 1 != 2 * len(epoch.vertices):
            violations.append(f"epoch {epoch.start}-{epoch.end} length does not match its {len(epoch.vertices)} vertices")
    if covered != set(range(n)):
        violations.append("epochs do not cover the vertex set")
    return violations


class PathGuarantee(BaseModel):
    """Outcome of checking the k-set expansion path guarantee on one graph."""

    k: int = Field(..., description="Set size the expansion was measured on")
    min_expansion: int = Field(..., description="Minimum |N(U)| over all vertex sets of size exactly k")
    path_length: int = Field(..., description="Edges in the longest U-path of the DFS run")
    holds: bool = Field(..., description="path_length >= min_expansion")


def dfs_path_guarantee(g: Graph, k: int, *, cap: int = 16) -> PathGuarantee:
    """Compare the DFS longest path with ``min |N(U)|`` over ``k``-sets.

    Every graph in which all ``k``-sets have at least ``l`` external
    neighbours contains a path of length ``l``; the DFS finds one.

    Raises
    ------
    CapacityError
        If ``g.n`` exceeds ``cap`` (the enumeration is exponential).
    InvalidInputError
        Unless ``1 <= k < n``.
    """
    from rglab.dfs.dfs_engine import run_dfs

    if g.n > cap:
        raise CapacityError(
            f"k-set enumeration limited to n <= {cap}", operation="dfs_path_guarantee", n=g.n, cap=cap
        )
    if not 1 <= k < g.n:
        raise InvalidInputError(f"need 1 <= k < n, got k={k}, n={g.n}", field="k", value=k)
    masks = g.adjacency_masks()
    best = g.n
    for subset in itertools.combinations(range(g.n), k):
        inside = 0
        reach = 0
        for v in subset:
            inside |= 1 << v
            reach |= masks[v]
        best = min(best, (reach & ~inside).bit_count())
        if best == 0:
            break
    path = run_dfs(g).max_u_path
    length = path.length if path is not None else 0
    return PathGuarantee(k=k, min_expansion=best, path_length=length, holds=length >= best)
