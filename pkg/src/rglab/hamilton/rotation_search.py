"""
Rotation-extension search for Hamilton cycles.

The search keeps one path and repeats:

1. extend both ends greedily (fewest unvisited neighbours first);
2. walk the rotation closure with the start fixed, breadth first over end
   vertices, until some witness either has an end with a neighbour off
   the path (extend) or has adjacent ends (close a cycle);
3. reopen a non-spanning cycle through an edge leaving it;
4. if nothing works, retry with the other end fixed, then restart from a
   fresh random vertex.

A spanning cycle is certified against the host graph before it is
returned. Exhausting the budget yields ``not_found``, never a claim of
non-Hamiltonicity.
"""

from __future__ import annotations

import bisect
import logging
import math
import os
import time
from collections import deque
from collections.abc import Iterable, Iterator, Sequence

import numpy as np

from rglab.graph.graph_model import Graph
from rglab.graph.graph_ops import is_connected
from rglab.hamilton.ham_models import HamResult, HamStats, HamStatus, certify_cycle
from rglab.posa.rotation import rotate
from rglab.random_models.seeding import SeedLike, make_rng
from rglab.settings import get_settings

logger = logging.getLogger(__name__)
SEARCH_DEBUG = bool(os.getenv("RGLAB_DEBUG"))

DEFAULT_MAX_RESTARTS = 25


def default_budget(n: int) -> int:
    """``rotation_budget_factor * n * ln n`` rotations, at least 100."""
    factor = get_settings().rotation_budget_factor
    return max(100, math.ceil(factor * n * math.log(max(n, 2))))


class RotationSearch:
    """Rotation-extension state over an adjacency structure that may grow.

    Parameters
    ----------
    n : int
        Vertex count.
    adjacency : sequence of iterables
        Neighbours of each vertex.
    rng : numpy.random.Generator
        Source for restart vertices.
    stats : HamStats
        Counters updated in place.
    """

    def __init__(
        self, n: int, adjacency: Sequence[Iterable[int]], rng: np.random.Generator, stats: HamStats
    ) -> None:
        self.n = n
        self.nbrs: list[list[int]] = [sorted(a) for a in adjacency]
        self.sets: list[set[int]] = [set(a) for a in self.nbrs]
        self.rng = rng
        self.stats = stats
        self.best: list[int] = []

    def add_edge(self, u: int, v: int) -> None:
        if v in self.sets[u]:
            return
        bisect.insort(self.nbrs[u], v)
        bisect.insort(self.nbrs[v], u)
        self.sets[u].add(v)
        self.sets[v].add(u)

    def _record(self, path: list[int]) -> None:
        if len(path) > len(self.best):
            self.best = list(path)

    def _off_path_degree(self, w: int, on_path: bytearray) -> int:
        return sum(1 for x in self.nbrs[w] if not on_path[x])

    def greedy_extend(self, path: list[int], on_path: bytearray) -> list[int]:
        """Grow ``path`` at its end, then at its start, in place."""
        for _ in range(2):
            while True:
                cand = [w for w in self.nbrs[path[-1]] if not on_path[w]]
                if not cand:
                    break
                w = min(cand, key=lambda x: (self._off_path_degree(x, on_path), x))
                path.append(w)
                on_path[w] = 1
                self.stats.extensions += 1
            path.reverse()
        return path

    def closure_states(self, path: list[int], budget: int | None = None) -> Iterator[list[int]]:
        """Witness paths of the endpoint closure of ``path``, breadth first.

        Each new end vertex costs one rotation; the walk stops once the
        total rotation count reaches ``budget``.
        """
        h = len(path) - 1
        seen = {path[-1]}
        queue: deque[list[int]] = deque([path])
        while queue:
            cur = queue.popleft()
            yield cur
            pos = {v: i for i, v in enumerate(cur)}
            for y in self.nbrs[cur[-1]]:
                i = pos.get(y)
                if i is None or i >= h - 1:
                    continue
                end = cur[i + 1]
                if end in seen:
                    continue
                if budget is not None and self.stats.rotations >= budget:
                    return
                seen.add(end)
                self.stats.rotations += 1
                queue.append(rotate(cur, i))

    def open_cycle(self, cycle: list[int], on_path: bytearray) -> list[int] | None:
        """Cut ``cycle`` open next to an edge leaving it and append that edge."""
        for idx, c in enumerate(cycle):
            for w in self.nbrs[c]:
                if not on_path[w]:
                    return cycle[idx + 1 :] + cycle[: idx + 1] + [w]
        return None

    def _explore(self, path: list[int], on_path: bytearray, budget: int) -> tuple[str, list[int], int]:
        x0 = path[0]
        for cur in self.closure_states(path, budget):
            r = cur[-1]
            for w in self.nbrs[r]:
                if not on_path[w]:
                    return "extend", cur, w
            if len(cur) >= 3 and x0 in self.sets[r]:
                return "cycle", cur, -1
        return "stuck", path, -1

    def improve(self, path: list[int], budget: int) -> list[int] | None:
        """Drive ``path`` towards a Hamilton cycle; ``None`` on a stall."""
        n = self.n
        on_path = bytearray(n)
        for v in path:
            on_path[v] = 1
        while True:
            self.greedy_extend(path, on_path)
            self._record(path)
            if len(path) == n and n >= 3 and path[0] in self.sets[path[-1]]:
                return path
            kind, cur, w = self._explore(path, on_path, budget)
            if kind == "stuck" and self.stats.rotations < budget:
                kind, cur, w = self._explore(path[::-1], on_path, budget)
            if kind == "extend":
                path = cur + [w]
                on_path[w] = 1
                self.stats.extensions += 1
                continue
            if kind == "cycle":
                if len(cur) == n:
                    return cur
                opened = self.open_cycle(cur, on_path)
                if opened is None:
                    return None
                self.stats.cycle_closures += 1
                on_path[opened[-1]] = 1
                path = opened
                continue
            if SEARCH_DEBUG:
                logger.debug(f"stall at |P|={len(path)} after {self.stats.rotations} rotations")
            return None

    def run(self, budget: int, max_restarts: int, start_path: Sequence[int] | None = None) -> list[int] | None:
        """Search until a Hamilton cycle is found, ``budget`` rotations are spent
        or ``max_restarts`` restarts are used."""
        path = list(start_path) if start_path else [int(self.rng.integers(self.n))]
        restarts = 0
        while True:
            cycle = self.improve(path, budget)
            if cycle is not None:
                return cycle
            if self.stats.rotations >= budget or restarts >= max_restarts:
                return None
            restarts += 1
            self.stats.restarts += 1
            path = [int(self.rng.integers(self.n))]


def rotation_extension_search(
    g: Graph,
    budget: int | None = None,
    seed: SeedLike = None,
    *,
    max_restarts: int = DEFAULT_MAX_RESTARTS,
) -> HamResult:
    """Look for a Hamilton cycle of ``g`` by rotation-extension.

    Parameters
    ----------
    g : Graph
        Graph to search.
    budget : int, optional
        Total rotations allowed (default ``50 n ln n``, see
        :func:`default_budget`).
    seed : int or Generator, optional
        Seed for the restart vertices.
    max_restarts : int, default 25
        Fresh greedy restarts after stalls.

    Returns
    -------
    HamResult
        ``hamiltonian`` with a certified cycle, or ``not_found``. Graphs with
        a vertex of degree below 2 or more than one component are answered
        ``not_found`` without searching.

    Examples
    --------
    >>> from rglab.graph.families import cycle_graph
    >>> res = rotation_extension_search(cycle_graph(6), seed=1)
    >>> res.status.value, res.stats.rotations
    ('hamiltonian', 0)
    """
    started = time.perf_counter()
    n = g.n
    stats = HamStats()
    budget = default_budget(n) if budget is None else budget

    def done(cycle: list[int] | None) -> HamResult:
        stats.elapsed_seconds = time.perf_counter() - started
        if cycle is None:
            return HamResult(status=HamStatus.NOT_FOUND, method="rotation", n=n, stats=stats)
        return HamResult(status=HamStatus.HAMILTONIAN, method="rotation", n=n, cycle=certify_cycle(cycle, g), stats=stats)

    if n < 3 or g.min_degree() < 2 or not is_connected(g):
        logger.debug(f"rotation search skipped: n={n}, min degree or connectivity rules out a cycle")
        return done(None)
    search = RotationSearch(n, [g.neighbors(v) for v in range(n)], make_rng(seed), stats)
    cycle = search.run(budget, max_restarts)
    if cycle is None:
        logger.debug(f"rotation search gave up: best path {len(search.best)}/{n} vertices, {stats!r}")
    return done(cycle)
