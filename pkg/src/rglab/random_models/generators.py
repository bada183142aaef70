"""
Seeded generators for G(n,p), G(n,m), D(n,p) and multiple exposure.

``gnp`` and ``dnp`` walk the pair order by geometric skipping: the gap to the
next present pair is Geometric(p), so sampling costs O(number of edges)
rather than O(n^2) coin flips. ``gnm`` draws a uniform m-subset of colex
pair indices with Floyd's algorithm.

The ``*_edges`` variants return endpoint arrays for callers that only need
degrees or counts and would waste time building adjacency.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

import numpy as np

from rglab.exceptions import InvalidInputError
from rglab.graph.graph_model import DiGraph, Graph
from rglab.random_models.bernoulli_stream import check_probability
from rglab.random_models.pair_index import colex_unrank, lex_unrank, ordered_unrank, pair_count
from rglab.random_models.seeding import SeedLike, derive_seed, make_rng

logger = logging.getLogger(__name__)


def _check_count(n: int) -> int:
    if int(n) != n or n < 0:
        raise InvalidInputError(f"n must be a non-negative integer, got {n!r}", field="n", value=n)
    return int(n)


def geometric_indices(total: int, p: float, rng: np.random.Generator) -> np.ndarray:
    """Sorted indices of the successes among ``total`` Bernoulli(p) trials."""
    if total <= 0 or p <= 0.0:
        return np.empty(0, dtype=np.int64)
    if p >= 1.0:
        return np.arange(total, dtype=np.int64)
    chunks: list[np.ndarray] = []
    last = -1
    expected = total * p
    batch = int(expected + 6.0 * math.sqrt(expected) + 64)
    while True:
        idx = last + np.cumsum(rng.geometric(p, size=batch))
        if idx[-1] >= total:
            chunks.append(idx[idx < total])
            break
        chunks.append(idx)
        last = int(idx[-1])
        batch = max(1024, batch // 4)
    return np.concatenate(chunks)


def gnp_edges(n: int, p: float, seed: SeedLike = None) -> tuple[np.ndarray, np.ndarray]:
    """Endpoint arrays of a G(n,p) sample, in lexicographic pair order."""
    n = _check_count(n)
    p = check_probability(p)
    idx = geometric_indices(pair_count(n), p, make_rng(seed))
    return lex_unrank(n, idx)


def gnp(n: int, p: float, seed: SeedLike = None) -> Graph:
    """Sample G(n,p): each of the ``n(n-1)/2`` pairs independently with probability ``p``.

    Parameters
    ----------
    n : int
        Number of vertices.
    p : float
        Edge probability in ``[0, 1]``.
    seed : int, optional
        Seed; identical seeds give identical graphs.

    Raises
    ------
    InvalidInputError
        If ``p`` lies outside ``[0, 1]``.

    Examples
    --------
    >>> gnp(5, 1.0, seed=1).edge_count
    10
    """
    us, vs = gnp_edges(n, p, seed)
    g = Graph.from_arrays(n, us, vs)
    logger.debug(f"gnp(n={n}, p={p}) -> {g.edge_count} edges")
    return g


def gnm_edges(n: int, m: int, seed: SeedLike = None) -> tuple[np.ndarray, np.ndarray]:
    """Endpoint arrays of a G(n,m) sample, in colex pair order."""
    n = _check_count(n)
    total = pair_count(n)
    if int(m) != m or not 0 <= m <= total:
        raise InvalidInputError(f"m must lie in [0, {total}] for n={n}, got {m}", field="m", value=m)
    m = int(m)
    if m == 0:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    rng = make_rng(seed)
    draws = rng.integers(0, np.arange(total - m, total, dtype=np.int64) + 1).tolist()
    chosen: set[int] = set()
    for j, t in zip(range(total - m, total), draws):
        chosen.add(j if t in chosen else t)
    idx = np.fromiter(chosen, dtype=np.int64, count=m)
    idx.sort()
    return colex_unrank(idx)


def gnm(n: int, m: int, seed: SeedLike = None) -> Graph:
    """Sample G(n,m): a uniformly random graph with exactly ``m`` edges.

    Raises
    ------
    InvalidInputError
        If ``m`` exceeds ``n(n-1)/2``.
    """
    us, vs = gnm_edges(n, m, seed)
    return Graph.from_arrays(n, us, vs)


def dnp_arcs(n: int, p: float, seed: SeedLike = None) -> tuple[np.ndarray, np.ndarray]:
    n = _check_count(n)
    p = check_probability(p)
    if n < 2:
        empty = np.empty(0, dtype=np.int64)
        return empty, empty
    idx = geometric_indices(n * (n - 1), p, make_rng(seed))
    return ordered_unrank(n, idx)


def dnp(n: int, p: float, seed: SeedLike = None) -> DiGraph:
    """Sample D(n,p): each of the ``n(n-1)`` ordered pairs independently."""
    tails, heads = dnp_arcs(n, p, seed)
    return DiGraph.from_arrays(n, tails, heads)


def multi_exposure(n: int, probs: Sequence[float], seed: int = 0) -> Graph:
    """Union of independent G(n, p_i) draws.

    The marginal edge probability is ``1 - prod(1 - p_i)``. Exposure ``i``
    uses the seed derived from ``(seed, "exposure", i)``.

    Raises
    ------
    InvalidInputError
        If ``probs`` is empty or holds a value outside ``[0, 1]``.
    """
    n = _check_count(n)
    if len(probs) == 0:
        raise InvalidInputError("multi_exposure needs at least one probability", field="probs", value=[])
    ps = [check_probability(p, f"probs[{i}]") for i, p in enumerate(probs)]
    total = pair_count(n)
    idx = np.empty(0, dtype=np.int64)
    for i, p in enumerate(ps):
        layer = geometric_indices(total, p, make_rng(derive_seed(seed, "exposure", i)))
        idx = np.union1d(idx, layer)
    us, vs = lex_unrank(n, idx)
    return Graph.from_arrays(n, us, vs)


def exposure_probability(probs: Sequence[float]) -> float:
    """Marginal edge probability of a multiple exposure."""
    return 1.0 - math.prod(1.0 - p for p in probs)
