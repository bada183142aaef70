"""
The random graph process.

An :class:`EdgeProcess` is a uniformly random ordering of all
``N = n(n-1)/2`` pairs; its prefix of length ``i`` is the graph ``G_i``.
Pairs are stored as colex indices (see :mod:`rglab.random_models.pair_index`).
"""

from __future__ import annotations

import numpy as np

from rglab.exceptions import InvalidInputError
from rglab.graph.graph_model import Graph
from rglab.random_models.pair_index import colex_unrank, pair_count
from rglab.random_models.seeding import SeedLike, make_rng


class EdgeProcess:
    """Nested graph sequence ``G_0 ⊂ G_1 ⊂ ... ⊂ G_N``.

    Attributes
    ----------
    n : int
        Vertex count.
    order : numpy.ndarray
        Colex pair indices; ``order[i]`` is the ``(i+1)``-th edge added.
    """

    __slots__ = ("n", "order", "_us", "_vs")

    def __init__(self, n: int, order: np.ndarray) -> None:
        if n < 2:
            raise InvalidInputError(f"a graph process needs n >= 2, got {n}", field="n", value=n)
        order = np.asarray(order, dtype=np.int64)
        if order.shape != (pair_count(n),):
            raise InvalidInputError(
                f"order must list all {pair_count(n)} pairs, got {order.size}", field="order", value=order.size
            )
        if order.size and (order.min() < 0 or order.max() >= order.size or np.unique(order).size != order.size):
            raise InvalidInputError(
                "order must be a permutation of the pair indices 0 .. N-1", field="order", value=order.size
            )
        self.n = int(n)
        self.order = order
        self._us, self._vs = colex_unrank(order)

    @property
    def total_pairs(self) -> int:
        return int(self.order.size)

    def is_permutation(self) -> bool:
        return bool(np.array_equal(np.sort(self.order), np.arange(self.order.size)))

    def edge(self, i: int) -> tuple[int, int]:
        """The ``i``-th edge added (1-based, so ``G_i`` is the first to contain it)."""
        if not 1 <= i <= self.total_pairs:
            raise InvalidInputError(f"edge index must lie in [1, {self.total_pairs}]", field="i", value=i)
        return int(self._us[i - 1]), int(self._vs[i - 1])

    def edge_arrays(self, m: int) -> tuple[np.ndarray, np.ndarray]:
        """Endpoint arrays of the first ``m`` edges."""
        self._check_m(m)
        return self._us[:m], self._vs[:m]

    def snapshot(self, m: int) -> Graph:
        """``G_m``: the graph formed by the first ``m`` edges."""
        us, vs = self.edge_arrays(m)
        return Graph.from_arrays(self.n, us, vs)

    def _check_m(self, m: int) -> None:
        if int(m) != m or not 0 <= m <= self.total_pairs:
            raise InvalidInputError(f"m must lie in [0, {self.total_pairs}], got {m}", field="m", value=m)

    def __repr__(self) -> str:
        return f"EdgeProcess(n={self.n}, N={self.total_pairs})"


def random_process(n: int, seed: SeedLike = None) -> EdgeProcess:
    """Draw a uniform ordering of all pairs (Fisher-Yates via ``Generator.permutation``)."""
    if n < 2:
        raise InvalidInputError(f"a graph process needs n >= 2, got {n}", field="n", value=n)
    rng = make_rng(seed)
    return EdgeProcess(n, rng.permutation(pair_count(n)))


def snapshot(proc: EdgeProcess, m: int) -> Graph:
    """Graph with exactly the first ``m`` edges of ``proc``."""
    return proc.snapshot(m)
