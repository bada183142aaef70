"""Random vertex sets for refutation-sound sampled checks."""

from __future__ import annotations

from itertools import chain

import numpy as np

from rglab.graph.graph_model import Graph


def grow_set(g: Graph, size: int, rng: np.random.Generator) -> list[int]:
    """A random set of ``size`` vertices grown from a random seed vertex.

    Each step adds a uniformly chosen boundary vertex, so the set is
    connected while the component allows; otherwise it jumps to a random
    outside vertex.
    """
    n = g.n
    size = min(size, n)
    start = int(rng.integers(n))
    members = [start]
    inside = {start}
    boundary = list(g.neighbors(start))
    while len(members) < size:
        if boundary:
            j = int(rng.integers(len(boundary)))
            boundary[j], boundary[-1] = boundary[-1], boundary[j]
            v = boundary.pop()
            if v in inside:
                continue
        else:
            v = int(rng.integers(n))
            if v in inside:
                continue
        members.append(v)
        inside.add(v)
        boundary.extend(w for w in g.neighbors(v) if w not in inside)
    return members


def uniform_set(n: int, size: int, rng: np.random.Generator) -> list[int]:
    return [int(v) for v in rng.choice(n, size=min(size, n), replace=False)]


def neighbor_counts(g: Graph, U: list[int]) -> np.ndarray:
    """``counts[x]`` = number of neighbours of ``x`` in ``U``."""
    flat = np.fromiter(chain.from_iterable(g.neighbors(u) for u in U), dtype=np.int64)
    return np.bincount(flat, minlength=g.n)


def least_attached(g: Graph, U: list[int], size: int) -> tuple[list[int], int]:
    """The ``size`` vertices outside ``U`` with fewest neighbours in ``U``, and their edge count."""
    size = min(size, g.n - len(U))
    counts = neighbor_counts(g, U).astype(np.int64)
    counts[np.asarray(U, dtype=np.int64)] = np.iinfo(np.int64).max
    order = np.argsort(counts, kind="stable")[:size]
    return [int(v) for v in order], int(counts[order].sum())


def most_attached(g: Graph, U: list[int], size: int) -> tuple[list[int], int]:
    """The ``size`` vertices outside ``U`` with most neighbours in ``U``, and their edge count."""
    size = min(size, g.n - len(U))
    counts = neighbor_counts(g, U).astype(np.int64)
    counts[np.asarray(U, dtype=np.int64)] = -1
    order = np.argsort(-counts, kind="stable")[:size]
    return [int(v) for v in order], int(counts[order].sum())
