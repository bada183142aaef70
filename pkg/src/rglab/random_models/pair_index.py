"""
Bijections between vertex pairs and integer indices.

Colexicographic order (used by ``gnm`` and the random graph process)::

    index(i, j) = j (j - 1) / 2 + i          for i < j

so ``(0,1), (0,2), (1,2), (0,3), ...`` map to ``0, 1, 2, 3, ...``. The order
does not depend on ``n``.

Lexicographic order (used by ``gnp`` and the DFS tail consumption)::

    index(i, j) = i (2n - i - 1) / 2 + (j - i - 1)

Ordered pairs ``(u, v)``, ``u != v``, are indexed ``u (n - 1) + r`` where
``r = v`` if ``v < u`` else ``v - 1``.

The unranking functions are vectorised over numpy arrays and correct the
floating point square root with exact integer checks.
"""

from __future__ import annotations

import numpy as np


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def colex_rank(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def colex_unrank(k: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Inverse of :func:`colex_rank` for an array of indices."""
    k = np.asarray(k, dtype=np.int64)
    j = np.floor((1.0 + np.sqrt(1.0 + 8.0 * k.astype(np.float64))) / 2.0).astype(np.int64)
    for _ in range(2):
        j = np.where(j * (j - 1) // 2 > k, j - 1, j)
        j = np.where((j + 1) * j // 2 <= k, j + 1, j)
    i = k - j * (j - 1) // 2
    return i, j


def lex_rank(n: int, i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def lex_unrank(n: int, k: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Inverse of :func:`lex_rank` for an array of indices."""
    k = np.asarray(k, dtype=np.int64)
    b = 2 * n - 1
    disc = np.maximum(float(b) * b - 8.0 * k.astype(np.float64), 0.0)
    i = np.floor((b - np.sqrt(disc)) / 2.0).astype(np.int64)
    i = np.clip(i, 0, max(n - 2, 0))

    def start(x: np.ndarray) -> np.ndarray:
        return x * (2 * n - x - 1) // 2

    for _ in range(2):
        i = np.where(start(i) > k, i - 1, i)
        i = np.where(start(i + 1) <= k, i + 1, i)
    j = k - start(i) + i + 1
    return i, j


def ordered_unrank(n: int, k: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Inverse of the ordered-pair index."""
    k = np.asarray(k, dtype=np.int64)
    u = k // (n - 1)
    r = k % (n - 1)
    v = np.where(r >= u, r + 1, r)
    return u, v
