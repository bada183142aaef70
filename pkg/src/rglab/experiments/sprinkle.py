"""Close a long path into a cycle with a second, sparse G(n, p2) layer."""

from __future__ import annotations

import logging
import math

import numpy as np

from rglab.exceptions import InvalidInputError
from rglab.graph.graph_model import Cycle, Path
from rglab.random_models.bernoulli_stream import check_probability
from rglab.random_models.generators import geometric_indices
from rglab.random_models.seeding import SeedLike, make_rng

logger = logging.getLogger(__name__)


def default_window(n: int) -> int:
    return max(1, math.ceil(n ** (2 / 3)))


def sprinkle_probability(p: float, p2: float) -> float:
    """``p1`` with ``1 - p = (1 - p1)(1 - p2)``, so that G(n,p1) ∪ G(n,p2) ~ G(n,p)."""
    check_probability(p)
    check_probability(p2, "p2")
    if p2 > p:
        raise InvalidInputError(f"p2 must not exceed p, got p2={p2} > p={p}", field="p2", value=p2)
    if p2 == 1.0:
        return 0.0
    return 1.0 - (1.0 - p) / (1.0 - p2)


def sprinkle_cycle(
    path: Path,
    n: int,
    p2: float,
    seed: SeedLike = None,
    window: int | None = None,
) -> Cycle | None:
    """Longest cycle closed by a sprinkled edge between the two ends of ``path``.

    Only pairs ``(x_i, x_j)`` with ``i`` among the first ``window`` and
    ``j`` among the last ``window`` path positions are exposed, each present
    independently with probability ``p2``. The window shrinks to half the
    path when the path is shorter than ``2 * window``. Pairs already adjacent
    on the path are ignored.

    Returns
    -------
    Cycle or None
        ``x_i ... x_j`` for the present pair maximising ``j - i``.
    """
    check_probability(p2, "p2")
    if any(not 0 <= v < n for v in path):
        raise InvalidInputError("path vertices must lie in [0, n)", field="path", value=repr(path))
    w = default_window(n) if window is None else window
    if w < 1:
        raise InvalidInputError(f"window must be positive, got {w}", field="window", value=w)
    h = len(path)
    w = min(w, h // 2)
    if w < 1:
        return None
    rng = make_rng(seed)
    hits = geometric_indices(w * w, p2, rng)
    if hits.size == 0:
        return None
    i = hits // w
    j = h - w + hits % w
    span = np.where(j - i >= 2, j - i, -1)
    best = int(np.argmax(span))
    if span[best] < 0:
        return None
    lo, hi = int(i[best]), int(j[best])
    logger.debug(f"sprinkled {hits.size} edges, longest closes positions {lo}..{hi} of {h}")
    return Cycle(path.vertices[lo : hi + 1])
