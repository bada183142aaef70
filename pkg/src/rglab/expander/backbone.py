"""Sparse backbone: all edges at SMALL vertices, ``d0`` random edges at every other vertex."""

from __future__ import annotations

import logging

import numpy as np

from rglab.expander.audit import small_vertices
from rglab.expander.expander_models import BackboneConfig
from rglab.graph.graph_model import Graph
from rglab.random_models.seeding import make_rng

logger = logging.getLogger(__name__)


def sparse_backbone(g: Graph, cfg: BackboneConfig) -> Graph:
    """Spanning subgraph ``Γ0 = ∪_v E(v)`` of ``g``.

    ``E(v)`` is the full star of ``v`` when ``v`` is SMALL (or has fewer
    than ``d0`` edges) and a uniformly random ``d0``-subset of its edges
    otherwise. Vertices are processed in increasing order, so the result is
    a pure function of ``(g, cfg)``.

    The backbone has at most ``d0 * n`` edges, all of them edges of ``g``,
    and every vertex keeps degree at least ``min(d(v), d0)``.

    Examples
    --------
    >>> from rglab.graph.families import cycle_graph
    >>> sparse_backbone(cycle_graph(8), BackboneConfig(d0=3, seed=1)) == cycle_graph(8)
    True
    """
    rng = make_rng(cfg.seed)
    d0 = cfg.d0
    small = small_vertices(g, d0)
    us: list[np.ndarray] = []
    vs: list[np.ndarray] = []
    for v in range(g.n):
        nbrs = np.asarray(g.neighbors(v), dtype=np.int64)
        if v not in small and nbrs.size > d0:
            nbrs = np.sort(rng.choice(nbrs, size=d0, replace=False))
        us.append(np.full(nbrs.size, v, dtype=np.int64))
        vs.append(nbrs)
    if not us:
        return Graph(0)
    a = np.concatenate(us)
    b = np.concatenate(vs)
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    pairs = np.unique(lo * max(g.n, 1) + hi)
    backbone = Graph.from_arrays(g.n, pairs // g.n, pairs % g.n)
    logger.debug(f"sparse_backbone: {g.edge_count} -> {backbone.edge_count} edges, |SMALL|={len(small)}")
    return backbone
