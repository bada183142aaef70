"""
Booster enumeration.

A booster of ``g`` is a non-edge whose addition makes ``g`` Hamiltonian or
lengthens its longest path. Two modes:

* ``exact``: test every non-edge with the subset-DP oracles (small ``n``).
* ``closure``: double rotation closure on a longest path. Rotating ``P``
  with ``x0`` fixed gives ends ``R``; for every ``y`` in ``R`` the witness
  path is reversed so ``y`` is the fixed start and rotated again. Every
  pair ``(y, z)`` found this way closes a cycle on ``V(P)`` once added,
  which is a Hamilton cycle when ``P`` spans ``g``. When ``P`` is a longest
  path the cycle opens into a longer path through any edge leaving ``V(P)``.
"""

from __future__ import annotations

import logging
from enum import Enum

from rglab.exceptions import CapacityError
from rglab.graph.graph_model import Graph, Path
from rglab.posa.closure import rotation_closure
from rglab.settings import get_settings

logger = logging.getLogger(__name__)

Pair = tuple[int, int]


class BoosterMode(str, Enum):
    EXACT = "exact"
    CLOSURE = "closure"


def _pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


def _exact_boosters(g: Graph, cap: int) -> frozenset[Pair]:
    from rglab.hamilton.exact import has_hamiltonian_cycle_dp, longest_path_dp

    if g.n > cap:
        raise CapacityError(
            f"exact booster enumeration is limited to n <= {cap}, got n={g.n}",
            operation="boosters",
            n=g.n,
            cap=cap,
        )
    masks = g.adjacency_masks()
    non_edges = list(g.non_edges())
    if has_hamiltonian_cycle_dp(masks):
        return frozenset(non_edges)
    base, _ = longest_path_dp(masks)
    out: set[Pair] = set()
    for u, v in non_edges:
        trial = list(masks)
        trial[u] |= 1 << v
        trial[v] |= 1 << u
        if has_hamiltonian_cycle_dp(trial):
            out.add((u, v))
        elif base < g.n - 1 and longest_path_dp(trial)[0] > base:
            out.add((u, v))
    return frozenset(out)


def double_closure_pairs(g: Graph, P: Path) -> list[Pair]:
    """Pairs ``(y, z)`` joined by rotation witnesses, in discovery order.

    ``y`` runs over the closure of ``P`` (``P.end`` first, then sorted);
    ``z`` over the closure of the reversed witness for ``y``, sorted. Pairs
    are deduplicated as unordered pairs and may include edges of ``g``.
    """
    first = rotation_closure(g, P)
    seen: set[Pair] = set()
    out: list[Pair] = []
    for y in [P.end, *sorted(first.R - {P.end})]:
        second = rotation_closure(g, first.witness(y).reversed())
        for z in sorted(second.R):
            pair = _pair(y, z)
            if pair not in seen:
                seen.add(pair)
                out.append(pair)
    return out


def _leaves_path(g: Graph, vertices: frozenset[int]) -> bool:
    return any(w not in vertices for v in vertices for w in g.neighbors(v))


def _closure_boosters(g: Graph, P: Path | None) -> frozenset[Pair]:
    longest = P is None
    if P is None:
        from rglab.hamilton.exact import longest_path_witness

        P = longest_path_witness(g)
        if P is None:
            return frozenset()
    P.validate(g)
    if len(P) < 2:
        return frozenset()
    spanning = len(P) == g.n
    # off-path escapes certify a pair only for a longest P
    escapes = longest and _leaves_path(g, frozenset(P.vertices))
    if not (spanning or escapes):
        return frozenset()
    out: set[Pair] = set()
    for u, v in double_closure_pairs(g, P):
        if g.has_edge(u, v):
            if spanning and len(P) >= 3:
                logger.debug("closure found a Hamilton cycle; every non-edge is a booster")
                return frozenset(g.non_edges())
            continue
        out.add((u, v))
    return frozenset(out)


def boosters(
    g: Graph,
    mode: BoosterMode | str = BoosterMode.EXACT,
    *,
    path: Path | None = None,
    cap: int | None = None,
) -> frozenset[Pair]:
    """Boosters of ``g`` as ``(u, v)`` pairs with ``u < v``.

    Parameters
    ----------
    g : Graph
        The graph.
    mode : BoosterMode, default EXACT
        ``exact`` enumerates every booster; ``closure`` returns the pairs
        certified by the double rotation closure.
    path : Path, optional
        Closure mode only: the longest path to rotate. Computed exactly when
        omitted (which caps ``n`` at ``LabSettings.longest_path_cap``). With a
        caller-supplied path that is not longest, pairs are certified only
        when ``path`` spans ``g``.
    cap : int, optional
        Exact mode cap (``LabSettings.booster_exact_cap``).

    Raises
    ------
    CapacityError
        If exact mode is asked beyond ``cap``.

    Examples
    --------
    >>> from rglab.graph.families import path_graph
    >>> sorted(boosters(path_graph(4)))
    [(0, 3)]
    """
    mode = BoosterMode(mode)
    if mode is BoosterMode.EXACT:
        return _exact_boosters(g, get_settings().booster_exact_cap if cap is None else cap)
    return _closure_boosters(g, path)
