"""
Booster augmentation: turn a sparse backbone into a Hamiltonian subgraph of its host.

Starting from ``Γ0 = backbone``, each round checks whether the current graph
is Hamiltonian. If not, a booster of the current graph is picked among the
host edges it does not use yet and added. Each booster either closes a
Hamilton cycle or lengthens the longest path, so at most ``n`` rounds are
needed whenever boosters keep existing in the host.

For ``n`` within the exact caps the rounds use the exact oracles and the
double closure of an exact longest path; above them the rotation search
carries its best path from round to round.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Iterator

from rglab.exceptions import InvalidInputError
from rglab.graph.graph_model import Graph, Path
from rglab.hamilton.exact import exact_hamiltonian, longest_path_witness
from rglab.hamilton.ham_models import HamResult, HamStats, HamStatus, certify_cycle
from rglab.hamilton.rotation_search import RotationSearch, default_budget
from rglab.posa.boosters import double_closure_pairs
from rglab.posa.closure import rotation_closure
from rglab.random_models.seeding import SeedLike, make_rng
from rglab.settings import get_settings

logger = logging.getLogger(__name__)

Pair = tuple[int, int]

ROUND_RESTARTS = 3
SECOND_LEVEL_LIMIT = 64


def _pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


def _check_backbone(backbone: Graph, host: Graph) -> None:
    if backbone.n != host.n:
        raise InvalidInputError(
            f"backbone has n={backbone.n} but host has n={host.n}", field="backbone", value=backbone.n
        )
    for u, v in backbone.edges():
        if not host.has_edge(u, v):
            raise InvalidInputError(f"backbone edge {u}-{v} is not a host edge", field="backbone", value=(u, v))


def _exact_round_booster(current: Graph, host: Graph, P: Path) -> Pair | None:
    """First host booster of ``current`` found around the longest path ``P``."""
    on_path = frozenset(P.vertices)
    closure = rotation_closure(current, P)
    for r in [P.end, *sorted(closure.R - {P.end})]:
        for w in host.neighbors(r):
            if w not in on_path:
                return _pair(r, w)
    spanning = len(P) == current.n
    escapes = any(w not in on_path for v in on_path for w in current.neighbors(v))
    if not (spanning or escapes):
        return None
    for u, v in double_closure_pairs(current, P):
        if host.has_edge(u, v) and not current.has_edge(u, v):
            return (u, v)
    return None


def _augment_exact(backbone: Graph, host: Graph, limit: int, stats: HamStats) -> tuple[list[int] | None, list[Pair]]:
    current = backbone
    added: list[Pair] = []
    while True:
        res = exact_hamiltonian(current)
        stats.nodes += res.stats.nodes
        if res.cycle is not None:
            return res.cycle, added
        if len(added) >= limit:
            return None, added
        P = longest_path_witness(current)
        if P is None:
            return None, added
        e = _exact_round_booster(current, host, P)
        if e is None:
            logger.warning(f"no host booster for a graph with {current.edge_count} edges; stopping")
            return None, added
        added.append(e)
        stats.boosters_added += 1
        logger.debug(f"booster {e} added (longest path {P.length})")
        current = current.with_edges([e])


def _host_boosters(search: RotationSearch, host: Graph, path: list[int]) -> Iterator[tuple[Pair, list[int]]]:
    """Candidate boosters with the path or cycle each one produces."""
    n = search.n
    on_path = bytearray(n)
    for v in path:
        on_path[v] = 1
    first = list(search.closure_states(list(path)))
    for cur in first:
        r = cur[-1]
        for w in host.neighbors(r):
            if not on_path[w] and w not in search.sets[r]:
                yield _pair(r, w), cur + [w]
    for cur in first[:SECOND_LEVEL_LIMIT]:
        for cur2 in search.closure_states(cur[::-1]):
            s, r = cur2[0], cur2[-1]
            if len(cur2) < 3 or r in search.sets[s] or not host.has_edge(s, r):
                continue
            if len(cur2) == n:
                yield _pair(s, r), cur2
                continue
            opened = search.open_cycle(cur2, on_path)
            if opened is not None:
                yield _pair(s, r), opened


def _augment_search(
    backbone: Graph, host: Graph, limit: int, stats: HamStats, seed: SeedLike, budget: int | None
) -> tuple[list[int] | None, list[Pair]]:
    n = backbone.n
    search = RotationSearch(n, [backbone.neighbors(v) for v in range(n)], make_rng(seed), stats)
    round_budget = default_budget(n) if budget is None else budget
    added: list[Pair] = []
    start: list[int] | None = None
    while True:
        cycle = search.run(stats.rotations + round_budget, ROUND_RESTARTS, start)
        if cycle is not None:
            return cycle, added
        if len(added) >= limit:
            return None, added
        found = next(_host_boosters(search, host, search.best), None)
        if found is None:
            logger.warning(f"no host booster around a {len(search.best)}-vertex path; stopping")
            return None, added
        e, start = found
        search.add_edge(*e)
        added.append(e)
        stats.boosters_added += 1
        logger.debug(f"booster {e} added, path now {len(start)}/{n}")


def augment_with_boosters(
    backbone: Graph,
    host: Graph,
    seed: SeedLike = None,
    *,
    budget: int | None = None,
    max_boosters: int | None = None,
) -> HamResult:
    """Add host edges to ``backbone`` one booster at a time until it is Hamiltonian.

    Parameters
    ----------
    backbone : Graph
        Starting subgraph ``Γ0``.
    host : Graph
        Graph the boosters are drawn from; must contain every backbone edge.
    seed : int or Generator, optional
        Seed for the rotation search restarts.
    budget : int, optional
        Rotations per round for large ``n`` (default ``50 n ln n``).
    max_boosters : int, optional
        Booster limit, ``n`` by default.

    Returns
    -------
    HamResult
        ``hamiltonian`` with a cycle certified against ``host`` and the
        added edges in order, or ``not_found`` when no booster is available
        or the limit is reached.

    Raises
    ------
    InvalidInputError
        If the backbone is not a subgraph of ``host``.
    """
    _check_backbone(backbone, host)
    started = time.perf_counter()
    n = backbone.n
    stats = HamStats()
    limit = n if max_boosters is None else max_boosters
    cycle: list[int] | None = None
    added: list[Pair] = []
    if n >= 3:
        settings = get_settings()
        if n <= min(settings.longest_path_cap, settings.exact_hamiltonian_cap):
            cycle, added = _augment_exact(backbone, host, limit, stats)
        else:
            cycle, added = _augment_search(backbone, host, limit, stats, seed, budget)
    stats.elapsed_seconds = time.perf_counter() - started
    if cycle is None:
        return HamResult(status=HamStatus.NOT_FOUND, method="booster-pipeline", n=n, added_edges=added, stats=stats)
    return HamResult(
        status=HamStatus.HAMILTONIAN,
        method="booster-pipeline",
        n=n,
        cycle=certify_cycle(cycle, host),
        added_edges=added,
        stats=stats,
    )
