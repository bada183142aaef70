"""
``(k, alpha)``-expansion checks.

Three modes:

* ``exact`` enumerates every ``U`` with ``|U| <= k`` on adjacency bitmasks.
* ``sampled`` draws grown and uniform sets; it can refute, never prove.
* ``structural`` checks sufficient conditions for an ``(n/4, 2)``-expander:
  minimum degree 2, connectivity, and P2-P5 on the host graph together with
  P7 on the graph itself. Passing them confirms expansion in the sense the
  audit modes allow (P4, P5 and P7 are sampled at large ``n``).
"""

from __future__ import annotations

import itertools
import logging

from rglab.exceptions import CapacityError, InvalidInputError, InvariantViolationError
from rglab.expander.audit import audit_properties, check_big_sets
from rglab.expander.expander_models import (
    AuditThresholds,
    Certainty,
    CheckMode,
    ExpanderQuery,
    ExpanderVerdict,
)
from rglab.expander.set_sampling import grow_set, uniform_set
from rglab.graph.graph_model import Graph
from rglab.graph.graph_ops import connected_components, external_neighborhood
from rglab.random_models.seeding import SeedLike, make_rng
from rglab.settings import get_settings

logger = logging.getLogger(__name__)


def _violates(g: Graph, U: list[int], alpha: float) -> bool:
    return len(external_neighborhood(g, U)) < alpha * len(U)


def _exact(g: Graph, q: ExpanderQuery) -> ExpanderVerdict:
    masks = g.adjacency_masks()
    checked = 0
    for size in range(1, min(q.k, g.n) + 1):
        need = q.alpha * size
        for combo in itertools.combinations(range(g.n), size):
            inside = 0
            reach = 0
            for v in combo:
                inside |= 1 << v
                reach |= masks[v]
            checked += 1
            if (reach & ~inside).bit_count() < need:
                return ExpanderVerdict(
                    holds=False,
                    mode=CheckMode.EXACT,
                    certainty=Certainty.REFUTED,
                    witness=list(combo),
                    sets_checked=checked,
                )
    return ExpanderVerdict(holds=True, mode=CheckMode.EXACT, certainty=Certainty.PROVEN, sets_checked=checked)


def _component_witness(g: Graph, q: ExpanderQuery) -> list[int] | None:
    """The smallest component when it has at most ``k`` vertices (its neighbourhood is empty)."""
    comps = connected_components(g)
    if len(comps) < 2:
        return None
    smallest = min(comps, key=len)
    if len(smallest) <= q.k:
        return sorted(smallest)
    return None


def _sampled(g: Graph, q: ExpanderQuery, samples: int, seed: SeedLike) -> ExpanderVerdict:
    rng = make_rng(seed)
    checked = 0

    def refuted(U: list[int]) -> ExpanderVerdict:
        return ExpanderVerdict(
            holds=False, mode=CheckMode.SAMPLED, certainty=Certainty.REFUTED, witness=sorted(U), sets_checked=checked
        )

    for v in range(g.n):
        checked += 1
        if g.degree(v) < q.alpha:
            return refuted([v])
    witness = _component_witness(g, q)
    if witness is not None:
        checked += 1
        return refuted(witness)
    top = min(q.k, g.n)
    for t in range(samples):
        size = int(rng.integers(1, top + 1))
        U = grow_set(g, size, rng) if t % 2 == 0 else uniform_set(g.n, size, rng)
        checked += 1
        if _violates(g, U, q.alpha):
            return refuted(U)
    return ExpanderVerdict(holds=True, mode=CheckMode.SAMPLED, certainty=Certainty.NOT_REFUTED, sets_checked=checked)


def _structural(
    g: Graph, q: ExpanderQuery, samples: int, seed: SeedLike, host: Graph | None, d0: int
) -> ExpanderVerdict:
    n = g.n
    if q.alpha > 2 or 4 * q.k > n:
        raise InvalidInputError(
            "structural mode only covers k <= n/4 and alpha <= 2", field="q", value=(q.k, q.alpha)
        )
    host = g if host is None else host
    child = [int(x) for x in make_rng(seed).integers(0, 2**62, size=3)]
    sampled = _sampled(g, q, samples, child[0])
    failed: list[str] = []
    if g.min_degree() < 2:
        failed.append("min_degree")
    if len(connected_components(g)) > 1:
        failed.append("connected")
    report = audit_properties(host, d0, seed=child[1], samples=samples)
    failed.extend(name for name in ("P2", "P3", "P4", "P5") if not report.properties[name].holds)
    th = AuditThresholds.for_graph(n, d0)
    p7 = check_big_sets(g, th, "P7", 1, max(8, samples // 10), child[2])
    if not p7.holds:
        failed.append("P7")
    if sampled.certainty is Certainty.REFUTED:
        return sampled.model_copy(update={"mode": CheckMode.STRUCTURAL, "failed_conditions": failed})
    if failed:
        return ExpanderVerdict(
            holds=False,
            mode=CheckMode.STRUCTURAL,
            certainty=Certainty.CONDITIONS_FAILED,
            sets_checked=sampled.sets_checked,
            failed_conditions=failed,
        )
    return ExpanderVerdict(
        holds=True, mode=CheckMode.STRUCTURAL, certainty=Certainty.STRUCTURAL, sets_checked=sampled.sets_checked
    )


def is_expander(
    g: Graph,
    q: ExpanderQuery,
    mode: CheckMode | str = CheckMode.EXACT,
    *,
    samples: int = 2000,
    seed: SeedLike = 0,
    cap: int | None = None,
    host: Graph | None = None,
    d0: int = 4,
) -> ExpanderVerdict:
    """Decide, refute or support ``|N(U)| >= alpha |U|`` for all ``|U| <= k``.

    Parameters
    ----------
    g : Graph
        Graph to check.
    q : ExpanderQuery
        ``k`` and ``alpha``.
    mode : {"exact", "sampled", "structural"}
        See the module docstring.
    samples : int, default 2000
        Random sets drawn in sampled and structural modes.
    seed : int, default 0
        Seed for the random sets.
    cap : int, optional
        Largest ``n`` for exact mode (``LabSettings.expander_exact_cap``).
    host : Graph, optional
        Structural mode: the graph ``g`` was carved from; P2-P5 are checked
        on it. Defaults to ``g``.
    d0 : int, default 4
        Structural mode: SMALL threshold.

    Raises
    ------
    CapacityError
        Exact mode beyond ``cap``.
    InvariantViolationError
        If a confirmed ``(k, 2)``-expander with ``6k > n`` is disconnected.

    Examples
    --------
    >>> from rglab.graph.families import complete_graph, path_graph
    >>> is_expander(complete_graph(9), ExpanderQuery(k=3, alpha=2)).holds
    True
    >>> is_expander(path_graph(6), ExpanderQuery(k=2, alpha=2)).witness
    [0]
    """
    mode = CheckMode(mode)
    if mode is CheckMode.EXACT:
        limit = get_settings().expander_exact_cap if cap is None else cap
        if g.n > limit:
            raise CapacityError(
                f"exact expansion check is limited to n <= {limit}, got n={g.n}",
                operation="is_expander",
                n=g.n,
                cap=limit,
            )
        verdict = _exact(g, q)
    elif mode is CheckMode.SAMPLED:
        verdict = _sampled(g, q, samples, seed)
    elif mode is CheckMode.STRUCTURAL:
        verdict = _structural(g, q, samples, seed, host, d0)
    else:
        raise InvalidInputError(f"unsupported expansion mode {mode.value}", field="mode", value=mode.value)
    confirmed = verdict.certainty in (Certainty.PROVEN, Certainty.STRUCTURAL)
    if confirmed and q.alpha >= 2 and 6 * q.k > g.n and len(connected_components(g)) > 1:
        raise InvariantViolationError(
            "expansion confirmed on a disconnected graph", violations=[f"k={q.k}, alpha={q.alpha}, n={g.n}"]
        )
    logger.debug(f"is_expander({q.k}, {q.alpha}) mode={mode.value}: {verdict.certainty.value}")
    return verdict
