"""
Experiments on the random graph process: hitting times and the backbone pipeline.

Hamiltonicity at ``tau2`` is certified, not decided, at large ``n``: a
validated cycle on the ``tau2`` snapshot proves ``tau_H = tau2``; when no
cycle is found the trial is recorded as uncertified and a later snapshot
carrying a cycle gives the upper bound.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from typing import Any

from rglab.exceptions import InvalidInputError
from rglab.expander.backbone import sparse_backbone
from rglab.expander.expander_models import BackboneConfig
from rglab.experiments.experiment import fraction, mean_of
from rglab.experiments.experiment_models import ExperimentConfig, HittingTimes, StatValue, TrialRecord
from rglab.experiments.properties import Connected, MinDegreeAtLeast, hitting_time
from rglab.graph.graph_model import Graph
from rglab.hamilton.booster_pipeline import augment_with_boosters
from rglab.hamilton.exact import exact_hamiltonian
from rglab.hamilton.rotation_search import rotation_extension_search
from rglab.random_models.edge_process import EdgeProcess, random_process
from rglab.random_models.seeding import derive_seed
from rglab.settings import get_settings

logger = logging.getLogger(__name__)


def check_process_config(config: ExperimentConfig) -> None:
    if config.n < 3:
        raise InvalidInputError(
            f"minimum degree 2 needs at least 3 vertices, got n={config.n}", field="n", value=config.n
        )


def tau2_window(n: int) -> tuple[float, float]:
    """``[n ln n / 2, n ln n]``, where ``tau2`` typically falls."""
    return n * math.log(n) / 2, n * math.log(n)


def _is_hamiltonian(g: Graph, seed: int, budget: int | None) -> bool:
    if g.n <= get_settings().exact_hamiltonian_cap:
        return exact_hamiltonian(g).is_hamiltonian
    return rotation_extension_search(g, budget, seed=seed).is_hamiltonian


def measure_hitting_times(proc: EdgeProcess, seed: int = 0, *, budget: int | None = None) -> HittingTimes:
    """Hitting times of ``delta >= 1``, ``delta >= 2``, connectivity and a Hamiltonicity upper bound.

    Up to ``exact_hamiltonian_cap`` vertices the Hamiltonicity hitting time
    is exact (binary search with the exact oracle). Beyond it, snapshots at
    ``tau2 + n, tau2 + 3n, tau2 + 7n, ...`` are searched until a cycle is
    found; the complete graph always has one.
    """
    n = proc.n
    if n < 3:
        raise InvalidInputError(f"Hamiltonicity needs n >= 3, got {n}", field="n", value=n)
    tau1 = hitting_time(proc, MinDegreeAtLeast(1))
    tau2 = hitting_time(proc, MinDegreeAtLeast(2))
    tau_c = hitting_time(proc, Connected())
    total = proc.total_pairs
    exact = n <= get_settings().exact_hamiltonian_cap
    if _is_hamiltonian(proc.snapshot(tau2), derive_seed(seed, "tau2"), budget):
        upper = tau2
    elif exact:
        lo, hi = tau2 + 1, total
        while lo < hi:
            mid = (lo + hi) // 2
            if exact_hamiltonian(proc.snapshot(mid)).is_hamiltonian:
                hi = mid
            else:
                lo = mid + 1
        upper = lo
    else:
        step = n
        upper = tau2
        attempt = 0
        while True:
            upper = min(total, upper + step)
            attempt += 1
            if upper == total or _is_hamiltonian(proc.snapshot(upper), derive_seed(seed, "later", attempt), budget):
                break
            step *= 2
        logger.debug(f"no cycle at tau2={tau2}; first certified snapshot {upper}")
    return HittingTimes(
        tau_min_degree_1=tau1,
        tau_min_degree_2=tau2,
        tau_connectivity=tau_c,
        tau_hamiltonian_upper=upper,
        certified_equal=upper == tau2,
    )


def hitting_time_trial(config: ExperimentConfig, params: dict[str, Any], seed: int) -> tuple[dict[str, StatValue], bool]:
    proc = random_process(config.n, seed)
    times = measure_hitting_times(proc, seed, budget=config.budget)
    m1, m2 = tau2_window(config.n)
    stats: dict[str, StatValue] = dict(times.model_dump())
    stats["tau2_in_window"] = m1 <= times.tau_min_degree_2 <= m2
    stats["upper_not_before_tau2"] = times.tau_hamiltonian_upper >= times.tau_min_degree_2
    stats["solver"] = "exact" if config.n <= get_settings().exact_hamiltonian_cap else "rotation"
    logger.debug(f"hitting-time trial seed={seed}: {times!r}")
    return stats, times.certified_equal


def summarize_hitting_times(config: ExperimentConfig, records: Sequence[TrialRecord]) -> dict[str, float]:
    return {
        "certified_fraction": fraction(records, "certified_equal"),
        "window_fraction": fraction(records, "tau2_in_window"),
        "order_fraction": fraction(records, "upper_not_before_tau2"),
        "connected_at_tau1_fraction": sum(
            1 for r in records if r.stats["tau_connectivity"] == r.stats["tau_min_degree_1"]
        )
        / max(1, len(records)),
        "mean_tau_min_degree_2": mean_of(records, "tau_min_degree_2"),
        "mean_tau_hamiltonian_upper": mean_of(records, "tau_hamiltonian_upper"),
    }


def backbone_trial(config: ExperimentConfig, params: dict[str, Any], seed: int) -> tuple[dict[str, StatValue], bool]:
    n = config.n
    proc = random_process(n, seed)
    tau2 = hitting_time(proc, MinDegreeAtLeast(2))
    host = proc.snapshot(tau2)
    backbone = sparse_backbone(host, BackboneConfig(d0=config.d0, seed=derive_seed(seed, "backbone")))
    result = augment_with_boosters(
        backbone, host, seed=derive_seed(seed, "boosters"), budget=config.budget, max_boosters=n
    )
    within = backbone.edge_count <= config.d0 * n
    stats: dict[str, StatValue] = {
        "tau_min_degree_2": tau2,
        "host_edges": host.edge_count,
        "backbone_edges": backbone.edge_count,
        "backbone_within_bound": within,
        "hamiltonian": result.is_hamiltonian,
        "boosters_added": len(result.added_edges),
        "boosters_within_bound": len(result.added_edges) <= n,
        "rotations": result.stats.rotations,
    }
    logger.debug(f"backbone trial seed={seed}: {backbone.edge_count} backbone edges, {result.status.value}")
    return stats, result.is_hamiltonian and within


def summarize_backbone(config: ExperimentConfig, records: Sequence[TrialRecord]) -> dict[str, float]:
    return {
        "success_fraction": fraction(records, "hamiltonian"),
        "bound_fraction": fraction(records, "backbone_within_bound"),
        "booster_bound_fraction": fraction(records, "boosters_within_bound"),
        "mean_backbone_edges": mean_of(records, "backbone_edges"),
        "mean_boosters_added": mean_of(records, "boosters_added"),
    }


