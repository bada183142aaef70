"""
Threshold sweeps and the tail-bound table.

Sweeps run at ``p = (ln n + ln ln n + omega) / n`` (or the matching
``m = round(N p)`` for G(n,m)) for every offset ``omega`` of the config,
``trials`` graphs per model and offset.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from typing import Any

import numpy as np

from rglab.exceptions import InvalidInputError
from rglab.experiments.bounds import DEFAULT_TAIL_GRID, check_binomial_estimates, tail_point
from rglab.experiments.experiment import fraction
from rglab.experiments.experiment_models import ExperimentConfig, StatValue, TrialRecord
from rglab.hamilton.exact import exact_hamiltonian
from rglab.hamilton.rotation_search import rotation_extension_search
from rglab.random_models.generators import gnm, gnm_edges, gnp, gnp_edges
from rglab.random_models.pair_index import pair_count
from rglab.random_models.seeding import make_rng
from rglab.settings import get_settings

logger = logging.getLogger(__name__)

_SAMPLE_CHUNK = 250_000


def threshold_probability(n: int, omega: float) -> float:
    """``(ln n + ln ln n + omega) / n`` clipped to ``[0, 1]``."""
    return min(1.0, max(0.0, (math.log(n) + math.log(math.log(n)) + omega) / n))


def check_sweep_config(config: ExperimentConfig) -> None:
    if config.n < 3:
        raise InvalidInputError(f"threshold sweeps need n >= 3, got {config.n}", field="n", value=config.n)
    if not config.offsets:
        raise InvalidInputError("at least one offset is required", field="offsets", value=config.offsets)


def sweep_plan(config: ExperimentConfig) -> list[dict[str, Any]]:
    plan = []
    for model in config.models:
        for omega in config.offsets:
            p = threshold_probability(config.n, omega)
            m = round(pair_count(config.n) * p)
            for _ in range(config.trials):
                plan.append({"model": model, "omega": omega, "p": p, "m": m})
    return plan


def _cell(model: str, omega: float) -> str:
    return f"{model},{omega:+g}"


def min_degree_trial(config: ExperimentConfig, params: dict[str, Any], seed: int) -> tuple[dict[str, StatValue], None]:
    n = config.n
    if params["model"] == "gnp":
        us, vs = gnp_edges(n, params["p"], seed)
    else:
        us, vs = gnm_edges(n, params["m"], seed)
    degrees = np.bincount(np.concatenate([us, vs]), minlength=n)
    delta = int(degrees.min())
    return {"min_degree": delta, "delta_ge2": delta >= 2}, None


def summarize_min_degree(config: ExperimentConfig, records: Sequence[TrialRecord]) -> dict[str, float]:
    metrics: dict[str, float] = {}
    top, bottom = max(config.offsets), min(config.offsets)
    at_top: list[float] = []
    at_bottom: list[float] = []
    for model in config.models:
        for omega in config.offsets:
            cell = [r for r in records if r.params["model"] == model and r.params["omega"] == omega]
            share = fraction(cell, "delta_ge2")
            metrics[f"delta_ge2[{_cell(model, omega)}]"] = share
            if omega == top:
                at_top.append(share)
            if omega == bottom:
                at_bottom.append(1.0 - share)
    metrics["delta_ge2_at_max_offset"] = min(at_top)
    metrics["delta_le1_at_min_offset"] = min(at_bottom)
    return metrics


def ham_threshold_trial(config: ExperimentConfig, params: dict[str, Any], seed: int) -> tuple[dict[str, StatValue], bool]:
    n = config.n
    g = gnp(n, params["p"], seed) if params["model"] == "gnp" else gnm(n, params["m"], seed)
    if n <= get_settings().exact_hamiltonian_cap:
        result = exact_hamiltonian(g)
    else:
        result = rotation_extension_search(g, config.budget, seed=seed)
    return {"min_degree": g.min_degree(), "hamiltonian": result.is_hamiltonian, "solver": result.method}, (
        result.is_hamiltonian
    )


def summarize_ham_threshold(config: ExperimentConfig, records: Sequence[TrialRecord]) -> dict[str, float]:
    metrics: dict[str, float] = {}
    top = max(config.offsets)
    at_top: list[float] = []
    for model in config.models:
        for omega in config.offsets:
            cell = [r for r in records if r.params["model"] == model and r.params["omega"] == omega]
            share = fraction(cell, "hamiltonian")
            metrics[f"hamiltonian[{_cell(model, omega)}]"] = share
            if omega == top:
                at_top.append(share)
    metrics["hamiltonian_at_max_offset"] = min(at_top)
    return metrics


def bounds_plan(config: ExperimentConfig) -> list[dict[str, Any]]:
    return [{"bin_n": n, "bin_p": p, "a": a} for (n, p, a) in DEFAULT_TAIL_GRID for _ in range(config.trials)]


def _empirical_tails(n: int, p: float, a: float, samples: int, seed: int) -> tuple[float, float, float]:
    rng = make_rng(seed)
    mu = n * p
    k = max(1, math.ceil((1 + a) * mu))
    lower = upper = trivial = 0
    remaining = samples
    while remaining:
        size = min(remaining, _SAMPLE_CHUNK)
        x = rng.binomial(n, p, size=size)
        lower += int(np.count_nonzero(x < (1 - a) * mu))
        upper += int(np.count_nonzero(x > (1 + a) * mu))
        trivial += int(np.count_nonzero(x >= k))
        remaining -= size
    return lower / samples, upper / samples, trivial / samples


def bounds_trial(config: ExperimentConfig, params: dict[str, Any], seed: int) -> tuple[dict[str, StatValue], bool]:
    n, p, a = int(params["bin_n"]), float(params["bin_p"]), float(params["a"])
    point = tail_point(n, p, a)
    lower, upper, trivial = _empirical_tails(n, p, a, config.samples, seed)
    ok = {
        "lower_ok": lower <= point.bound_lower and point.exact_lower <= point.bound_lower,
        "upper_ok": upper <= point.bound_upper and point.exact_upper <= point.bound_upper,
        "trivial_ok": trivial <= point.bound_trivial and point.exact_trivial <= point.bound_trivial,
    }
    stats: dict[str, StatValue] = {
        "exact_lower": point.exact_lower,
        "bound_lower": point.bound_lower,
        "empirical_lower": lower,
        "exact_upper": point.exact_upper,
        "bound_upper": point.bound_upper,
        "empirical_upper": upper,
        "exact_trivial": point.exact_trivial,
        "bound_trivial": point.bound_trivial,
        "empirical_trivial": trivial,
        **ok,
    }
    return stats, all(ok.values())


def summarize_bounds(config: ExperimentConfig, records: Sequence[TrialRecord]) -> dict[str, float]:
    within = sum(1 for r in records if r.passed) / max(1, len(records))
    violations = check_binomial_estimates(60)
    if violations:
        logger.warning(f"binomial estimates: {len(violations)} violations, first: {violations[0]}")
    return {"within_bounds_fraction": within, "binomial_estimates_ok": 0.0 if violations else 1.0}


