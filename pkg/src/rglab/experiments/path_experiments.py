"""
Long paths, small components and the Bernoulli-stream statements.

Every trial runs :func:`~rglab.dfs.dfs_engine.online_dfs` without
materialising the graph, so the cost is proportional to the number of
queries and revealed edges, not to ``n^2``.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from typing import Any

import numpy as np

from rglab.dfs.dfs_engine import online_dfs
from rglab.exceptions import InvalidInputError
from rglab.experiments.experiment import fraction, max_of, mean_of, min_of
from rglab.experiments.experiment_models import ExperimentConfig, StatValue, TrialRecord
from rglab.experiments.sprinkle import sprinkle_cycle, sprinkle_probability
from rglab.random_models.bernoulli_stream import BernoulliStream
from rglab.random_models.pair_index import pair_count
from rglab.random_models.seeding import derive_seed
from rglab.settings import get_settings

logger = logging.getLogger(__name__)

SMALL_EPSILON = 0.3
DEFAULT_EPSILON = 0.2


def epsilon_of(config: ExperimentConfig, default: float = DEFAULT_EPSILON) -> float:
    return default if config.epsilon is None else config.epsilon


def warn_large_epsilon(config: ExperimentConfig, limit: float = SMALL_EPSILON) -> None:
    eps = epsilon_of(config)
    if eps > limit:
        logger.warning(f"{config.name}: epsilon={eps} is outside the small regime (<= {limit}); results are indicative")


def check_path_config(config: ExperimentConfig) -> None:
    if config.n < 2:
        raise InvalidInputError(f"need n >= 2, got {config.n}", field="n", value=config.n)
    warn_large_epsilon(config)


def path_threshold(n: int, epsilon: float) -> float:
    """``eps^2 n / 5`` vertices."""
    return epsilon * epsilon * n / 5


def component_bound(n: int, epsilon: float) -> float:
    """``(7 / eps^2) ln n`` vertices."""
    return 7 / (epsilon * epsilon) * math.log(n)


def supercritical_trial(config: ExperimentConfig, params: dict[str, Any], seed: int) -> tuple[dict[str, StatValue], bool]:
    n, eps = config.n, epsilon_of(config)
    p = min(1.0, (1 + eps) / n)
    _, trace = online_dfs(n, BernoulliStream(p, seed), materialize=False)
    threshold = path_threshold(n, eps)
    meets = trace.max_u >= threshold
    stats: dict[str, StatValue] = {
        "p": p,
        "path_vertices": trace.max_u,
        "path_threshold": threshold,
        "meets_threshold": meets,
        "largest_component": trace.largest_component(),
    }
    return stats, meets


def summarize_supercritical(config: ExperimentConfig, records: Sequence[TrialRecord]) -> dict[str, float]:
    return {
        "path_fraction": fraction(records, "meets_threshold"),
        "min_path_vertices": min_of(records, "path_vertices"),
        "mean_path_vertices": mean_of(records, "path_vertices"),
        "mean_largest_component": mean_of(records, "largest_component"),
    }


def subcritical_trial(config: ExperimentConfig, params: dict[str, Any], seed: int) -> tuple[dict[str, StatValue], bool]:
    n, eps = config.n, epsilon_of(config)
    p = max(0.0, (1 - eps) / n)
    _, trace = online_dfs(n, BernoulliStream(p, seed), materialize=False)
    bound = component_bound(n, eps)
    largest = trace.largest_component()
    within = largest <= bound
    stats: dict[str, StatValue] = {
        "p": p,
        "largest_component": largest,
        "component_bound": bound,
        "within_bound": within,
    }
    return stats, within


def summarize_subcritical(config: ExperimentConfig, records: Sequence[TrialRecord]) -> dict[str, float]:
    return {
        "component_fraction": fraction(records, "within_bound"),
        "max_largest_component": max_of(records, "largest_component"),
        "mean_largest_component": mean_of(records, "largest_component"),
    }


def spanning_constant(epsilon: float) -> float:
    """``C = 5 ln(1/eps) / eps``; ``p = C / n`` gives a path of length ``(1 - eps) n``.

    Examples
    --------
    >>> round(spanning_constant(0.1), 2)
    115.13
    """
    if not 0 < epsilon < 1:
        raise InvalidInputError(f"epsilon must lie in (0, 1), got {epsilon}", field="epsilon", value=epsilon)
    return 5 * math.log(1 / epsilon) / epsilon


def check_spanning_config(config: ExperimentConfig) -> None:
    if config.n < 2:
        raise InvalidInputError(f"need n >= 2, got {config.n}", field="n", value=config.n)
    eps = epsilon_of(config, 0.1)
    if eps > 0.5:
        logger.warning(f"nearly-spanning: epsilon={eps} is large; the fraction is reported, not asserted")


def nearly_spanning_targets(config: ExperimentConfig) -> dict[str, float]:
    if epsilon_of(config, 0.1) > 0.5:
        return {}
    return dict(get_settings().acceptance_targets.get("nearly-spanning", {}))


def nearly_spanning_trial(
    config: ExperimentConfig, params: dict[str, Any], seed: int
) -> tuple[dict[str, StatValue], bool]:
    n, eps = config.n, epsilon_of(config, 0.1)
    c = spanning_constant(eps)
    p = min(1.0, c / n)
    _, trace = online_dfs(n, BernoulliStream(p, seed), directed=config.directed, materialize=False)
    length = max(0, trace.max_u - 1)
    threshold = (1 - eps) * n
    meets = length >= threshold
    stats: dict[str, StatValue] = {
        "p": p,
        "constant": c,
        "directed": config.directed,
        "path_length": length,
        "path_threshold": threshold,
        "meets_threshold": meets,
    }
    return stats, meets


def summarize_nearly_spanning(config: ExperimentConfig, records: Sequence[TrialRecord]) -> dict[str, float]:
    return {
        "path_fraction": fraction(records, "meets_threshold"),
        "min_path_length": min_of(records, "path_length"),
        "mean_path_length": mean_of(records, "path_length"),
    }


def sprinkled_cycle_trial(
    config: ExperimentConfig, params: dict[str, Any], seed: int
) -> tuple[dict[str, StatValue], bool]:
    n, eps = config.n, epsilon_of(config)
    p = min(1.0, (1 + eps) / n)
    p2 = min(p, eps / (2 * n))
    p1 = sprinkle_probability(p, p2)
    _, trace = online_dfs(n, BernoulliStream(p1, derive_seed(seed, "bulk")), materialize=False)
    path = trace.max_u_path
    cycle = None
    if path is not None:
        cycle = sprinkle_cycle(path, n, p2, seed=derive_seed(seed, "sprinkle"), window=config.window)
    length = 0 if cycle is None else cycle.length
    threshold = eps * eps * n / 10
    meets = length >= threshold
    stats: dict[str, StatValue] = {
        "p1": p1,
        "p2": p2,
        "path_vertices": trace.max_u,
        "cycle_length": length,
        "cycle_threshold": threshold,
        "meets_threshold": meets,
    }
    return stats, meets


def summarize_sprinkled_cycle(config: ExperimentConfig, records: Sequence[TrialRecord]) -> dict[str, float]:
    return {
        "cycle_fraction": fraction(records, "meets_threshold"),
        "mean_cycle_length": mean_of(records, "cycle_length"),
        "mean_path_vertices": mean_of(records, "path_vertices"),
    }


def window_size(n: int, epsilon: float) -> int:
    """``k = ceil((7 / eps^2) ln n)``; windows span ``k n`` stream positions."""
    return math.ceil(7 / (epsilon * epsilon) * math.log(n))


def max_window_count(positions: np.ndarray, width: int) -> int:
    """Most ones inside any half-open interval of ``width`` consecutive positions.

    Examples
    --------
    >>> max_window_count(np.array([0, 3, 4, 9]), 5)
    3
    >>> max_window_count(np.array([], dtype=np.int64), 5)
    0
    """
    if positions.size == 0:
        return 0
    ends = np.searchsorted(positions, positions + width, side="left")
    return int((ends - np.arange(positions.size)).max())


def stream_window_check(stream: BernoulliStream, n: int, epsilon: float) -> tuple[int, int, bool]:
    """Read ``N = n(n-1)/2`` bits; no ``k n``-window may hold ``k`` ones.

    Returns
    -------
    tuple
        ``(k, most ones in a window, property holds)``.
    """
    k = window_size(n, epsilon)
    ones = stream.positions_of_ones(pair_count(n))
    most = max_window_count(ones, k * n)
    return k, most, most < k


def stream_sum_check(stream: BernoulliStream, n: int, epsilon: float) -> tuple[int, float, bool]:
    """Sum the first ``N0 = eps n^2 / 2`` bits; it must lie within ``n^(2/3)`` of ``eps(1+eps)n/2``.

    Returns
    -------
    tuple
        ``(ones, deviation, property holds)``.
    """
    n0 = min(pair_count(n), math.floor(epsilon * n * n / 2))
    ones = stream.skip(n0)
    deviation = abs(ones - epsilon * (1 + epsilon) * n / 2)
    return ones, deviation, deviation <= n ** (2 / 3)


def check_stream_config(config: ExperimentConfig) -> None:
    if config.n < 100:
        raise InvalidInputError(f"stream-lemma needs n >= 100, got {config.n}", field="n", value=config.n)
    warn_large_epsilon(config)


def stream_lemma_trial(config: ExperimentConfig, params: dict[str, Any], seed: int) -> tuple[dict[str, StatValue], bool]:
    n, eps = config.n, epsilon_of(config)
    k, most, part1 = stream_window_check(BernoulliStream((1 - eps) / n, derive_seed(seed, "sub")), n, eps)
    ones, deviation, part2 = stream_sum_check(BernoulliStream((1 + eps) / n, derive_seed(seed, "super")), n, eps)
    stats: dict[str, StatValue] = {
        "window_k": k,
        "max_window_ones": most,
        "window_ok": part1,
        "prefix_ones": ones,
        "prefix_deviation": deviation,
        "prefix_ok": part2,
    }
    return stats, part1 and part2


def summarize_stream_lemma(config: ExperimentConfig, records: Sequence[TrialRecord]) -> dict[str, float]:
    return {
        "window_fraction": fraction(records, "window_ok"),
        "prefix_fraction": fraction(records, "prefix_ok"),
        "max_window_ones": max_of(records, "max_window_ones"),
        "mean_prefix_deviation": mean_of(records, "prefix_deviation"),
    }
