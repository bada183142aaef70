"""
Built-in experiments and their convenience entry points.

Each ``*_experiment`` function builds an :class:`ExperimentConfig` and runs
it through a :class:`~rglab.experiments.runner.TrialRunner`; the CLI goes
through the registry instead and reaches the same :class:`Experiment`
objects.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from typing import Any

from rglab.exceptions import InvalidInputError
from rglab.experiments import path_experiments as paths
from rglab.experiments import process_experiments as process
from rglab.experiments import threshold_experiments as sweeps
from rglab.experiments.experiment import Experiment
from rglab.experiments.experiment_models import ExperimentConfig, ExperimentSummary
from rglab.experiments.runner import TrialRunner

HITTING_TIME = Experiment(
    "hitting-time",
    "tau2 versus the Hamiltonicity hitting time on random graph processes",
    trial=process.hitting_time_trial,
    summarize=process.summarize_hitting_times,
    check=process.check_process_config,
)

BACKBONE_PIPELINE = Experiment(
    "backbone-pipeline",
    "sparse backbone of the tau2 snapshot augmented by boosters from the snapshot",
    trial=process.backbone_trial,
    summarize=process.summarize_backbone,
    check=process.check_process_config,
)

SUPERCRITICAL = Experiment(
    "supercritical",
    "DFS path length in G(n, (1+eps)/n) against eps^2 n / 5",
    trial=paths.supercritical_trial,
    summarize=paths.summarize_supercritical,
    check=paths.check_path_config,
)

SUBCRITICAL = Experiment(
    "subcritical",
    "largest component of G(n, (1-eps)/n) against (7 / eps^2) ln n",
    trial=paths.subcritical_trial,
    summarize=paths.summarize_subcritical,
    check=paths.check_path_config,
)

NEARLY_SPANNING = Experiment(
    "nearly-spanning",
    "DFS path of length (1-eps) n in G(n, C/n) or D(n, C/n), C = 5 ln(1/eps) / eps",
    trial=paths.nearly_spanning_trial,
    summarize=paths.summarize_nearly_spanning,
    check=paths.check_spanning_config,
    default_targets=paths.nearly_spanning_targets,
)

SPRINKLED_CYCLE = Experiment(
    "sprinkled-cycle",
    "long DFS path closed into a cycle by a sprinkled G(n, eps/2n) layer",
    trial=paths.sprinkled_cycle_trial,
    summarize=paths.summarize_sprinkled_cycle,
    check=paths.check_path_config,
)

STREAM_LEMMA = Experiment(
    "stream-lemma",
    "window and prefix-sum statements for Bernoulli query streams",
    trial=paths.stream_lemma_trial,
    summarize=paths.summarize_stream_lemma,
    check=paths.check_stream_config,
)

MIN_DEGREE = Experiment(
    "min-degree",
    "share of graphs with minimum degree >= 2 around (ln n + ln ln n) / n",
    trial=sweeps.min_degree_trial,
    summarize=sweeps.summarize_min_degree,
    plan=sweeps.sweep_plan,
    check=sweeps.check_sweep_config,
)

HAM_THRESHOLD = Experiment(
    "ham-threshold",
    "share of graphs certified Hamiltonian around (ln n + ln ln n) / n",
    trial=sweeps.ham_threshold_trial,
    summarize=sweeps.summarize_ham_threshold,
    plan=sweeps.sweep_plan,
    check=sweeps.check_sweep_config,
)

BOUNDS = Experiment(
    "bounds",
    "exact and empirical binomial tails against the Chernoff and trivial bounds",
    trial=sweeps.bounds_trial,
    summarize=sweeps.summarize_bounds,
    plan=sweeps.bounds_plan,
)

BUILTIN_EXPERIMENTS: tuple[Experiment, ...] = (
    HITTING_TIME,
    SUPERCRITICAL,
    SUBCRITICAL,
    NEARLY_SPANNING,
    SPRINKLED_CYCLE,
    STREAM_LEMMA,
    MIN_DEGREE,
    HAM_THRESHOLD,
    BACKBONE_PIPELINE,
    BOUNDS,
)


def _run(
    experiment: Experiment,
    *,
    workers: int,
    progress: bool | None,
    targets: Mapping[str, float] | None,
    **fields: Any,
) -> ExperimentSummary:
    config = ExperimentConfig(name=experiment.name, targets=dict(targets or {}), **fields)
    return TrialRunner(workers=workers, progress=progress).run(experiment, config)


def hitting_time_hamiltonicity_experiment(
    n: int,
    trials: int,
    seed: int = 0,
    *,
    workers: int = 1,
    progress: bool | None = None,
    budget: int | None = None,
    targets: Mapping[str, float] | None = None,
) -> ExperimentSummary:
    """Compare ``tau2`` with the Hamiltonicity hitting time on ``trials`` processes.

    Raises
    ------
    InvalidInputError
        If ``n < 3``.
    """
    return _run(
        HITTING_TIME, workers=workers, progress=progress, targets=targets, n=n, trials=trials, seed=seed, budget=budget
    )


def supercritical_path_experiment(
    n: int,
    epsilon: float,
    trials: int,
    seed: int = 0,
    *,
    regime: str = "super",
    workers: int = 1,
    progress: bool | None = None,
    targets: Mapping[str, float] | None = None,
) -> ExperimentSummary:
    """DFS paths at ``(1+eps)/n`` (``regime="super"``) or component sizes at ``(1-eps)/n`` (``"sub"``)."""
    if regime not in ("super", "sub"):
        raise InvalidInputError(f"regime must be 'super' or 'sub', got {regime!r}", field="regime", value=regime)
    experiment = SUPERCRITICAL if regime == "super" else SUBCRITICAL
    return _run(
        experiment, workers=workers, progress=progress, targets=targets, n=n, epsilon=epsilon, trials=trials, seed=seed
    )


def nearly_spanning_experiment(
    n: int,
    epsilon: float,
    trials: int,
    seed: int = 0,
    *,
    directed: bool = False,
    workers: int = 1,
    progress: bool | None = None,
    targets: Mapping[str, float] | None = None,
) -> ExperimentSummary:
    """Share of DFS runs at ``p = C(eps)/n`` reaching a path of length ``(1-eps) n``."""
    return _run(
        NEARLY_SPANNING,
        workers=workers,
        progress=progress,
        targets=targets,
        n=n,
        epsilon=epsilon,
        trials=trials,
        seed=seed,
        directed=directed,
    )


def sprinkled_cycle_experiment(
    n: int,
    epsilon: float,
    trials: int,
    seed: int = 0,
    *,
    window: int | None = None,
    workers: int = 1,
    progress: bool | None = None,
    targets: Mapping[str, float] | None = None,
) -> ExperimentSummary:
    return _run(
        SPRINKLED_CYCLE,
        workers=workers,
        progress=progress,
        targets=targets,
        n=n,
        epsilon=epsilon,
        trials=trials,
        seed=seed,
        window=window,
    )


def stream_lemma_check(
    n: int,
    epsilon: float,
    trials: int,
    seed: int = 0,
    *,
    workers: int = 1,
    progress: bool | None = None,
    targets: Mapping[str, float] | None = None,
) -> ExperimentSummary:
    """Window statement at ``(1-eps)/n`` and prefix-sum statement at ``(1+eps)/n``, per trial."""
    return _run(
        STREAM_LEMMA, workers=workers, progress=progress, targets=targets, n=n, epsilon=epsilon, trials=trials, seed=seed
    )


def min_degree_threshold_experiment(
    n: int,
    offset_grid: Sequence[float],
    trials: int,
    seed: int = 0,
    *,
    models: Sequence[str] = ("gnp", "gnm"),
    workers: int = 1,
    progress: bool | None = None,
    targets: Mapping[str, float] | None = None,
) -> ExperimentSummary:
    """Share of graphs with ``delta >= 2`` per model and offset; ``metrics`` holds the curve."""
    return _run(
        MIN_DEGREE,
        workers=workers,
        progress=progress,
        targets=targets,
        n=n,
        offsets=list(offset_grid),
        models=list(models),
        trials=trials,
        seed=seed,
    )


def ham_threshold_experiment(
    n: int,
    offset_grid: Sequence[float],
    trials: int,
    seed: int = 0,
    *,
    models: Sequence[str] = ("gnp",),
    workers: int = 1,
    progress: bool | None = None,
    budget: int | None = None,
    targets: Mapping[str, float] | None = None,
) -> ExperimentSummary:
    return _run(
        HAM_THRESHOLD,
        workers=workers,
        progress=progress,
        targets=targets,
        n=n,
        offsets=list(offset_grid),
        models=list(models),
        trials=trials,
        seed=seed,
        budget=budget,
    )


def backbone_pipeline_experiment(
    n: int,
    trials: int,
    seed: int = 0,
    *,
    d0: int = 4,
    workers: int = 1,
    progress: bool | None = None,
    budget: int | None = None,
    targets: Mapping[str, float] | None = None,
) -> ExperimentSummary:
    """Sparse backbone plus in-snapshot boosters on ``trials`` ``tau2`` snapshots."""
    return _run(
        BACKBONE_PIPELINE,
        workers=workers,
        progress=progress,
        targets=targets,
        n=n,
        trials=trials,
        seed=seed,
        d0=d0,
        budget=budget,
    )


def bounds_experiment(
    trials: int = 1,
    seed: int = 0,
    *,
    samples: int = 1_000_000,
    workers: int = 1,
    progress: bool | None = None,
    targets: Mapping[str, float] | None = None,
) -> ExperimentSummary:
    """Tail table over the default ``(n, p, a)`` grid, ``trials`` sample batches per point."""
    return _run(
        BOUNDS, workers=workers, progress=progress, targets=targets, n=1, trials=trials, seed=seed, samples=samples
    )
