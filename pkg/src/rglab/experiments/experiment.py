"""
Experiment descriptor shared by the catalog, the registry and the runner.

An :class:`Experiment` bundles four module-level callables:

``check(config)``
    Reject configurations the experiment cannot run (raises
    :class:`~rglab.exceptions.InvalidInputError`).
``plan(config)``
    One parameter dict per trial record (grid point x repetition).
``trial(config, params, seed)``
    Run one trial; return ``(stats, passed)``. Must be a pure function of
    its arguments and picklable, since the runner may ship it to a worker
    process.
``summarize(config, records)``
    Aggregate the sorted records into named metrics.

Acceptance targets are lower bounds on metrics. Defaults come from the
``LabSettings.acceptance_targets`` entry of the experiment name (or from the
experiment itself when it carries its own) and are overridden key by key by
``ExperimentConfig.targets``.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Mapping, Sequence
from typing import Any

from rglab.exceptions import InvalidInputError
from rglab.experiments.experiment_models import ExperimentConfig, StatValue, TargetCheck, TrialRecord
from rglab.settings import get_settings

TrialFn = Callable[[ExperimentConfig, dict[str, Any], int], tuple[dict[str, StatValue], bool | None]]
PlanFn = Callable[[ExperimentConfig], list[dict[str, Any]]]
SummaryFn = Callable[[ExperimentConfig, Sequence[TrialRecord]], dict[str, float]]
CheckFn = Callable[[ExperimentConfig], None]
TargetsFn = Callable[[ExperimentConfig], dict[str, float]]


class Experiment:
    """A named, registrable Monte Carlo experiment."""

    __slots__ = ("name", "description", "trial", "plan", "summarize", "check", "default_targets")

    def __init__(
        self,
        name: str,
        description: str,
        *,
        trial: TrialFn,
        summarize: SummaryFn,
        plan: PlanFn | None = None,
        check: CheckFn | None = None,
        default_targets: Mapping[str, float] | TargetsFn | None = None,
    ) -> None:
        self.name = name
        self.description = description
        self.trial = trial
        self.summarize = summarize
        self.plan = plan
        self.check = check
        self.default_targets = default_targets

    def validate(self, config: ExperimentConfig) -> None:
        if self.check is not None:
            self.check(config)

    def trial_plan(self, config: ExperimentConfig) -> list[dict[str, Any]]:
        if self.plan is None:
            return [{} for _ in range(config.trials)]
        return self.plan(config)

    def targets_for(self, config: ExperimentConfig) -> dict[str, float]:
        if self.default_targets is None:
            base: dict[str, float] = dict(get_settings().acceptance_targets.get(self.name, {}))
        elif callable(self.default_targets):
            base = dict(self.default_targets(config))
        else:
            base = dict(self.default_targets)
        base.update(config.targets)
        return base

    def __repr__(self) -> str:
        return f"Experiment({self.name!r})"


def evaluate_targets(metrics: Mapping[str, float], targets: Mapping[str, float]) -> list[TargetCheck]:
    """Check every target against its metric (``observed >= threshold``).

    Raises
    ------
    InvalidInputError
        If a target names a metric the experiment does not produce.
    """
    checks = []
    for name, threshold in targets.items():
        if name not in metrics:
            raise InvalidInputError(
                f"target {name!r} matches no metric; known metrics: {sorted(metrics)}", field="targets", value=name
            )
        observed = metrics[name]
        checks.append(TargetCheck(name=name, observed=observed, threshold=threshold, met=observed >= threshold))
    return checks


def fraction(records: Sequence[TrialRecord], key: str) -> float:
    """Share of records whose ``stats[key]`` is truthy (0.0 for no records)."""
    if not records:
        return 0.0
    return sum(1 for r in records if r.stats.get(key)) / len(records)


def mean_of(records: Sequence[TrialRecord], key: str) -> float:
    values = [float(v) for r in records if isinstance(v := r.stats.get(key), int | float)]
    return math.fsum(values) / len(values) if values else 0.0


def min_of(records: Sequence[TrialRecord], key: str) -> float:
    values = [float(v) for r in records if isinstance(v := r.stats.get(key), int | float)]
    return min(values) if values else 0.0


def max_of(records: Sequence[TrialRecord], key: str) -> float:
    values = [float(v) for r in records if isinstance(v := r.stats.get(key), int | float)]
    return max(values) if values else 0.0
