"""
Trial dispatch and result emission.

Trials are independent: trial ``i`` of experiment ``name`` always runs with
``derive_seed(master, name, i)``, whichever worker executes it. Records are
sorted by trial index before aggregation, so the summary and the emitted
files do not depend on the worker count. Wall times are kept on the
records but left out of CSV and JSON unless ``include_timing`` is set.
"""

from __future__ import annotations

import csv
import json
import logging
import time
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path as FilePath
from typing import Any

from tqdm import tqdm

from rglab.experiments.experiment import Experiment, evaluate_targets
from rglab.experiments.experiment_models import ExperimentConfig, ExperimentSummary, StatValue, TrialRecord
from rglab.random_models.seeding import derive_seed
from rglab.settings import get_settings

logger = logging.getLogger(__name__)

FIXED_COLUMNS = ("experiment", "trial", "n", "seed")


def execute_trial(
    experiment: Experiment, config: ExperimentConfig, trial: int, params: dict[str, Any], seed: int
) -> TrialRecord:
    """Run one trial and wrap its statistics in a :class:`TrialRecord`."""
    started = time.perf_counter()
    stats, passed = experiment.trial(config, params, seed)
    return TrialRecord(
        experiment=experiment.name,
        trial=trial,
        n=config.n,
        seed=seed,
        params=params,
        stats=stats,
        passed=passed,
        wall_time=time.perf_counter() - started,
    )


class TrialRunner:
    """Run the trials of an experiment inline or on a process pool.

    Parameters
    ----------
    workers : int, default 1
        Worker processes; ``1`` runs every trial in the calling process.
    progress : bool, optional
        Show a tqdm bar; defaults to ``LabSettings.progress``.
    include_timing : bool, default False
        Emit ``wall_time`` in CSV and JSON.
    """

    def __init__(self, *, workers: int = 1, progress: bool | None = None, include_timing: bool = False) -> None:
        self.workers = max(1, int(workers))
        self.progress = get_settings().progress if progress is None else progress
        self.include_timing = include_timing

    def _jobs(self, experiment: Experiment, config: ExperimentConfig) -> list[tuple[int, dict[str, Any], int]]:
        plan = experiment.trial_plan(config)
        return [(i, params, derive_seed(config.seed, experiment.name, i)) for i, params in enumerate(plan)]

    def _inline(
        self, experiment: Experiment, config: ExperimentConfig, jobs: list[tuple[int, dict[str, Any], int]]
    ) -> Iterator[TrialRecord]:
        for i, params, seed in tqdm(jobs, desc=experiment.name, disable=not self.progress, leave=False):
            yield execute_trial(experiment, config, i, params, seed)

    def _pooled(
        self, experiment: Experiment, config: ExperimentConfig, jobs: list[tuple[int, dict[str, Any], int]]
    ) -> Iterator[TrialRecord]:
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            futures = [pool.submit(execute_trial, experiment, config, i, params, seed) for i, params, seed in jobs]
            for future in tqdm(
                as_completed(futures), total=len(futures), desc=experiment.name, disable=not self.progress, leave=False
            ):
                yield future.result()

    def run(self, experiment: Experiment, config: ExperimentConfig) -> ExperimentSummary:
        """Validate ``config``, run every planned trial and aggregate.

        Raises
        ------
        InvalidInputError
            If the experiment rejects the config or a target names no metric.
        """
        experiment.validate(config)
        jobs = self._jobs(experiment, config)
        started = time.perf_counter()
        if self.workers > 1 and len(jobs) > 1:
            records = list(self._pooled(experiment, config, jobs))
        else:
            records = list(self._inline(experiment, config, jobs))
        records.sort(key=lambda r: r.trial)
        metrics = experiment.summarize(config, records)
        targets = evaluate_targets(metrics, experiment.targets_for(config))
        missed = [t.name for t in targets if not t.met]
        logger.info(
            f"{experiment.name}: {len(records)} trials in {time.perf_counter() - started:.1f}s "
            f"with {self.workers} worker(s); targets missed: {missed or 'none'}"
        )
        return ExperimentSummary(
            experiment=experiment.name, config=config, metrics=metrics, targets=targets, records=records
        )


def format_value(value: StatValue) -> str:
    """CSV cell text: ``true``/``false``, empty for missing, 6 significant digits for floats."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def json_value(value: StatValue) -> StatValue:
    if isinstance(value, float) and not isinstance(value, bool):
        return float(f"{value:.6g}")
    return value


def _ordered_keys(dicts: Iterable[dict[str, Any]]) -> list[str]:
    seen: dict[str, None] = {}
    for d in dicts:
        for key in d:
            seen.setdefault(key, None)
    return list(seen)


def record_columns(records: list[TrialRecord], include_timing: bool = False) -> list[str]:
    columns = list(FIXED_COLUMNS)
    columns += _ordered_keys(r.params for r in records)
    columns += [k for k in _ordered_keys(r.stats for r in records) if k not in columns]
    columns.append("passed")
    if include_timing:
        columns.append("wall_time")
    return columns


def record_row(record: TrialRecord, columns: list[str]) -> list[StatValue]:
    values: dict[str, StatValue] = {
        "experiment": record.experiment,
        "trial": record.trial,
        "n": record.n,
        "seed": record.seed,
        **record.params,
        **record.stats,
        "passed": record.passed,
        "wall_time": record.wall_time,
    }
    return [values.get(c) for c in columns]


def write_csv(summary: ExperimentSummary, path: str | FilePath, *, include_timing: bool = False) -> FilePath:
    """One header row, then one row per record in trial order."""
    path = FilePath(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    columns = record_columns(summary.records, include_timing)
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(columns)
        for record in summary.records:
            writer.writerow([format_value(v) for v in record_row(record, columns)])
    logger.debug(f"wrote {len(summary.records)} rows to {path}")
    return path


def summary_payload(summary: ExperimentSummary, *, include_timing: bool = False) -> dict[str, Any]:
    """JSON document mirroring the CSV columns plus metrics and targets."""
    columns = record_columns(summary.records, include_timing)
    return {
        "experiment": summary.experiment,
        "config": summary.config.model_dump(mode="json"),
        "metrics": {k: json_value(v) for k, v in summary.metrics.items()},
        "targets": [
            {**t.model_dump(mode="json"), "observed": json_value(t.observed)} for t in summary.targets
        ],
        "targets_met": summary.targets_met,
        "columns": columns,
        "rows": [[json_value(v) for v in record_row(r, columns)] for r in summary.records],
    }


def write_json(summary: ExperimentSummary, path: str | FilePath, *, include_timing: bool = False) -> FilePath:
    path = FilePath(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = summary_payload(summary, include_timing=include_timing)
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    return path
