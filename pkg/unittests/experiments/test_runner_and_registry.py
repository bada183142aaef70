"""
Unit tests for the trial runner, result emission and the experiment registry.
"""
from __future__ import annotations

import csv
import json
from collections.abc import Iterator, Sequence
from pathlib import Path
from typing import Any

import pytest
from pydantic import ValidationError

from rglab.exceptions import InvalidInputError
from rglab.experiments import (
    BUILTIN_EXPERIMENTS,
    Experiment,
    ExperimentConfig,
    TrialRecord,
    TrialRunner,
    evaluate_targets,
    get_experiment,
    list_experiments,
    register_experiment,
    reset_registry,
    summary_payload,
    write_csv,
    write_json,
)
from rglab.experiments.catalog import BOUNDS, SUPERCRITICAL
from rglab.experiments.experiment import fraction, max_of, mean_of, min_of
from rglab.experiments.runner import format_value
from rglab.random_models import derive_seed
from rglab.settings import LabSettings, default_acceptance_targets, override_settings


def _toy_trial(config: ExperimentConfig, params: dict[str, Any], seed: int) -> tuple[dict[str, Any], bool]:
    return {"value": seed % 7, "ok": True}, True


def _toy_summary(config: ExperimentConfig, records: Sequence[TrialRecord]) -> dict[str, float]:
    return {"ok_fraction": fraction(records, "ok"), "mean_value": mean_of(records, "value")}


def _toy(name: str = "toy") -> Experiment:
    return Experiment(
        name,
        "deterministic toy",
        trial=_toy_trial,
        summarize=_toy_summary,
        default_targets={"ok_fraction": 1.0},
    )


@pytest.fixture(autouse=True)
def _fresh_registry() -> Iterator[None]:
    reset_registry()
    yield
    reset_registry()


@pytest.mark.unit
def test_runner_derives_one_seed_per_trial() -> None:
    config = ExperimentConfig(name="toy", n=5, trials=4, seed=11)
    summary = TrialRunner().run(_toy(), config)
    assert [r.trial for r in summary.records] == [0, 1, 2, 3]
    assert [r.seed for r in summary.records] == [derive_seed(11, "toy", i) for i in range(4)]
    assert summary.metrics["ok_fraction"] == 1.0
    assert summary.targets_met
    assert summary.missed() == []


@pytest.mark.unit
def test_config_targets_override_defaults() -> None:
    config = ExperimentConfig(name="toy", n=5, trials=2, targets={"ok_fraction": 2.0})
    summary = TrialRunner().run(_toy(), config)
    assert not summary.targets_met
    assert [t.name for t in summary.missed()] == ["ok_fraction"]

    config = ExperimentConfig(name="toy", n=5, trials=2, targets={"no_such_metric": 1.0})
    with pytest.raises(InvalidInputError):
        TrialRunner().run(_toy(), config)


@pytest.mark.unit
def test_evaluate_targets() -> None:
    checks = evaluate_targets({"a": 0.5, "b": 1.0}, {"a": 0.5, "b": 1.5})
    assert [(c.name, c.met) for c in checks] == [("a", True), ("b", False)]
    with pytest.raises(InvalidInputError):
        evaluate_targets({"a": 0.5}, {"c": 0.1})


@pytest.mark.unit
def test_builtin_targets_come_from_settings() -> None:
    hitting = get_experiment("hitting-time")
    config = ExperimentConfig(name="hitting-time", n=10)
    assert hitting.targets_for(config) == default_acceptance_targets()["hitting-time"]

    changed = {**default_acceptance_targets(), "hitting-time": {"certified_fraction": 0.5}}
    with override_settings(acceptance_targets=changed):
        assert hitting.targets_for(config) == {"certified_fraction": 0.5}
        overridden = ExperimentConfig(name="hitting-time", n=10, targets={"order_fraction": 0.9})
        assert hitting.targets_for(overridden) == {"certified_fraction": 0.5, "order_fraction": 0.9}
        spanning = ExperimentConfig(name="nearly-spanning", n=10, epsilon=0.2)
        assert get_experiment("nearly-spanning").targets_for(spanning) == {"path_fraction": 1.0}


@pytest.mark.unit
def test_acceptance_targets_from_environment() -> None:
    env = {"RGLAB_ACCEPTANCE_TARGETS": '{"hitting-time": {"certified_fraction": 0.8}, "extra": {"x": 1}}'}
    targets = LabSettings.from_env(env).acceptance_targets
    assert targets["hitting-time"] == {"certified_fraction": 0.8, "window_fraction": 0.95, "order_fraction": 1.0}
    assert targets["extra"] == {"x": 1.0}
    assert targets["bounds"] == default_acceptance_targets()["bounds"]
    for raw in ("not json", '{"hitting-time": 0.9}', "[1, 2]"):
        with pytest.raises(InvalidInputError) as info:
            LabSettings.from_env({"RGLAB_ACCEPTANCE_TARGETS": raw})
        assert info.value.field == "acceptance_targets"


@pytest.mark.unit
def test_record_aggregates() -> None:
    records = [
        TrialRecord(experiment="x", trial=i, n=1, seed=i, stats={"v": float(i), "flag": i % 2 == 0})
        for i in range(4)
    ]
    assert fraction(records, "flag") == 0.5
    assert mean_of(records, "v") == 1.5
    assert min_of(records, "v") == 0.0
    assert max_of(records, "v") == 3.0
    assert fraction([], "flag") == 0.0
    assert mean_of([], "v") == 0.0


@pytest.mark.unit
def test_experiment_config_validation() -> None:
    with pytest.raises(ValidationError):
        ExperimentConfig(name="x", n=10, models=["gnq"])
    with pytest.raises(ValidationError):
        ExperimentConfig(name="x", n=10, models=[])
    with pytest.raises(ValidationError):
        ExperimentConfig(name="x", n=10, epsilon=1.5)
    with pytest.raises(ValidationError):
        ExperimentConfig(name="x", n=0)
    with pytest.raises(ValidationError):
        ExperimentConfig(name="x", n=10, unknown=1)


@pytest.mark.unit
def test_csv_layout(tmp_path: Path) -> None:
    summary = TrialRunner().run(_toy(), ExperimentConfig(name="toy", n=5, trials=3))
    path = write_csv(summary, tmp_path / "out" / "toy.csv")
    with path.open(encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["experiment", "trial", "n", "seed", "value", "ok", "passed"]
    assert len(rows) == 4
    first = summary.records[0]
    assert rows[1] == ["toy", "0", "5", str(first.seed), str(first.seed % 7), "true", "true"]

    timed = write_csv(summary, tmp_path / "timed.csv", include_timing=True)
    assert timed.read_text(encoding="utf-8").splitlines()[0].endswith(",passed,wall_time")


@pytest.mark.unit
def test_json_payload(tmp_path: Path) -> None:
    summary = TrialRunner().run(_toy(), ExperimentConfig(name="toy", n=5, trials=3))
    payload = json.loads(write_json(summary, tmp_path / "toy.json").read_text(encoding="utf-8"))
    assert payload == summary_payload(summary)
    assert payload["experiment"] == "toy"
    assert payload["targets_met"] is True
    assert "wall_time" not in payload["columns"]
    assert len(payload["rows"]) == 3
    assert payload["config"]["trials"] == 3


@pytest.mark.unit
def test_format_value() -> None:
    assert format_value(None) == ""
    assert format_value(True) == "true"
    assert format_value(False) == "false"
    assert format_value(1 / 3) == "0.333333"
    assert format_value(42) == "42"


@pytest.mark.integration
def test_output_is_independent_of_worker_count(tmp_path: Path) -> None:
    config = ExperimentConfig(name="supercritical", n=500, epsilon=0.2, trials=4, seed=5)
    inline = TrialRunner(workers=1).run(SUPERCRITICAL, config)
    pooled = TrialRunner(workers=2).run(SUPERCRITICAL, config)
    a = write_csv(inline, tmp_path / "a.csv")
    b = write_csv(pooled, tmp_path / "b.csv")
    assert a.read_bytes() == b.read_bytes()
    assert summary_payload(inline) == summary_payload(pooled)


@pytest.mark.unit
def test_registry_serves_the_builtins() -> None:
    names = set(list_experiments())
    assert {e.name for e in BUILTIN_EXPERIMENTS} <= names
    assert get_experiment("bounds") is BOUNDS
    with pytest.raises(InvalidInputError):
        get_experiment("no-such-experiment")


@pytest.mark.unit
def test_registered_experiments_shadow_and_reset() -> None:
    toy = _toy()
    register_experiment(toy)
    assert get_experiment("toy") is toy
    assert list_experiments()["toy"] is toy

    shadow = _toy("bounds")
    register_experiment(shadow)
    assert get_experiment("bounds") is shadow
    assert list_experiments()["bounds"] is shadow

    reset_registry()
    assert get_experiment("bounds") is BOUNDS
    assert "toy" not in list_experiments()
