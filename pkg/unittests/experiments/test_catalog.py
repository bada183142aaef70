"""
Unit tests for the built-in experiments at desk scale, plus slow acceptance
runs at the sizes where the asymptotic statements become visible.
"""
from __future__ import annotations

import pytest

from rglab.exceptions import InvalidInputError
from rglab.experiments import (
    backbone_pipeline_experiment,
    bounds_experiment,
    ham_threshold_experiment,
    hitting_time_hamiltonicity_experiment,
    min_degree_threshold_experiment,
    nearly_spanning_experiment,
    sprinkled_cycle_experiment,
    stream_lemma_check,
    supercritical_path_experiment,
)
from rglab.experiments.threshold_experiments import threshold_probability
from rglab.hamilton import exact_hamiltonian
from rglab.random_models import gnp


@pytest.mark.unit
def test_min_degree_sweep_at_the_extremes() -> None:
    summary = min_degree_threshold_experiment(10, [-4.0, 100.0], trials=4, seed=2)
    assert threshold_probability(10, -4.0) == 0.0
    assert threshold_probability(10, 100.0) == 1.0
    assert len(summary.records) == 16
    assert summary.metrics["delta_ge2[gnp,-4]"] == 0.0
    assert summary.metrics["delta_ge2[gnm,+100]"] == 1.0
    assert summary.metrics["delta_ge2_at_max_offset"] == 1.0
    assert summary.metrics["delta_le1_at_min_offset"] == 1.0
    assert summary.targets_met
    assert all(r.stats["min_degree"] == 9 for r in summary.records if r.params["omega"] == 100.0)


@pytest.mark.unit
def test_min_degree_sweep_rejects_tiny_graphs() -> None:
    with pytest.raises(InvalidInputError):
        min_degree_threshold_experiment(2, [0.0], trials=1)


@pytest.mark.unit
def test_ham_threshold_records_replay() -> None:
    summary = ham_threshold_experiment(10, [2.0], trials=4, seed=3)
    assert len(summary.records) == 4
    for record in summary.records:
        g = gnp(10, record.params["p"], record.seed)
        assert record.stats["hamiltonian"] == exact_hamiltonian(g).is_hamiltonian
        assert record.stats["min_degree"] == g.min_degree()


@pytest.mark.unit
def test_hitting_time_experiment_small() -> None:
    summary = hitting_time_hamiltonicity_experiment(10, trials=3, seed=1)
    assert summary.metrics["order_fraction"] == 1.0
    for record in summary.records:
        assert record.stats["solver"] == "exact"
        assert record.stats["tau_hamiltonian_upper"] >= record.stats["tau_min_degree_2"]
        assert record.passed == record.stats["certified_equal"]
    with pytest.raises(InvalidInputError):
        hitting_time_hamiltonicity_experiment(2, trials=1)


@pytest.mark.unit
def test_backbone_pipeline_bounds() -> None:
    summary = backbone_pipeline_experiment(30, trials=2, seed=4, d0=4)
    assert summary.metrics["bound_fraction"] == 1.0
    assert summary.metrics["booster_bound_fraction"] == 1.0
    for record in summary.records:
        assert record.stats["backbone_edges"] <= record.stats["host_edges"]


@pytest.mark.unit
def test_tiny_path_threshold_is_met_trivially() -> None:
    summary = supercritical_path_experiment(20, 0.2, trials=3, seed=0)
    assert summary.metrics["path_fraction"] == 1.0
    assert summary.targets_met


@pytest.mark.unit
def test_path_experiments_small() -> None:
    sub = supercritical_path_experiment(2000, 0.3, trials=2, seed=1, regime="sub")
    assert sub.experiment == "subcritical"
    assert {"component_fraction", "max_largest_component"} <= set(sub.metrics)
    with pytest.raises(InvalidInputError):
        supercritical_path_experiment(100, 0.2, trials=1, regime="critical")

    cycles = sprinkled_cycle_experiment(1000, 0.2, trials=2, seed=1)
    for record in cycles.records:
        assert record.stats["cycle_length"] <= record.stats["path_vertices"]


@pytest.mark.unit
def test_nearly_spanning_targets_depend_on_epsilon() -> None:
    loose = nearly_spanning_experiment(100, 0.6, trials=2, seed=0)
    assert loose.targets == []
    tight = nearly_spanning_experiment(100, 0.5, trials=2, seed=0, directed=True)
    assert [t.name for t in tight.targets] == ["path_fraction"]
    assert all(r.stats["directed"] is True for r in tight.records)


@pytest.mark.unit
def test_stream_window_check_small() -> None:
    summary = stream_lemma_check(200, 0.2, trials=2, seed=0)
    assert {"window_fraction", "prefix_fraction"} <= set(summary.metrics)
    with pytest.raises(InvalidInputError):
        stream_lemma_check(50, 0.2, trials=1)


@pytest.mark.unit
def test_bounds_experiment_small() -> None:
    summary = bounds_experiment(trials=1, seed=0, samples=20_000)
    assert len(summary.records) == 12
    assert summary.metrics["within_bounds_fraction"] == 1.0
    assert summary.metrics["binomial_estimates_ok"] == 1.0
    assert summary.targets_met


@pytest.mark.slow
def test_supercritical_acceptance() -> None:
    summary = supercritical_path_experiment(100_000, 0.2, trials=20, seed=0)
    assert summary.metrics["path_fraction"] >= 0.95
    sub = supercritical_path_experiment(100_000, 0.2, trials=20, seed=0, regime="sub")
    assert sub.metrics["component_fraction"] >= 0.95


@pytest.mark.slow
def test_nearly_spanning_acceptance() -> None:
    undirected = nearly_spanning_experiment(20_000, 0.1, trials=10, seed=0)
    assert undirected.metrics["path_fraction"] == 1.0
    directed = nearly_spanning_experiment(20_000, 0.1, trials=5, seed=0, directed=True)
    assert directed.metrics["path_fraction"] == 1.0


@pytest.mark.slow
def test_stream_window_check_acceptance() -> None:
    summary = stream_lemma_check(10_000, 0.2, trials=50, seed=0)
    assert summary.metrics["window_fraction"] >= 0.96
    assert summary.metrics["prefix_fraction"] >= 0.96


@pytest.mark.slow
def test_min_degree_acceptance() -> None:
    summary = min_degree_threshold_experiment(10_000, [-4.0, 4.0], trials=100, seed=0)
    assert summary.targets_met


@pytest.mark.slow
def test_hitting_time_acceptance() -> None:
    summary = hitting_time_hamiltonicity_experiment(1000, trials=100, seed=0, workers=4)
    assert summary.metrics["certified_fraction"] >= 0.95
    assert summary.metrics["window_fraction"] >= 0.95
    assert summary.metrics["order_fraction"] == 1.0


@pytest.mark.slow
def test_backbone_pipeline_acceptance() -> None:
    summary = backbone_pipeline_experiment(1000, trials=50, seed=0, workers=4)
    assert summary.metrics["bound_fraction"] == 1.0
    assert summary.metrics["booster_bound_fraction"] == 1.0
    assert summary.metrics["success_fraction"] >= 0.9


@pytest.mark.slow
def test_bounds_acceptance() -> None:
    summary = bounds_experiment(trials=1, seed=0)
    assert summary.targets_met
