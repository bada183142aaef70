"""
Monte Carlo experiment harness.

This subsystem provides:
- hitting_time / MinDegreeAtLeast / Connected / HasPathAtLeast: hitting times on graph processes
- the built-in experiments (hitting-time, supercritical, subcritical, nearly-spanning,
  sprinkled-cycle, stream-lemma, min-degree, ham-threshold, backbone-pipeline, bounds)
- tail_bounds / check_binomial_estimates: analytic bound calculators
- sprinkle_cycle: close a long path with a second random layer
- TrialRunner / write_csv / write_json: seeded, worker-count independent execution
- get_experiment / list_experiments / register_experiment: the pluggy registry
"""

from rglab.experiments.bounds import BoundKind, check_binomial_estimates, exact_tail, tail_bounds, tail_point
from rglab.experiments.catalog import (
    BUILTIN_EXPERIMENTS,
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
from rglab.experiments.experiment import Experiment, evaluate_targets
from rglab.experiments.experiment_models import (
    ExperimentConfig,
    ExperimentSummary,
    HittingTimes,
    TargetCheck,
    TrialRecord,
)
from rglab.experiments.process_experiments import measure_hitting_times
from rglab.experiments.properties import Connected, HasPathAtLeast, HittingMethod, MinDegreeAtLeast, hitting_time
from rglab.experiments.registry import get_experiment, list_experiments, register_experiment, reset_registry
from rglab.experiments.runner import TrialRunner, summary_payload, write_csv, write_json
from rglab.experiments.sprinkle import sprinkle_cycle, sprinkle_probability

__all__ = [
    "hitting_time",
    "HittingMethod",
    "MinDegreeAtLeast",
    "Connected",
    "HasPathAtLeast",
    "measure_hitting_times",
    "hitting_time_hamiltonicity_experiment",
    "supercritical_path_experiment",
    "nearly_spanning_experiment",
    "sprinkled_cycle_experiment",
    "stream_lemma_check",
    "min_degree_threshold_experiment",
    "ham_threshold_experiment",
    "backbone_pipeline_experiment",
    "bounds_experiment",
    "BUILTIN_EXPERIMENTS",
    "tail_bounds",
    "tail_point",
    "exact_tail",
    "BoundKind",
    "check_binomial_estimates",
    "sprinkle_cycle",
    "sprinkle_probability",
    "Experiment",
    "evaluate_targets",
    "ExperimentConfig",
    "ExperimentSummary",
    "HittingTimes",
    "TargetCheck",
    "TrialRecord",
    "TrialRunner",
    "summary_payload",
    "write_csv",
    "write_json",
    "get_experiment",
    "list_experiments",
    "register_experiment",
    "reset_registry",
]
