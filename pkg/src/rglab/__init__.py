"""
Random graph algorithms laboratory.

Seeded random graph models, the S/U/T depth-first search, Pósa rotations and
boosters, expander audits, Hamilton cycle solvers and a Monte Carlo
experiment harness that turns asymptotic statements into reproducible
frequency checks.

Examples
--------
Basic usage:

>>> from rglab import gnp, online_dfs, BernoulliStream
>>>
>>> # Expose G(n, p) while the DFS runs and read off the longest U-path
>>> g, trace = online_dfs(2000, BernoulliStream(1.2 / 2000, seed=7))
>>> trace.max_u >= 1
True

Hitting times on a graph process:

>>> from rglab import random_process, hitting_time, MinDegreeAtLeast
>>> proc = random_process(50, seed=1)
>>> tau2 = hitting_time(proc, MinDegreeAtLeast(2))
>>> proc.snapshot(tau2).min_degree()
2
"""

__version__ = "0.3.0"

from rglab.dfs import DfsTrace, long_path_dfs2, online_dfs, run_dfs, run_directed_dfs
from rglab.exceptions import (
    CapacityError,
    InvalidInputError,
    InvalidRotationError,
    InvariantViolationError,
    NoHittingTimeError,
    RgLabError,
    StreamUnderflowError,
)
from rglab.expander import ExpanderQuery, audit_properties, is_expander, sparse_backbone
from rglab.experiments import (
    Connected,
    ExperimentConfig,
    HasPathAtLeast,
    MinDegreeAtLeast,
    TrialRunner,
    get_experiment,
    hitting_time,
    tail_bounds,
)
from rglab.graph import Cycle, DiGraph, Graph, Path
from rglab.hamilton import augment_with_boosters, exact_hamiltonian, rotation_extension_search
from rglab.posa import boosters, posa_check, rotation_closure
from rglab.random_models import BernoulliStream, EdgeProcess, dnp, gnm, gnp, random_process
from rglab.settings import LabSettings, get_settings, override_settings

__all__ = [
    "__version__",
    "Graph",
    "DiGraph",
    "Path",
    "Cycle",
    "gnp",
    "gnm",
    "dnp",
    "random_process",
    "EdgeProcess",
    "BernoulliStream",
    "run_dfs",
    "run_directed_dfs",
    "online_dfs",
    "long_path_dfs2",
    "DfsTrace",
    "rotation_closure",
    "posa_check",
    "boosters",
    "is_expander",
    "ExpanderQuery",
    "audit_properties",
    "sparse_backbone",
    "exact_hamiltonian",
    "rotation_extension_search",
    "augment_with_boosters",
    "hitting_time",
    "MinDegreeAtLeast",
    "Connected",
    "HasPathAtLeast",
    "ExperimentConfig",
    "TrialRunner",
    "get_experiment",
    "tail_bounds",
    "LabSettings",
    "get_settings",
    "override_settings",
    "RgLabError",
    "InvalidInputError",
    "InvalidRotationError",
    "CapacityError",
    "StreamUnderflowError",
    "NoHittingTimeError",
    "InvariantViolationError",
]
