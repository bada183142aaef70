"""
Hamilton cycle solvers.

This subsystem provides:
- exact_hamiltonian: backtracking decision with a certified witness (small n)
- exact_longest_path / longest_path_witness: subset-DP longest path oracles
- rotation_extension_search: budgeted rotation-extension heuristic
- augment_with_boosters: booster-by-booster augmentation of a sparse backbone
- HamResult / HamStatus / HamStats: result models
"""

from rglab.hamilton.booster_pipeline import augment_with_boosters
from rglab.hamilton.exact import (
    exact_hamiltonian,
    exact_longest_path,
    has_hamiltonian_cycle_dp,
    longest_path_dp,
    longest_path_witness,
)
from rglab.hamilton.ham_models import HamResult, HamStats, HamStatus, certify_cycle
from rglab.hamilton.rotation_search import RotationSearch, default_budget, rotation_extension_search

__all__ = [
    "HamResult",
    "HamStats",
    "HamStatus",
    "certify_cycle",
    "exact_hamiltonian",
    "exact_longest_path",
    "longest_path_witness",
    "has_hamiltonian_cycle_dp",
    "longest_path_dp",
    "rotation_extension_search",
    "RotationSearch",
    "default_budget",
    "augment_with_boosters",
]
