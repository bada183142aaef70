"""
Rotation-extension machinery.

This subsystem provides:
- elementary_rotation: rotate a path at a pivot, keeping its start
- rotation_closure / PosaClosure: reachable end vertices with witness paths
- posa_check / PosaReport: the containment N(R) ⊆ R- ∪ R+
- boosters: exact or closure-certified booster pairs
"""

from rglab.posa.boosters import BoosterMode, boosters, double_closure_pairs
from rglab.posa.closure import ClosureStrategy, PosaClosure, rotation_closure
from rglab.posa.posa_check import PosaReport, posa_check
from rglab.posa.rotation import elementary_rotation, rotate

__all__ = [
    "elementary_rotation",
    "rotate",
    "rotation_closure",
    "ClosureStrategy",
    "PosaClosure",
    "posa_check",
    "PosaReport",
    "boosters",
    "BoosterMode",
    "double_closure_pairs",
]
