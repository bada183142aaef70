"""
DFS engine.

This subsystem provides:
- run_dfs / run_directed_dfs: S/U/T depth-first search on a given (di)graph
- online_dfs: the same search exposing G(n,p) or D(n,p) from a Bernoulli stream
- DfsTrace: compact event log with epochs, snapshots and the longest U-path
- long_path_dfs2 / directed_long_path: long paths read off a DFS run
- cycle_from_path / directed_cycle_from_path: close a long path into a cycle
- verify_dfs_trace: independent replay checker for the search invariants
- dfs_path_guarantee: k-set expansion versus DFS path length
"""

from rglab.dfs.dfs_checks import PathGuarantee, dfs_path_guarantee, verify_dfs_trace
from rglab.dfs.dfs_engine import (
    LongPathResult,
    cycle_from_path,
    directed_cycle_from_path,
    directed_long_path,
    long_path_dfs2,
    online_dfs,
    run_dfs,
    run_directed_dfs,
)
from rglab.dfs.dfs_trace import DfsState, DfsTrace, Epoch, Move
from rglab.dfs.rank_set import RankSet

__all__ = [
    "run_dfs",
    "run_directed_dfs",
    "online_dfs",
    "long_path_dfs2",
    "LongPathResult",
    "directed_long_path",
    "cycle_from_path",
    "directed_cycle_from_path",
    "DfsTrace",
    "DfsState",
    "Epoch",
    "Move",
    "RankSet",
    "verify_dfs_trace",
    "dfs_path_guarantee",
    "PathGuarantee",
]
