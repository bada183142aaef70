"""
Graph core for the random graph laboratory.

This subsystem provides:
- Graph / DiGraph: immutable simple (di)graphs with sorted adjacency
- Path / Cycle: vertex sequences validated against a host graph
- Set primitives: external_neighborhood, edges_between, edges_within
- connected_components / is_connected
- Edge-list reading and writing
- Named families (complete, cycle, path, Petersen, ...) for fixtures
"""

from rglab.graph.edge_list import format_edge_list, parse_edge_list, read_edge_list, write_edge_list
from rglab.graph.graph_model import Cycle, DiGraph, Graph, Path
from rglab.graph.graph_ops import (
    connected_components,
    edges_between,
    edges_within,
    external_neighborhood,
    is_connected,
)

__all__ = [
    "Graph",
    "DiGraph",
    "Path",
    "Cycle",
    "external_neighborhood",
    "edges_between",
    "edges_within",
    "connected_components",
    "is_connected",
    "parse_edge_list",
    "read_edge_list",
    "format_edge_list",
    "write_edge_list",
]
