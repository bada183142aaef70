"""
Unit tests for the graph core: construction rules, set primitives,
components and the edge-list format.

The eight-vertex fixture is the two-component graph with 1-indexed edges
1-3, 3-8, 8-1, 2-4, 4-7, 7-2, 4-6, 6-5, 2-6; tests below use its
0-indexed labels.
"""
from __future__ import annotations

import itertools

import numpy as np
import pytest

from rglab.exceptions import InvalidInputError
from rglab.graph import (
    Cycle,
    DiGraph,
    Graph,
    Path,
    connected_components,
    edges_between,
    edges_within,
    external_neighborhood,
    format_edge_list,
    is_connected,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from rglab.graph.families import complete_graph, cycle_graph, path_graph, petersen_graph, two_component_fixture
from rglab.random_models import gnp


def _zero(*one_indexed: int) -> set[int]:
    return {v - 1 for v in one_indexed}


def _union_find_components(g: Graph) -> set[frozenset[int]]:
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges():
        parent[find(u)] = find(v)
    groups: dict[int, set[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), set()).add(v)
    return {frozenset(s) for s in groups.values()}


@pytest.mark.unit
def test_construction_rejects_loops_duplicates_and_range() -> None:
    with pytest.raises(InvalidInputError):
        Graph(3, [(1, 1)])
    with pytest.raises(InvalidInputError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(InvalidInputError):
        Graph(3, [(0, 3)])
    with pytest.raises(InvalidInputError):
        DiGraph(3, [(2, 2)])


@pytest.mark.unit
def test_adjacency_is_sorted_and_symmetric() -> None:
    g = Graph(5, [(4, 0), (2, 0), (3, 0), (1, 0)])
    assert g.neighbors(0) == (1, 2, 3, 4)
    assert all(g.has_edge(v, 0) for v in range(1, 5))
    assert g.edge_count == sum(g.degrees()) // 2 == 4
    assert list(g.edges()) == [(0, 1), (0, 2), (0, 3), (0, 4)]


@pytest.mark.unit
def test_from_arrays_matches_constructor() -> None:
    us = np.array([0, 1, 2])
    vs = np.array([1, 2, 3])
    assert Graph.from_arrays(4, us, vs) == path_graph(4)


@pytest.mark.unit
def test_external_neighborhood_examples() -> None:
    g = two_component_fixture()
    assert external_neighborhood(g, _zero(1)) == _zero(3, 8)
    assert external_neighborhood(g, set()) == frozenset()
    with pytest.raises(InvalidInputError):
        external_neighborhood(g, {8})


@pytest.mark.unit
def test_external_neighborhood_matches_scan() -> None:
    g = gnp(10, 0.3, seed=11)
    for U in itertools.combinations(range(10), 3):
        expected = {v for v in range(10) if v not in U and any(g.has_edge(v, u) for u in U)}
        assert external_neighborhood(g, U) == expected


@pytest.mark.unit
def test_edges_between_examples() -> None:
    g = two_component_fixture()
    assert edges_between(g, _zero(2, 4), _zero(6, 7)) == 4
    assert edges_between(g, set(), _zero(6, 7)) == 0
    assert edges_between(complete_graph(6), {0, 1}, {2, 3, 4}) == 6
    with pytest.raises(InvalidInputError):
        edges_between(g, {0, 1}, {1, 2})


@pytest.mark.unit
def test_edges_within_examples() -> None:
    g = two_component_fixture()
    assert edges_within(g, _zero(1, 3, 8)) == 3
    assert edges_within(g, {4}) == 0
    assert edges_within(g, set()) == 0

    h = gnp(12, 0.4, seed=5)
    rng = np.random.default_rng(3)
    for _ in range(20):
        U = {int(v) for v in rng.choice(12, size=5, replace=False)}
        expected = sum(1 for a, b in itertools.combinations(sorted(U), 2) if h.has_edge(a, b))
        assert edges_within(h, U) == expected


@pytest.mark.unit
def test_edge_counting_identities() -> None:
    g = gnp(9, 0.5, seed=2)
    for r in range(10):
        for U in itertools.combinations(range(9), r):
            rest = set(range(9)) - set(U)
            assert edges_between(g, U, rest) == edges_between(g, rest, U)
            assert edges_within(g, U) + edges_within(g, rest) + edges_between(g, U, rest) == g.edge_count
            for v in external_neighborhood(g, U):
                assert v not in U
                assert any(g.has_edge(v, u) for u in U)


@pytest.mark.unit
def test_connected_components() -> None:
    comps = connected_components(two_component_fixture())
    assert set(comps) == {frozenset(_zero(1, 3, 8)), frozenset(_zero(2, 4, 5, 6, 7))}
    assert connected_components(Graph(5)) == [frozenset({v}) for v in range(5)]
    g = gnp(50, 0.05, seed=8)
    assert set(connected_components(g)) == _union_find_components(g)
    assert is_connected(Graph(1))
    assert not is_connected(two_component_fixture())


@pytest.mark.unit
def test_set_primitives_agree_with_networkx() -> None:
    nx = pytest.importorskip("networkx")
    rng = np.random.default_rng(17)
    for seed in range(6):
        g = gnp(40, 0.06, seed=seed)
        ref = nx.Graph()
        ref.add_nodes_from(range(g.n))
        ref.add_edges_from(g.edges())
        assert set(connected_components(g)) == {frozenset(c) for c in nx.connected_components(ref)}
        assert is_connected(g) == nx.is_connected(ref)
        U = {int(v) for v in rng.choice(g.n, size=12, replace=False)}
        W = set(range(g.n)) - U
        assert external_neighborhood(g, U) == set(nx.node_boundary(ref, U))
        assert edges_between(g, U, W) == nx.cut_size(ref, U, W)
        assert edges_within(g, U) == ref.subgraph(U).number_of_edges()


@pytest.mark.unit
def test_path_and_cycle_validation() -> None:
    g = cycle_graph(5)
    Path([0, 1, 2]).validate(g)
    assert Path([0, 1, 2]).length == 2
    assert Path([3]).length == 0
    with pytest.raises(InvalidInputError):
        Path([0, 2]).validate(g)
    with pytest.raises(InvalidInputError):
        Path([0, 1, 0])
    c = Cycle([0, 1, 2, 3, 4])
    assert c.is_cycle_in(g) and c.is_spanning(5)
    assert not Cycle([0, 1, 2]).is_cycle_in(g)
    with pytest.raises(InvalidInputError):
        Cycle([0, 1])


@pytest.mark.unit
def test_edge_list_text(tmp_path) -> None:
    g = petersen_graph()
    text = format_edge_list(g)
    assert text.splitlines()[0] == "10 15"
    target = tmp_path / "nested" / "petersen.txt"
    write_edge_list(g, target)
    assert read_edge_list(target) == g

    d = parse_edge_list("3 2 directed\n0 1\n2 1\n")
    assert isinstance(d, DiGraph)
    assert d.has_arc(2, 1) and not d.has_arc(1, 2)

    assert parse_edge_list("# comment\n3 1\n\n0 2  # trailing\n") == Graph(3, [(0, 2)])


@pytest.mark.unit
@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 2\n0 1\n", "3 1\n1 0\n", "3 2\n0 1\n0 1\n", "3 1\n1 1\n", "3 1 undirected\n0 1\n", "x y\n"],
)
def test_edge_list_rejects_malformed(text: str) -> None:
    with pytest.raises(InvalidInputError):
        parse_edge_list(text)
