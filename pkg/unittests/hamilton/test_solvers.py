"""
Unit tests for the Hamiltonicity solvers: the exact oracles, the
rotation-extension search and booster augmentation.
"""
from __future__ import annotations

import itertools

import pytest

from rglab.exceptions import CapacityError, InvalidInputError, InvariantViolationError
from rglab.graph import Cycle, Graph
from rglab.graph.families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from rglab.hamilton import (
    HamStatus,
    augment_with_boosters,
    certify_cycle,
    exact_hamiltonian,
    exact_longest_path,
    has_hamiltonian_cycle_dp,
    longest_path_witness,
    rotation_extension_search,
)
from rglab.random_models import gnp


def _brute_longest_path(g: Graph) -> int:
    best = 0
    for size in range(2, g.n + 1):
        for combo in itertools.permutations(range(g.n), size):
            if all(g.has_edge(combo[i], combo[i + 1]) for i in range(size - 1)):
                best = size - 1
                break
    return best


@pytest.mark.unit
@pytest.mark.parametrize(
    ("graph", "expected"),
    [
        (cycle_graph(7), True),
        (complete_graph(6), True),
        (complete_bipartite(3, 3), True),
        (petersen_graph(), False),
        (complete_bipartite(2, 3), False),
        (path_graph(5), False),
        (Graph(2, [(0, 1)]), False),
    ],
)
def test_exact_hamiltonian_fixtures(graph: Graph, expected: bool) -> None:
    res = exact_hamiltonian(graph)
    assert res.is_hamiltonian is expected
    assert res.method == "exact"
    if expected:
        cycle = res.cycle_object()
        assert cycle is not None and cycle.is_spanning(graph.n) and cycle.is_cycle_in(graph)
    else:
        assert res.status is HamStatus.NOT_HAMILTONIAN and res.cycle is None


@pytest.mark.unit
def test_exact_hamiltonian_agrees_with_dp() -> None:
    for seed in range(40):
        g = gnp(9, 0.4, seed=seed)
        assert exact_hamiltonian(g).is_hamiltonian is has_hamiltonian_cycle_dp(g.adjacency_masks())


@pytest.mark.unit
def test_exact_hamiltonian_cap() -> None:
    with pytest.raises(CapacityError) as info:
        exact_hamiltonian(cycle_graph(12), cap=10)
    assert info.value.cap == 10 and info.value.n == 12


@pytest.mark.unit
def test_longest_path_oracles() -> None:
    assert exact_longest_path(path_graph(6)) == 5
    assert exact_longest_path(star_graph(4)) == 2
    assert exact_longest_path(petersen_graph()) == 9
    assert exact_longest_path(Graph(3)) == 0
    assert longest_path_witness(Graph(0)) is None
    for seed in range(10):
        g = gnp(7, 0.3, seed=seed)
        length = exact_longest_path(g)
        assert length == _brute_longest_path(g)
        witness = longest_path_witness(g)
        assert witness is not None and witness.length == length
        witness.validate(g)
    with pytest.raises(CapacityError):
        exact_longest_path(Graph(20), cap=16)


@pytest.mark.unit
def test_certify_cycle() -> None:
    assert certify_cycle([0, 1, 2, 3], cycle_graph(4)) == [0, 1, 2, 3]
    with pytest.raises(InvariantViolationError):
        certify_cycle([0, 2, 1, 3], cycle_graph(4))
    with pytest.raises(InvariantViolationError):
        certify_cycle([0, 1, 2], cycle_graph(4))


@pytest.mark.unit
def test_rotation_search_small_fixtures() -> None:
    res = rotation_extension_search(cycle_graph(6), seed=1)
    assert res.is_hamiltonian and res.stats.rotations == 0

    res = rotation_extension_search(petersen_graph(), budget=500, seed=3)
    assert res.status is HamStatus.NOT_FOUND

    res = rotation_extension_search(star_graph(5), seed=0)
    assert res.status is HamStatus.NOT_FOUND and res.stats.rotations == 0


@pytest.mark.unit
def test_rotation_search_random_graphs() -> None:
    for seed in range(3):
        g = gnp(200, 0.08, seed=seed)
        res = rotation_extension_search(g, seed=seed)
        assert res.is_hamiltonian
        cycle = Cycle(res.cycle or [])
        assert cycle.is_spanning(200) and cycle.is_cycle_in(g)


@pytest.mark.unit
def test_rotation_search_never_contradicts_exact() -> None:
    for seed in range(25):
        g = gnp(10, 0.4, seed=seed)
        res = rotation_extension_search(g, seed=seed)
        if res.is_hamiltonian:
            assert exact_hamiltonian(g).is_hamiltonian
        assert res.status is not HamStatus.NOT_HAMILTONIAN


@pytest.mark.unit
@pytest.mark.parametrize("n", [10, 40])
def test_augmentation_closes_a_hamilton_path(n: int) -> None:
    res = augment_with_boosters(path_graph(n), cycle_graph(n), seed=5)
    assert res.is_hamiltonian
    assert res.added_edges == [(0, n - 1)]
    assert res.stats.boosters_added == 1
    cycle = res.cycle_object()
    assert cycle is not None and cycle.is_cycle_in(cycle_graph(n))


@pytest.mark.unit
def test_augmentation_stays_inside_host() -> None:
    for seed in range(5):
        host = gnp(12, 0.5, seed=seed)
        if not exact_hamiltonian(host).is_hamiltonian:
            continue
        backbone = Graph(12, [e for i, e in enumerate(host.edges()) if i % 2 == 0])
        res = augment_with_boosters(backbone, host, seed=seed)
        if res.is_hamiltonian:
            cycle = res.cycle_object()
            assert cycle is not None and cycle.is_cycle_in(host)
        assert len(res.added_edges) <= 12
        for u, v in res.added_edges:
            assert host.has_edge(u, v) and not backbone.has_edge(u, v)


@pytest.mark.unit
def test_augmentation_without_boosters() -> None:
    res = augment_with_boosters(path_graph(6), path_graph(6))
    assert res.status is HamStatus.NOT_FOUND and res.added_edges == []
    with pytest.raises(InvalidInputError):
        augment_with_boosters(cycle_graph(5), path_graph(5))
