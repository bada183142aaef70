"""
Unit tests for the S/U/T depth-first search.

The golden trace is the identity-order run on the eight-vertex
two-component fixture: sixteen steps, epochs 1-6 and 7-16.
"""
from __future__ import annotations

import itertools
import math

import numpy as np
import pytest

from rglab.dfs import (
    Move,
    cycle_from_path,
    dfs_path_guarantee,
    directed_long_path,
    long_path_dfs2,
    online_dfs,
    run_dfs,
    run_directed_dfs,
    verify_dfs_trace,
)
from rglab.exceptions import CapacityError, InvalidInputError, InvariantViolationError, StreamUnderflowError
from rglab.graph import DiGraph, Graph, Path, connected_components
from rglab.graph.families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    transitive_tournament,
    two_component_fixture,
)
from rglab.random_models import BernoulliStream, dnp, gnp, pair_count
from rglab.settings import override_settings

P, Q = Move.PUSH, Move.POP

# (vertex, move) per step, 0-indexed labels
GOLDEN_EVENTS = [
    (0, P), (2, P), (7, P), (7, Q), (2, Q), (0, Q),
    (1, P), (3, P), (5, P), (4, P), (4, Q), (5, Q), (6, P), (6, Q), (3, Q), (1, Q),
]  # fmt: skip

# (S, U, T) after each step, 1-indexed as in the published table
GOLDEN_TABLE = [
    ((), (1,), (2, 3, 4, 5, 6, 7, 8)),
    ((), (1, 3), (2, 4, 5, 6, 7, 8)),
    ((), (1, 3, 8), (2, 4, 5, 6, 7)),
    ((8,), (1, 3), (2, 4, 5, 6, 7)),
    ((3, 8), (1,), (2, 4, 5, 6, 7)),
    ((1, 3, 8), (), (2, 4, 5, 6, 7)),
    ((1, 3, 8), (2,), (4, 5, 6, 7)),
    ((1, 3, 8), (2, 4), (5, 6, 7)),
    ((1, 3, 8), (2, 4, 6), (5, 7)),
    ((1, 3, 8), (2, 4, 6, 5), (7,)),
    ((1, 3, 5, 8), (2, 4, 6), (7,)),
    ((1, 3, 5, 6, 8), (2, 4), (7,)),
    ((1, 3, 5, 6, 8), (2, 4, 7), ()),
    ((1, 3, 5, 6, 7, 8), (2, 4), ()),
    ((1, 3, 4, 5, 6, 7, 8), (2,), ()),
    ((1, 2, 3, 4, 5, 6, 7, 8), (), ()),
]


def _one_indexed(state) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    return (
        tuple(sorted(v + 1 for v in state.S)),
        tuple(v + 1 for v in state.U),
        tuple(sorted(v + 1 for v in state.T)),
    )


def _pairs_joined(g: Graph, k: int) -> bool:
    """Every two disjoint k-sets are joined by an edge."""
    masks = g.adjacency_masks()
    full = (1 << g.n) - 1
    for subset in itertools.combinations(range(g.n), k):
        inside = 0
        reach = 0
        for v in subset:
            inside |= 1 << v
            reach |= masks[v]
        if (full & ~inside & ~reach).bit_count() >= k:
            return False
    return True


@pytest.mark.unit
def test_golden_trace() -> None:
    trace = run_dfs(two_component_fixture())
    assert trace.events == GOLDEN_EVENTS
    assert trace.steps == 16
    assert [_one_indexed(trace.snapshot(step)) for step in range(1, 17)] == GOLDEN_TABLE
    assert [(e.start, e.end) for e in trace.epochs] == [(1, 6), (7, 16)]
    assert [sorted(v + 1 for v in e.vertices) for e in trace.epochs] == [[1, 3, 8], [2, 4, 5, 6, 7]]
    assert trace.max_u_path == Path([1, 3, 5, 4])
    assert trace.max_u_step == 10
    assert trace.balanced_step == 8
    assert trace.balanced_path() == Path([1, 3])
    assert list(trace.states())[1:] == [trace.snapshot(s) for s in range(1, 17)]
    assert verify_dfs_trace(trace, two_component_fixture()) == []


@pytest.mark.unit
def test_edgeless_graph() -> None:
    trace = run_dfs(Graph(4))
    assert len(trace.epochs) == 4
    assert all(len(e.vertices) == 1 for e in trace.epochs)
    assert trace.max_u_path is not None and trace.max_u_path.length == 0


@pytest.mark.unit
def test_epochs_are_components() -> None:
    for seed in range(5):
        g = gnp(30, 0.06, seed=seed)
        trace = run_dfs(g)
        assert set(trace.components()) == set(connected_components(g))
        assert verify_dfs_trace(trace, g) == []


@pytest.mark.unit
def test_custom_order_and_bad_order() -> None:
    g = two_component_fixture()
    trace = run_dfs(g, order=[7, 6, 5, 4, 3, 2, 1, 0])
    assert trace.events[0] == (7, Move.PUSH)
    assert verify_dfs_trace(trace, g) == []
    with pytest.raises(InvalidInputError):
        run_dfs(g, order=[0, 1, 2])
    with pytest.raises(InvalidInputError):
        run_dfs(g, order=[0, 0, 1, 2, 3, 4, 5, 6])


@pytest.mark.unit
def test_verifier_detects_s_t_edge() -> None:
    trace = run_dfs(two_component_fixture())
    wrong_host = two_component_fixture().with_edges([(0, 1)])
    violations = verify_dfs_trace(trace, wrong_host)
    assert any("joins S and T" in v for v in violations)


@pytest.mark.unit
def test_checked_mode_raises_on_violation(monkeypatch: pytest.MonkeyPatch) -> None:
    from rglab.dfs import dfs_engine

    monkeypatch.setattr(dfs_engine, "verify_dfs_trace", lambda *a, **k: ["forced"])
    with override_settings(check_invariants=True):
        with pytest.raises(InvariantViolationError) as info:
            run_dfs(path_graph(3))
    assert info.value.violations == ["forced"]


@pytest.mark.unit
def test_online_constant_streams() -> None:
    n = 12
    stream = BernoulliStream(0.0, seed=0)
    g, trace = online_dfs(n, stream)
    assert g == Graph(n)
    assert len(trace.epochs) == n
    assert stream.position == pair_count(n)

    stream = BernoulliStream(1.0, seed=0)
    g, trace = online_dfs(n, stream)
    assert g == complete_graph(n)
    assert trace.max_u == n
    assert stream.position == pair_count(n)


@pytest.mark.unit
def test_online_run_matches_offline_replay() -> None:
    with override_settings(check_invariants=True):
        for seed in range(10):
            g, trace = online_dfs(60, BernoulliStream(0.04, seed=seed))
            assert verify_dfs_trace(trace, g, online=True) == []
            assert run_dfs(g).events == trace.events
            assert trace.query_count + trace.tail_queries == pair_count(60)
            counts = trace.queries_at_step
            assert len(counts) == trace.steps + 1
            assert counts[0] == 0
            assert all(a <= b for a, b in zip(counts, counts[1:]))
            assert counts[-1] <= trace.query_count


@pytest.mark.unit
def test_online_without_materialize_keeps_the_forest() -> None:
    full, trace_full = online_dfs(80, BernoulliStream(0.03, seed=4))
    forest, trace = online_dfs(80, BernoulliStream(0.03, seed=4), materialize=False)
    assert trace.events == trace_full.events
    assert set(forest.edges()) <= set(full.edges())
    assert forest.edge_count == 80 - len(trace.epochs)


@pytest.mark.unit
def test_online_edge_count_matches_gnp() -> None:
    n, p, seeds = 100, 0.05, 300
    N = pair_count(n)
    counts = np.array([online_dfs(n, BernoulliStream(p, seed=s))[0].edge_count for s in range(seeds)])
    sigma = math.sqrt(N * p * (1 - p))
    assert abs(counts.mean() - N * p) < 5 * sigma / math.sqrt(seeds)
    assert 0.6 < counts.var() / sigma**2 < 1.4


@pytest.mark.unit
def test_online_stream_errors() -> None:
    used = BernoulliStream(0.5, seed=1)
    used.read()
    with pytest.raises(InvalidInputError):
        online_dfs(5, used)
    with pytest.raises(StreamUnderflowError):
        online_dfs(10, BernoulliStream(0.5, seed=1, length=20))


@pytest.mark.unit
def test_online_directed() -> None:
    n = 15
    stream = BernoulliStream(1.0, seed=0)
    d, trace = online_dfs(n, stream, directed=True)
    assert isinstance(d, DiGraph)
    assert d.arc_count == n * (n - 1)
    assert stream.position == n * (n - 1)
    assert trace.max_u == n

    d, trace = online_dfs(40, BernoulliStream(0.05, seed=2), directed=True)
    assert verify_dfs_trace(trace, d, online=True) == []
    assert trace.max_u_path is not None and trace.max_u_path.is_path_in(d)


@pytest.mark.unit
def test_long_path_dfs2_examples() -> None:
    res = long_path_dfs2(complete_graph(9))
    assert res.path is not None and res.path.length == 8

    for m in range(2, 6):
        g = complete_bipartite(m, m)
        res = long_path_dfs2(g)
        assert res.path is not None and res.path.length >= 2 * m - 3
        k = m // 2 + 1
        assert _pairs_joined(g, k)
        assert res.balanced_path is not None and res.balanced_path.length >= g.n - 2 * k + 1

    res = long_path_dfs2(disjoint_union([complete_graph(5), complete_graph(5)]))
    assert res.path is not None and res.path.length == 4
    assert set(res.path.vertices) <= set(range(5))


@pytest.mark.unit
def test_balanced_path_bound_on_random_graphs() -> None:
    for seed in range(8):
        g = gnp(10, 0.5, seed=seed)
        res = long_path_dfs2(g)
        for k in range(1, 6):
            if _pairs_joined(g, k):
                assert res.balanced_path is not None
                assert res.balanced_path.length >= g.n - 2 * k + 1
                assert res.balanced_s <= k - 1


@pytest.mark.unit
def test_expansion_path_guarantee() -> None:
    for seed in range(6):
        g = gnp(11, 0.35, seed=seed)
        for k in range(1, 6):
            assert dfs_path_guarantee(g, k).holds
    with pytest.raises(CapacityError):
        dfs_path_guarantee(Graph(20), 2)
    with pytest.raises(InvalidInputError):
        dfs_path_guarantee(Graph(5), 5)


@pytest.mark.unit
def test_cycle_from_path() -> None:
    n = 9
    cyc = cycle_from_path(cycle_graph(n), Path(range(n)), 1)
    assert cyc is not None and cyc.is_spanning(n) and cyc.is_cycle_in(cycle_graph(n))

    assert cycle_from_path(path_graph(8), Path(range(8)), 3) is None

    g = gnp(40, 0.3, seed=21)
    path = long_path_dfs2(g).path
    assert path is not None and len(path) >= 10
    cyc = cycle_from_path(g, path, 5)
    assert cyc is not None
    assert cyc.is_cycle_in(g)
    assert cyc.length >= path.length - 2 * (5 - 1)

    with pytest.raises(InvalidInputError):
        cycle_from_path(g, Path([0, 1, 2]), 2)


@pytest.mark.unit
def test_directed_long_path() -> None:
    path = directed_long_path(transitive_tournament(7))
    assert path == Path(range(7))

    path = directed_long_path(DiGraph(4))
    assert path is not None and len(path) == 1

    d = dnp(200, 3 / 200, seed=6)
    trace = run_directed_dfs(d)
    assert verify_dfs_trace(trace, d) == []
    assert trace.max_u_path is not None and trace.max_u_path.is_path_in(d)
