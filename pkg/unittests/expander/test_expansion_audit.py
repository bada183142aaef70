"""
Unit tests for expansion verdicts, the P1-P7 audit and the sparse
backbone. Every failing audit verdict is rechecked from its witness alone.
"""
from __future__ import annotations

import itertools

import pytest

from rglab.exceptions import CapacityError, InvalidInputError
from rglab.expander import (
    AuditReport,
    BackboneConfig,
    Certainty,
    CheckMode,
    ExpanderQuery,
    audit_properties,
    is_expander,
    small_vertices,
    sparse_backbone,
)
from rglab.graph import Graph, edges_between, edges_within, external_neighborhood
from rglab.graph.families import complete_graph, cycle_graph, disjoint_union, path_graph, star_graph
from rglab.random_models import gnp


def _brute_expands(g: Graph, k: int, alpha: float) -> bool:
    return all(
        len(external_neighborhood(g, U)) >= alpha * len(U)
        for size in range(1, min(k, g.n) + 1)
        for U in itertools.combinations(range(g.n), size)
    )


def _is_walk(g: Graph, seq: list[int], closed: bool) -> bool:
    pairs = list(zip(seq, seq[1:]))
    if closed:
        pairs.append((seq[-1], seq[0]))
    return len(set(seq)) == len(seq) and all(g.has_edge(a, b) for a, b in pairs)


def _recheck_witness(g: Graph, report: AuditReport, name: str) -> None:
    verdict = report.properties[name]
    th = report.thresholds
    small = set(report.small_set)
    assert verdict.witness, f"{name} failed without a witness"
    if name == "P1":
        (v,) = verdict.witness[0]
        assert g.degree(v) > th.max_degree or g.degree(v) < 2
    elif name == "P2":
        assert len(verdict.witness[0]) > th.small_size
    elif name == "P3":
        seq = verdict.witness[0]
        as_path = _is_walk(g, seq, closed=False) and seq[0] in small and seq[-1] in small and len(seq) <= 5
        as_cycle = len(seq) in (3, 4) and _is_walk(g, seq, closed=True) and bool(small & set(seq))
        assert as_path or as_cycle
    elif name == "P4":
        U = verdict.witness[0]
        assert len(U) <= th.small_set_size
        assert edges_within(g, U) > len(U) * th.density
    elif name == "P5":
        U, W = verdict.witness
        assert len(U) <= th.small_set_size and len(W) <= len(U) * th.spread
        assert edges_between(g, U, W) > th.d0 * len(U) / 2
    else:
        U, W = verdict.witness
        required = th.crossing_edges if name == "P6" else 1
        assert len(U) == len(W) == th.big_set_size
        assert edges_between(g, U, W) < required


@pytest.mark.unit
def test_exact_expansion_examples() -> None:
    verdict = is_expander(complete_graph(9), ExpanderQuery(k=3, alpha=2))
    assert verdict.holds and verdict.certainty is Certainty.PROVEN and verdict.mode is CheckMode.EXACT

    verdict = is_expander(path_graph(6), ExpanderQuery(k=2, alpha=2))
    assert not verdict.holds and verdict.witness == [0]
    assert verdict.certainty is Certainty.REFUTED


@pytest.mark.unit
def test_exact_matches_brute_force() -> None:
    for seed in range(12):
        g = gnp(9, 0.45, seed=seed)
        for k, alpha in [(1, 2), (2, 2), (3, 1.5), (4, 1)]:
            verdict = is_expander(g, ExpanderQuery(k=k, alpha=alpha))
            assert verdict.holds is _brute_expands(g, k, alpha)
            if not verdict.holds:
                U = verdict.witness or []
                assert 1 <= len(U) <= k
                assert len(external_neighborhood(g, U)) < alpha * len(U)


@pytest.mark.unit
def test_sampled_mode_is_refutation_sound() -> None:
    for seed in range(10):
        g = gnp(14, 0.35, seed=seed)
        q = ExpanderQuery(k=3, alpha=2)
        exact = is_expander(g, q)
        sampled = is_expander(g, q, "sampled", samples=300, seed=seed)
        if exact.holds:
            assert sampled.holds and sampled.certainty is Certainty.NOT_REFUTED
        if not sampled.holds:
            U = sampled.witness or []
            assert len(external_neighborhood(g, U)) < q.alpha * len(U)


@pytest.mark.unit
def test_sampled_mode_finds_small_components() -> None:
    g = disjoint_union([complete_graph(5), complete_graph(5)])
    verdict = is_expander(g, ExpanderQuery(k=5, alpha=1), "sampled", samples=10)
    assert not verdict.holds
    assert verdict.witness == [0, 1, 2, 3, 4]


@pytest.mark.unit
def test_expansion_argument_errors() -> None:
    with pytest.raises(CapacityError):
        is_expander(cycle_graph(30), ExpanderQuery(k=2, alpha=1), cap=20)
    with pytest.raises(InvalidInputError):
        is_expander(cycle_graph(8), ExpanderQuery(k=3, alpha=2), "structural")
    with pytest.raises(ValueError):
        ExpanderQuery(k=0, alpha=2)


@pytest.mark.unit
def test_structural_mode_reports_failed_conditions() -> None:
    verdict = is_expander(path_graph(12), ExpanderQuery(k=3, alpha=2), "structural", samples=50)
    assert not verdict.holds
    assert verdict.mode is CheckMode.STRUCTURAL
    assert "min_degree" in verdict.failed_conditions


@pytest.mark.unit
def test_small_vertices() -> None:
    assert small_vertices(star_graph(3), 2) == {1, 2, 3}
    assert small_vertices(complete_graph(5), 4) == frozenset()


@pytest.mark.unit
def test_audit_star() -> None:
    report = audit_properties(star_graph(5), 2)
    assert set(report.properties) == {f"P{i}" for i in range(1, 8)}
    assert not report.properties["P1"].holds
    assert report.properties["P3"].witness == [[1, 0, 2]]
    assert report.properties["P6"].mode is CheckMode.VACUOUS
    assert not report.all_hold
    for name, verdict in report.properties.items():
        if not verdict.holds:
            _recheck_witness(star_graph(5), report, name)


@pytest.mark.unit
def test_audit_dense_graph_fails_p4_p5() -> None:
    g = complete_graph(12)
    report = audit_properties(g, 4)
    assert report.properties["P4"].mode is CheckMode.EXACT
    assert not report.holds("P4", "P5")
    _recheck_witness(g, report, "P4")
    _recheck_witness(g, report, "P5")


@pytest.mark.unit
def test_audit_p3_short_cycle() -> None:
    g = Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
    report = audit_properties(g, 3)
    assert not report.properties["P3"].holds
    _recheck_witness(g, report, "P3")


@pytest.mark.unit
def test_audit_witnesses_recheck_on_random_graphs() -> None:
    for seed, (n, p) in enumerate([(12, 0.3), (14, 0.5), (300, 0.1), (400, 0.02)]):
        g = gnp(n, p, seed=seed)
        report = audit_properties(g, 4, seed=seed, samples=100)
        expected = CheckMode.EXACT if n <= 20 else CheckMode.SAMPLED
        assert report.properties["P4"].mode is expected
        for name, verdict in report.properties.items():
            if not verdict.holds:
                _recheck_witness(g, report, name)


@pytest.mark.unit
def test_sparse_backbone() -> None:
    assert sparse_backbone(cycle_graph(8), BackboneConfig(d0=3, seed=1)) == cycle_graph(8)

    g = gnp(120, 0.15, seed=3)
    cfg = BackboneConfig(d0=4, seed=9)
    backbone = sparse_backbone(g, cfg)
    assert backbone == sparse_backbone(g, cfg)
    assert backbone.edge_count <= cfg.d0 * g.n
    assert set(backbone.edges()) <= set(g.edges())
    small = small_vertices(g, cfg.d0)
    for v in range(g.n):
        assert backbone.degree(v) >= min(g.degree(v), cfg.d0)
        if v in small:
            assert backbone.neighbors(v) == g.neighbors(v)
