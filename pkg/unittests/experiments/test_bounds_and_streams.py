"""
Unit tests for the tail-bound calculators, sprinkling and the Bernoulli
stream window and prefix-sum checks.
"""
from __future__ import annotations

import math

import numpy as np
import pytest

from rglab.exceptions import InvalidInputError
from rglab.experiments import (
    BoundKind,
    check_binomial_estimates,
    exact_tail,
    sprinkle_cycle,
    sprinkle_probability,
    tail_bounds,
    tail_point,
)
from rglab.experiments.bounds import DEFAULT_TAIL_GRID
from rglab.experiments.path_experiments import (
    component_bound,
    max_window_count,
    path_threshold,
    spanning_constant,
    stream_sum_check,
    stream_window_check,
    window_size,
)
from rglab.experiments.sprinkle import default_window
from rglab.graph import Path
from rglab.random_models import BernoulliStream


@pytest.mark.unit
def test_tail_bound_values() -> None:
    assert tail_bounds("chernoff_lower", n=100, p=0.5, a=0.0) == 1.0
    assert tail_bounds(BoundKind.CHEBYSHEV, a=2) == 0.25
    assert tail_bounds("chernoff_upper", n=10_000, p=0.1, a=0.2) == pytest.approx(math.exp(-40 / 3))
    assert tail_bounds("chernoff_upper", n=10_000, p=0.1, a=0.2) == pytest.approx(1.6e-6, rel=0.05)
    assert tail_bounds("trivial", n=10, p=0.1, k=2) == pytest.approx((math.e / 2) ** 2)
    assert tail_bounds("binomial_lower", n=10, k=2) == pytest.approx(25.0)
    assert tail_bounds("binomial_upper", n=10, k=2) == pytest.approx((5 * math.e) ** 2)
    assert tail_bounds("binomial_ratio", n=10, k=5, x=2) == pytest.approx(0.25)
    assert tail_bounds("binomial_shift", n=10, k=5, x=2) == pytest.approx(math.exp(-1.0))


@pytest.mark.unit
@pytest.mark.parametrize(
    "kind, params",
    [
        ("chernoff_lower", {"n": 10, "p": 0.5, "a": -0.1}),
        ("chernoff_upper", {"n": 10, "p": 0.5, "a": 1.0}),
        ("chernoff_upper", {"n": 10, "p": 0.5, "a": 0.0}),
        ("chernoff_upper", {"n": 10, "p": 1.5, "a": 0.5}),
        ("trivial", {"n": 10, "p": 0.5, "k": 0}),
        ("chebyshev", {"a": 0}),
        ("chebyshev", {}),
        ("binomial_lower", {"n": 5, "k": 6}),
        ("binomial_ratio", {"n": 10, "k": 3, "x": 4}),
    ],
)
def test_out_of_range_parameters_are_rejected(kind: str, params: dict[str, float]) -> None:
    with pytest.raises(InvalidInputError):
        tail_bounds(kind, **params)


@pytest.mark.unit
def test_unknown_bound_kind() -> None:
    with pytest.raises(ValueError):
        tail_bounds("markov", a=1.0)


@pytest.mark.unit
@pytest.mark.parametrize("n, p, a", DEFAULT_TAIL_GRID)
def test_exact_tails_respect_the_bounds(n: int, p: float, a: float) -> None:
    point = tail_point(n, p, a)
    assert point.exact_lower <= point.bound_lower
    assert point.exact_upper <= point.bound_upper
    assert point.exact_trivial <= point.bound_trivial
    assert (point.exact_lower, point.exact_upper, point.exact_trivial) == exact_tail(n, p, a)


@pytest.mark.unit
def test_exact_tail_of_a_degenerate_binomial() -> None:
    lower, upper, trivial = exact_tail(10, 1.0, 0.5)
    assert lower == 0.0
    assert upper == 0.0
    assert trivial == 0.0


@pytest.mark.unit
def test_binomial_coefficient_estimates_hold_exactly() -> None:
    assert check_binomial_estimates(60) == []


@pytest.mark.unit
def test_path_experiment_constants() -> None:
    assert round(spanning_constant(0.1), 2) == 115.13
    assert spanning_constant(0.9) == pytest.approx(0.585, abs=1e-3)
    assert path_threshold(100_000, 0.2) == pytest.approx(800.0)
    assert component_bound(100_000, 0.2) == pytest.approx(175 * math.log(100_000))
    assert window_size(100, 0.5) == math.ceil(28 * math.log(100))
    with pytest.raises(InvalidInputError):
        spanning_constant(0.0)
    with pytest.raises(InvalidInputError):
        spanning_constant(1.0)


@pytest.mark.unit
def test_max_window_count() -> None:
    assert max_window_count(np.array([0, 3, 4, 9]), 5) == 3
    assert max_window_count(np.array([], dtype=np.int64), 5) == 0
    assert max_window_count(np.array([0, 5, 10]), 5) == 1
    assert max_window_count(np.arange(20), 7) == 7


@pytest.mark.unit
def test_zero_streams_satisfy_both_statements() -> None:
    k, most, holds = stream_window_check(BernoulliStream(0.0, seed=1), 100, 0.2)
    assert (k, most, holds) == (window_size(100, 0.2), 0, True)
    ones, deviation, holds = stream_sum_check(BernoulliStream(0.0, seed=1), 100, 0.2)
    assert ones == 0
    assert deviation == pytest.approx(0.2 * 1.2 * 100 / 2)
    assert holds


@pytest.mark.unit
def test_full_stream_breaks_the_window_statement() -> None:
    k, most, holds = stream_window_check(BernoulliStream(1.0, seed=0), 100, 0.5)
    assert most == min(k * 100, 100 * 99 // 2)
    assert not holds


@pytest.mark.unit
def test_sprinkle_probability() -> None:
    assert sprinkle_probability(0.5, 0.0) == pytest.approx(0.5)
    assert sprinkle_probability(0.3, 0.3) == pytest.approx(0.0)
    assert sprinkle_probability(1.0, 1.0) == 0.0
    p, p2 = 0.01, 0.002
    p1 = sprinkle_probability(p, p2)
    assert (1 - p1) * (1 - p2) == pytest.approx(1 - p)
    with pytest.raises(InvalidInputError):
        sprinkle_probability(0.1, 0.2)


@pytest.mark.unit
def test_sprinkle_closes_the_widest_pair() -> None:
    path = Path(range(20))
    cycle = sprinkle_cycle(path, 20, 1.0, seed=0, window=3)
    assert cycle is not None
    assert cycle.vertices == tuple(range(20))
    assert cycle.length == 20


@pytest.mark.unit
def test_sprinkle_without_edges_or_room() -> None:
    assert sprinkle_cycle(Path(range(20)), 20, 0.0, seed=0, window=3) is None
    assert sprinkle_cycle(Path([0, 1]), 5, 1.0, seed=0, window=3) is None
    with pytest.raises(InvalidInputError):
        sprinkle_cycle(Path([0, 1, 7]), 5, 0.5, seed=0)
    with pytest.raises(InvalidInputError):
        sprinkle_cycle(Path(range(10)), 10, 0.5, seed=0, window=0)


@pytest.mark.unit
@pytest.mark.parametrize("seed", range(10))
def test_sprinkled_cycles_are_closed_by_window_pairs(seed: int) -> None:
    n, w = 200, 12
    path = Path(np.random.default_rng(seed).permutation(n).tolist())
    cycle = sprinkle_cycle(path, n, 0.05, seed=seed, window=w)
    if cycle is None:
        return
    start = path.vertices.index(cycle.vertices[0])
    end = path.vertices.index(cycle.vertices[-1])
    assert start < w
    assert end >= n - w
    assert cycle.vertices == path.vertices[start : end + 1]
    assert cycle.length >= n - 2 * w + 2


@pytest.mark.unit
def test_default_window() -> None:
    assert default_window(10) == 5
    assert default_window(2000) == 159
    assert default_window(1) == 1
