"""
Tail-bound and binomial-coefficient calculators.

:func:`tail_bounds` evaluates the analytic bounds; :func:`exact_tail` gives
the exact binomial tail through :mod:`scipy.stats` for comparison; and
:func:`check_binomial_estimates` verifies the three binomial-coefficient
estimates with exact integers over a range of ``n``.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import Any

from pydantic import BaseModel, Field
from scipy import stats

from rglab.exceptions import InvalidInputError


class BoundKind(str, Enum):
    CHERNOFF_LOWER = "chernoff_lower"
    CHERNOFF_UPPER = "chernoff_upper"
    TRIVIAL = "trivial"
    CHEBYSHEV = "chebyshev"
    BINOMIAL_LOWER = "binomial_lower"
    BINOMIAL_UPPER = "binomial_upper"
    BINOMIAL_RATIO = "binomial_ratio"
    BINOMIAL_SHIFT = "binomial_shift"


class TailPoint(BaseModel):
    """Exact, analytic and empirical tail probabilities at one ``(n, p, a)``."""

    n: int
    p: float
    a: float
    exact_lower: float = Field(..., description="Pr[X < (1-a)np]")
    exact_upper: float = Field(..., description="Pr[X > (1+a)np]")
    exact_trivial: float = Field(..., description="Pr[X >= k] with k = ceil((1+a)np)")
    bound_lower: float
    bound_upper: float
    bound_trivial: float
    empirical_lower: float | None = None
    empirical_upper: float | None = None
    empirical_trivial: float | None = None


def _need(value: Any, name: str) -> float:
    if value is None:
        raise InvalidInputError(f"missing parameter {name}", field=name, value=None)
    return float(value)


def _check_np(n: float, p: float) -> None:
    if n < 0 or int(n) != n:
        raise InvalidInputError(f"n must be a non-negative integer, got {n}", field="n", value=n)
    if not 0.0 <= p <= 1.0:
        raise InvalidInputError(f"p must lie in [0, 1], got {p}", field="p", value=p)


def _check_nk(n: float, k: float, x: float | None = None) -> None:
    if x is not None and not 1 <= x <= k:
        raise InvalidInputError(f"need 1 <= x <= k, got x={x}, k={k}", field="x", value=x)
    if not 1 <= k <= n:
        raise InvalidInputError(f"need 1 <= k <= n, got k={k}, n={n}", field="k", value=k)


def tail_bounds(kind: BoundKind | str, **params: float) -> float:
    """Evaluate one analytic bound.

    ============== ======================= ==================================
    kind           params                  value
    ============== ======================= ==================================
    chernoff_lower n, p, a (a >= 0)        exp(-a^2 np / 2)
    chernoff_upper n, p, a (0 < a < 1)     exp(-a^2 np / 3)
    trivial        n, p, k (k >= 1)        (e np / k)^k
    chebyshev      a (a > 0)               1 / a^2
    binomial_lower n, k                    (n / k)^k
    binomial_upper n, k                    (e n / k)^k
    binomial_ratio n, k, x                 (k / n)^x
    binomial_shift n, k, x                 exp(-k x / n)
    ============== ======================= ==================================

    Raises
    ------
    InvalidInputError
        Out-of-range or missing parameters.

    Examples
    --------
    >>> tail_bounds("chernoff_lower", n=100, p=0.5, a=0.0)
    1.0
    >>> tail_bounds("chebyshev", a=2)
    0.25
    """
    kind = BoundKind(kind)
    if kind in (BoundKind.CHERNOFF_LOWER, BoundKind.CHERNOFF_UPPER):
        n, p, a = _need(params.get("n"), "n"), _need(params.get("p"), "p"), _need(params.get("a"), "a")
        _check_np(n, p)
        if kind is BoundKind.CHERNOFF_LOWER:
            if a < 0:
                raise InvalidInputError(f"lower-tail Chernoff needs a >= 0, got {a}", field="a", value=a)
            return math.exp(-a * a * n * p / 2)
        if not 0 < a < 1:
            raise InvalidInputError(f"upper-tail Chernoff needs 0 < a < 1, got {a}", field="a", value=a)
        return math.exp(-a * a * n * p / 3)
    if kind is BoundKind.TRIVIAL:
        n, p, k = _need(params.get("n"), "n"), _need(params.get("p"), "p"), _need(params.get("k"), "k")
        _check_np(n, p)
        if k < 1:
            raise InvalidInputError(f"trivial bound needs k >= 1, got {k}", field="k", value=k)
        return (math.e * n * p / k) ** k
    if kind is BoundKind.CHEBYSHEV:
        a = _need(params.get("a"), "a")
        if a <= 0:
            raise InvalidInputError(f"Chebyshev needs a > 0, got {a}", field="a", value=a)
        return 1.0 / (a * a)
    n, k = _need(params.get("n"), "n"), _need(params.get("k"), "k")
    if kind is BoundKind.BINOMIAL_LOWER:
        _check_nk(n, k)
        return (n / k) ** k
    if kind is BoundKind.BINOMIAL_UPPER:
        _check_nk(n, k)
        return (math.e * n / k) ** k
    x = _need(params.get("x"), "x")
    _check_nk(n, k, x)
    if kind is BoundKind.BINOMIAL_RATIO:
        return (k / n) ** x
    return math.exp(-k * x / n)


def exact_tail(n: int, p: float, a: float) -> tuple[float, float, float]:
    """Exact ``Pr[X < (1-a)np]``, ``Pr[X > (1+a)np]`` and ``Pr[X >= ceil((1+a)np)]`` for ``X ~ Bin(n, p)``."""
    mu = n * p
    lower_cut = math.ceil((1 - a) * mu) - 1
    upper_cut = math.floor((1 + a) * mu)
    k = max(1, math.ceil((1 + a) * mu))
    lower = float(stats.binom.cdf(lower_cut, n, p)) if lower_cut >= 0 else 0.0
    upper = float(stats.binom.sf(upper_cut, n, p))
    trivial = float(stats.binom.sf(k - 1, n, p))
    return lower, upper, trivial


def tail_point(n: int, p: float, a: float) -> TailPoint:
    """Exact tails and their bounds at ``(n, p, a)`` with ``0 < a < 1``."""
    lower, upper, trivial = exact_tail(n, p, a)
    k = max(1, math.ceil((1 + a) * n * p))
    return TailPoint(
        n=n,
        p=p,
        a=a,
        exact_lower=lower,
        exact_upper=upper,
        exact_trivial=trivial,
        bound_lower=tail_bounds(BoundKind.CHERNOFF_LOWER, n=n, p=p, a=a),
        bound_upper=tail_bounds(BoundKind.CHERNOFF_UPPER, n=n, p=p, a=a),
        bound_trivial=tail_bounds(BoundKind.TRIVIAL, n=n, p=p, k=k),
    )


DEFAULT_TAIL_GRID: tuple[tuple[int, float, float], ...] = (
    (100, 0.5, 0.2),
    (100, 0.5, 0.5),
    (1000, 0.1, 0.2),
    (1000, 0.1, 0.5),
    (1000, 0.01, 0.5),
    (1000, 0.01, 0.9),
    (10_000, 0.1, 0.05),
    (10_000, 0.1, 0.2),
    (10_000, 0.001, 0.5),
    (50, 0.3, 0.7),
    (500, 0.02, 0.8),
    (2000, 0.005, 0.4),
)


def check_binomial_estimates(max_n: int = 60) -> list[str]:
    """Verify the binomial-coefficient estimates for all ``1 <= x <= k <= n <= max_n``.

    * ``(n/k)^k <= C(n,k) <= (en/k)^k``
    * ``C(n-x, k-x) / C(n,k) <= (k/n)^x``
    * ``C(n-x, k) / C(n,k) <= exp(-kx/n)``

    Integer-only comparisons are exact; those involving ``e`` compare
    logarithms of exact integers with a relative slack of ``1e-12``.

    Returns
    -------
    list of str
        Violations (empty when every estimate holds).
    """
    violations: list[str] = []
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            c = math.comb(n, k)
            if n**k > c * k**k:
                violations.append(f"lower estimate fails at n={n}, k={k}")
            if math.log(c) > k * (1 + math.log(n / k)) * (1 + 1e-12):
                violations.append(f"upper estimate fails at n={n}, k={k}")
            for x in range(1, k + 1):
                if math.comb(n - x, k - x) * n**x > c * k**x:
                    violations.append(f"ratio estimate fails at n={n}, k={k}, x={x}")
                shifted = math.comb(n - x, k)
                if shifted and math.log(shifted) - math.log(c) > -k * x / n + 1e-12 * abs(math.log(c)):
                    violations.append(f"shift estimate fails at n={n}, k={k}, x={x}")
    return violations
