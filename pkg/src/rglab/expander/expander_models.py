"""Configuration and report models for expansion checks and audits."""

from __future__ import annotations

import math
from enum import Enum

from pydantic import BaseModel, Field


class ExpanderQuery(BaseModel):
    """A ``(k, alpha)`` expansion question: ``|N(U)| >= alpha |U|`` for all ``|U| <= k``."""

    k: int = Field(..., ge=1, description="Largest set size checked")
    alpha: float = Field(..., gt=0, description="Expansion factor")


class BackboneConfig(BaseModel):
    """Parameters of the sparse backbone construction."""

    d0: int = Field(4, ge=1, description="Edges retained per non-SMALL vertex")
    seed: int | None = Field(None, ge=0, description="Seed for the per-vertex edge choices")


class CheckMode(str, Enum):
    EXACT = "exact"
    SAMPLED = "sampled"
    STRUCTURAL = "structural"
    VACUOUS = "vacuous"


class Certainty(str, Enum):
    """How much an expansion verdict proves."""

    PROVEN = "proven"  # exact enumeration found no violation
    REFUTED = "refuted"  # a violating set was found
    NOT_REFUTED = "not_refuted"  # sampling found no violation
    STRUCTURAL = "structural"  # sufficient conditions passed
    CONDITIONS_FAILED = "conditions_failed"  # sufficient conditions failed, no violating set found


class ExpanderVerdict(BaseModel):
    """Answer of :func:`~rglab.expander.expansion.is_expander`."""

    holds: bool = Field(..., description="Expansion confirmed (or not refuted, for sampled mode)")
    mode: CheckMode = Field(..., description="exact, sampled or structural")
    certainty: Certainty = Field(..., description="What the verdict proves")
    witness: list[int] | None = Field(None, description="A set U with |N(U)| < alpha |U|, if found")
    sets_checked: int = Field(0, description="Vertex sets examined")
    failed_conditions: list[str] = Field(default_factory=list, description="Structural conditions that failed")


class PropertyVerdict(BaseModel):
    """One audited property."""

    name: str
    holds: bool
    mode: CheckMode
    witness: list[list[int]] | None = Field(
        None, description="Violating vertex, path, set or pair of sets; set when holds is False"
    )
    detail: str = ""


class AuditThresholds(BaseModel):
    """Numeric thresholds derived from ``n`` and ``d0``."""

    n: int
    d0: int
    ln_n: float
    max_degree: float = Field(..., description="10 ln n")
    small_size: float = Field(..., description="n^0.3")
    small_set_size: float = Field(..., description="n / ln^(1/2) n, bound on |U| in P4 and P5")
    density: float = Field(..., description="ln^(3/4) n, edges per vertex allowed inside U in P4")
    spread: float = Field(..., description="ln^(1/4) n, |W| / |U| allowed in P5")
    big_set_size: int = Field(..., description="ceil(n / ln^(1/2) n), |U| = |W| in P6 and P7")
    crossing_edges: float = Field(..., description="0.5 n, edges required between U and W in P6")

    @classmethod
    def for_graph(cls, n: int, d0: int) -> AuditThresholds:
        ln_n = math.log(n) if n >= 2 else 0.0
        root = math.sqrt(ln_n)
        small_set = n / root if root > 0 else float(n)
        return cls(
            n=n,
            d0=d0,
            ln_n=ln_n,
            max_degree=10 * ln_n,
            small_size=n**0.3,
            small_set_size=small_set,
            density=ln_n**0.75,
            spread=ln_n**0.25,
            big_set_size=math.ceil(small_set),
            crossing_edges=0.5 * n,
        )


AUDIT_FORMULAS: dict[str, str] = {
    "P1": "max degree <= 10 ln n and min degree >= 2",
    "P2": "|SMALL| <= n^0.3, SMALL = {v : d(v) < d0}",
    "P3": "no path of length 1..4 joins two SMALL vertices; no cycle of length <= 4 passes through SMALL",
    "P4": "every U with |U| <= n / ln^(1/2) n spans <= |U| ln^(3/4) n edges",
    "P5": "disjoint U, W with |U| <= n / ln^(1/2) n, |W| <= |U| ln^(1/4) n have e(U, W) <= d0 |U| / 2",
    "P6": "disjoint U, W with |U| = |W| = ceil(n / ln^(1/2) n) have e(U, W) >= 0.5 n",
    "P7": "disjoint U, W with |U| = |W| = ceil(n / ln^(1/2) n) have at least one edge between them",
}


class AuditReport(BaseModel):
    """Verdicts for P1-P7 on one graph."""

    n: int
    d0: int
    formulas: dict[str, str] = Field(default_factory=lambda: dict(AUDIT_FORMULAS))
    thresholds: AuditThresholds
    small_set: list[int] = Field(..., description="SMALL(G), sorted")
    properties: dict[str, PropertyVerdict]

    @property
    def all_hold(self) -> bool:
        return all(v.holds for v in self.properties.values())

    def holds(self, *names: str) -> bool:
        return all(self.properties[name].holds for name in names)
