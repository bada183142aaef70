"""Pósa containment ``N(R) ⊆ R- ∪ R+`` for a path and its rotation closure."""

from __future__ import annotations

from pydantic import BaseModel, Field

from rglab.graph.graph_model import Graph, Path
from rglab.graph.graph_ops import external_neighborhood
from rglab.posa.closure import ClosureStrategy, rotation_closure


class PosaReport(BaseModel):
    """Closure sets of one path and the containment verdict."""

    path: list[int] = Field(..., description="Base path, x0 first")
    R: list[int] = Field(..., description="Reachable end vertices")
    R_minus: list[int] = Field(..., description="Predecessors of R along the base path")
    R_plus: list[int] = Field(..., description="Successors of R along the base path")
    neighborhood: list[int] = Field(..., description="External neighbourhood N(R)")
    violators: list[int] = Field(default_factory=list, description="Members of N(R) outside R- ∪ R+")
    holds: bool = Field(..., description="N(R) ⊆ R- ∪ R+")
    exact_closure: bool = Field(..., description="R came from the exhaustive path-state walk")


def posa_check(
    g: Graph, P: Path, *, strategy: ClosureStrategy | str = ClosureStrategy.AUTO
) -> PosaReport:
    """Compute ``R``, ``R-``, ``R+`` and ``N(R)`` for ``P`` and test containment.

    The containment is guaranteed only when ``P`` is a longest path; for other
    paths a ``False`` verdict simply reports what was found.

    Examples
    --------
    >>> from rglab.graph.families import path_graph
    >>> rep = posa_check(path_graph(4), Path([0, 1, 2, 3]))
    >>> rep.R, rep.neighborhood, rep.holds
    ([3], [2], True)
    """
    closure = rotation_closure(g, P, strategy=strategy)
    nbhd = external_neighborhood(g, closure.R)
    allowed = closure.R_minus | closure.R_plus
    violators = sorted(nbhd - allowed)
    return PosaReport(
        path=list(P.vertices),
        R=sorted(closure.R),
        R_minus=sorted(closure.R_minus),
        R_plus=sorted(closure.R_plus),
        neighborhood=sorted(nbhd),
        violators=violators,
        holds=not violators,
        exact_closure=closure.exact,
    )
