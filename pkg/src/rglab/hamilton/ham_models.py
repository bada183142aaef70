"""Result models shared by the Hamiltonicity solvers."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field

from rglab.exceptions import InvalidInputError, InvariantViolationError
from rglab.graph.graph_model import Cycle, Graph


class HamStatus(str, Enum):
    """Outcome of a Hamiltonicity query.

    ``NOT_HAMILTONIAN`` comes only from the exact oracle; heuristics that run
    out of budget report ``NOT_FOUND``.
    """

    HAMILTONIAN = "hamiltonian"
    NOT_HAMILTONIAN = "not_hamiltonian"
    NOT_FOUND = "not_found"


class HamStats(BaseModel):
    """Work counters of one solver run."""

    rotations: int = Field(0, description="Elementary rotations performed")
    extensions: int = Field(0, description="Path extensions by an edge leaving the path")
    cycle_closures: int = Field(0, description="Non-spanning cycles closed and reopened")
    restarts: int = Field(0, description="Fresh greedy restarts after a stall")
    boosters_added: int = Field(0, description="Booster edges added to the backbone")
    nodes: int = Field(0, description="Search nodes expanded by the exact backtracking")
    elapsed_seconds: float = Field(0.0, description="Wall time of the run")


class HamResult(BaseModel):
    """Status, validated witness cycle and statistics of a solver run."""

    status: HamStatus = Field(..., description="hamiltonian, not_hamiltonian or not_found")
    method: str = Field(..., description="exact, rotation or booster-pipeline")
    n: int = Field(..., description="Vertex count of the graph searched")
    cycle: list[int] | None = Field(None, description="Hamilton cycle in visiting order, if found")
    added_edges: list[tuple[int, int]] = Field(
        default_factory=list, description="Boosters added by the augmentation pipeline, in order"
    )
    stats: HamStats = Field(default_factory=HamStats)

    @property
    def is_hamiltonian(self) -> bool:
        return self.status is HamStatus.HAMILTONIAN

    def cycle_object(self) -> Cycle | None:
        return Cycle(self.cycle) if self.cycle is not None else None


def certify_cycle(vertices: list[int], host: Graph) -> list[int]:
    """Return ``vertices`` if they form a Hamilton cycle of ``host``.

    Raises
    ------
    InvariantViolationError
        Otherwise. Solvers call this on every cycle they return.
    """
    try:
        cycle = Cycle(vertices)
    except InvalidInputError as exc:
        raise InvariantViolationError("witness is not a cycle", violations=[exc.message]) from exc
    if not cycle.is_spanning(host.n) or not cycle.is_cycle_in(host):
        raise InvariantViolationError(
            "witness is not a Hamilton cycle of the host graph", violations=[repr(cycle)]
        )
    return list(vertices)
