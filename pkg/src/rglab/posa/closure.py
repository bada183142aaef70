"""
Rotation closure of a path with a fixed start vertex.

Given ``P = x0 .. xh`` in ``g``, the closure is the set ``R`` of end vertices
of all paths obtainable from ``P`` by finite sequences of elementary
rotations, together with one witness path per end vertex.

Two strategies:

* ``EXHAUSTIVE`` explores path states breadth first. It is exact but the
  number of states can grow exponentially, so it is capped.
* ``ENDPOINT`` explores end vertices breadth first, rotating only the first
  witness found for each end. It is fast and every reported end is genuinely
  reachable, but two witnesses ending at the same vertex can admit
  different chords, so the result may miss ends. Pósa containment
  ``N(R) ⊆ R- ∪ R+`` still holds for its output on a longest path.

``AUTO`` picks the exhaustive walk when ``|P| <= exact_closure_cap``.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable
from enum import Enum

from rglab.exceptions import CapacityError
from rglab.graph.graph_model import Graph, Path
from rglab.posa.rotation import rotate
from rglab.settings import get_settings

logger = logging.getLogger(__name__)


class ClosureStrategy(str, Enum):
    """How :func:`rotation_closure` explores rotations."""

    AUTO = "auto"
    EXHAUSTIVE = "exhaustive"
    ENDPOINT = "endpoint"


class PosaClosure:
    """End vertices reachable by rotations from ``base_path``.

    Attributes
    ----------
    base_path : Path
        The path rotations start from; ``base_path.start`` stays fixed.
    R : frozenset of int
        Reachable end vertices; always contains ``base_path.end``.
    R_minus, R_plus : frozenset of int
        Predecessors and successors of ``R`` along ``base_path``.
    exact : bool
        Whether ``R`` came from the exhaustive path-state walk.
    """

    __slots__ = ("base_path", "R", "R_minus", "R_plus", "exact", "_witness", "_parents")

    def __init__(
        self,
        base_path: Path,
        R: Iterable[int],
        *,
        exact: bool,
        witnesses: dict[int, tuple[int, ...]] | None = None,
        parents: dict[int, tuple[int, int] | None] | None = None,
    ) -> None:
        self.base_path = base_path
        self.R = frozenset(R)
        self.exact = exact
        self._witness = witnesses or {}
        self._parents = parents or {}
        vs = base_path.vertices
        pos = {v: i for i, v in enumerate(vs)}
        h = len(vs) - 1
        self.R_minus = frozenset(vs[pos[r] - 1] for r in self.R if pos[r] >= 1)
        self.R_plus = frozenset(vs[pos[r] + 1] for r in self.R if pos[r] < h)

    def witness(self, r: int) -> Path:
        """A path from ``base_path.start`` to ``r`` on the same vertex set.

        Raises
        ------
        KeyError
            If ``r`` is not in ``R``.
        """
        if r not in self.R:
            raise KeyError(r)
        if r in self._witness:
            return Path(self._witness[r])
        pivots: list[int] = []
        cur = r
        while True:
            link = self._parents[cur]
            if link is None:
                break
            pivot, prev = link
            pivots.append(pivot)
            cur = prev
        path = list(self.base_path.vertices)
        for pivot in reversed(pivots):
            path = rotate(path, path.index(pivot))
        return Path(path)

    def witnesses(self) -> dict[int, Path]:
        return {r: self.witness(r) for r in sorted(self.R)}

    def __repr__(self) -> str:
        return f"PosaClosure(|P|={len(self.base_path)}, |R|={len(self.R)}, exact={self.exact})"


def _endpoint_walk(g: Graph, vs: tuple[int, ...]) -> dict[int, tuple[int, int] | None]:
    h = len(vs) - 1
    parents: dict[int, tuple[int, int] | None] = {vs[-1]: None}
    queue: deque[tuple[int, ...]] = deque([vs])
    while queue:
        path = queue.popleft()
        r = path[-1]
        pos = {v: i for i, v in enumerate(path)}
        for y in g.neighbors(r):
            i = pos.get(y)
            if i is None or i >= h - 1:
                continue
            end = path[i + 1]
            if end in parents:
                continue
            parents[end] = (y, r)
            queue.append(tuple(rotate(path, i)))
    return parents


def _path_state_walk(g: Graph, vs: tuple[int, ...], state_cap: int) -> dict[int, tuple[int, ...]]:
    h = len(vs) - 1
    seen = {vs}
    witnesses = {vs[-1]: vs}
    queue: deque[tuple[int, ...]] = deque([vs])
    while queue:
        path = queue.popleft()
        r = path[-1]
        pos = {v: i for i, v in enumerate(path)}
        for y in g.neighbors(r):
            i = pos.get(y)
            if i is None or i >= h - 1:
                continue
            nxt = tuple(rotate(path, i))
            if nxt in seen:
                continue
            if len(seen) >= state_cap:
                raise CapacityError(
                    f"exhaustive closure visited more than {state_cap} path states",
                    operation="rotation_closure",
                    n=len(vs),
                    cap=state_cap,
                )
            seen.add(nxt)
            witnesses.setdefault(nxt[-1], nxt)
            queue.append(nxt)
    logger.debug(f"exhaustive closure: {len(seen)} path states, {len(witnesses)} ends")
    return witnesses


def rotation_closure(
    g: Graph,
    P: Path,
    *,
    strategy: ClosureStrategy | str = ClosureStrategy.AUTO,
    exact_cap: int | None = None,
    state_cap: int | None = None,
) -> PosaClosure:
    """Compute the rotation closure of ``P`` in ``g`` with ``P.start`` fixed.

    Parameters
    ----------
    g : Graph
        Host graph.
    P : Path
        A path of ``g``.
    strategy : ClosureStrategy, default AUTO
        See the module docstring.
    exact_cap : int, optional
        Largest ``|P|`` for which AUTO walks path states
        (``LabSettings.exact_closure_cap``).
    state_cap : int, optional
        Path-state limit of the exhaustive walk (``LabSettings.closure_state_cap``).

    Raises
    ------
    InvalidInputError
        If ``P`` is not a path of ``g``.
    CapacityError
        If the exhaustive walk exceeds ``state_cap``.

    Examples
    --------
    >>> from rglab.graph.families import cycle_graph
    >>> sorted(rotation_closure(cycle_graph(5), Path([0, 1, 2, 3, 4])).R)
    [1, 4]
    """
    P.validate(g)
    settings = get_settings()
    strategy = ClosureStrategy(strategy)
    if strategy is ClosureStrategy.AUTO:
        cap = settings.exact_closure_cap if exact_cap is None else exact_cap
        strategy = ClosureStrategy.EXHAUSTIVE if len(P) <= cap else ClosureStrategy.ENDPOINT
    vs = P.vertices
    if strategy is ClosureStrategy.EXHAUSTIVE:
        witnesses = _path_state_walk(g, vs, settings.closure_state_cap if state_cap is None else state_cap)
        return PosaClosure(P, witnesses, exact=True, witnesses=witnesses)
    parents = _endpoint_walk(g, vs)
    return PosaClosure(P, parents, exact=False, parents=parents)
