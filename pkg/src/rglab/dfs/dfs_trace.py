"""
DFS trace: compact event log plus derived epochs and paths.

A run is recorded as one event per step, ``(vertex, move)``, where the move
is either ``T -> U`` (push) or ``U -> S`` (pop). Full ``(S, U, T)``
snapshots are rebuilt on demand by replaying the log.
"""

from __future__ import annotations

from collections.abc import Iterator
from enum import IntEnum
from typing import Any, NamedTuple

from rglab.exceptions import InvalidInputError
from rglab.graph.graph_model import Path


class Move(IntEnum):
    """Set transition of a single DFS step."""

    PUSH = 0  # T -> U
    POP = 1  # U -> S


class DfsState(NamedTuple):
    """Snapshot of the three vertex sets; ``U`` is the stack, bottom first."""

    S: frozenset[int]
    U: tuple[int, ...]
    T: frozenset[int]


class Epoch(NamedTuple):
    """Steps ``start..end`` (1-based, inclusive) between two emptyings of ``U``."""

    start: int
    end: int
    vertices: frozenset[int]


class DfsTrace:
    """Full record of one DFS run.

    Attributes
    ----------
    n : int
        Vertex count.
    order : tuple of int
        Priority permutation ``pi``.
    directed : bool
        Whether out-neighbourhoods were followed.
    events : list of (int, Move)
        One entry per step.
    epochs : list of Epoch
        One per connected component (weak components for digraph traces are
        not implied; an epoch is a DFS tree).
    max_u_path : Path or None
        Longest path ever spanned by ``U`` (``None`` only when ``n == 0``).
    max_u_step : int
        First step at which ``U`` reached that length.
    balanced_step : int or None
        First step with ``|S| == |T|``.
    query_count : int
        Pair queries issued during the search (tail queries excluded).
    queries_at_step : list of int
        Cumulative query count after each step (index 0 is step 0).
    """

    __slots__ = (
        "n",
        "order",
        "directed",
        "events",
        "epochs",
        "max_u_path",
        "max_u_step",
        "balanced_step",
        "query_count",
        "queries_at_step",
        "tail_queries",
    )

    def __init__(
        self,
        *,
        n: int,
        order: tuple[int, ...],
        directed: bool,
        events: list[tuple[int, Move]],
        epochs: list[Epoch],
        max_u_path: Path | None,
        max_u_step: int,
        balanced_step: int | None,
        query_count: int,
        queries_at_step: list[int],
        tail_queries: int = 0,
    ) -> None:
        self.n = n
        self.order = order
        self.directed = directed
        self.events = events
        self.epochs = epochs
        self.max_u_path = max_u_path
        self.max_u_step = max_u_step
        self.balanced_step = balanced_step
        self.query_count = query_count
        self.queries_at_step = queries_at_step
        self.tail_queries = tail_queries

    @property
    def steps(self) -> int:
        return len(self.events)

    @property
    def max_u(self) -> int:
        """Largest stack size seen."""
        return 0 if self.max_u_path is None else len(self.max_u_path)

    def stack_at(self, step: int) -> tuple[int, ...]:
        """Contents of ``U`` after ``step`` events."""
        self._check_step(step)
        stack: list[int] = []
        for v, move in self.events[:step]:
            if move is Move.PUSH:
                stack.append(v)
            else:
                stack.pop()
        return tuple(stack)

    def snapshot(self, step: int) -> DfsState:
        """``(S, U, T)`` after ``step`` events (step 0 is the initial state)."""
        self._check_step(step)
        s: set[int] = set()
        t = set(range(self.n))
        stack: list[int] = []
        for v, move in self.events[:step]:
            if move is Move.PUSH:
                t.discard(v)
                stack.append(v)
            else:
                stack.pop()
                s.add(v)
        return DfsState(frozenset(s), tuple(stack), frozenset(t))

    def states(self) -> Iterator[DfsState]:
        """Every state from step 0 to the last step (O(n) per state)."""
        s: set[int] = set()
        t = set(range(self.n))
        stack: list[int] = []
        yield DfsState(frozenset(), (), frozenset(t))
        for v, move in self.events:
            if move is Move.PUSH:
                t.discard(v)
                stack.append(v)
            else:
                stack.pop()
                s.add(v)
            yield DfsState(frozenset(s), tuple(stack), frozenset(t))

    def balanced_path(self) -> Path | None:
        """The ``U``-path captured at the first step with ``|S| == |T|``."""
        if self.balanced_step is None:
            return None
        stack = self.stack_at(self.balanced_step)
        return Path(stack) if stack else None

    def components(self) -> list[frozenset[int]]:
        return [e.vertices for e in self.epochs]

    def largest_component(self) -> int:
        return max((len(e.vertices) for e in self.epochs), default=0)

    def _check_step(self, step: int) -> None:
        if not 0 <= step <= len(self.events):
            raise InvalidInputError(f"step must lie in [0, {len(self.events)}]", field="step", value=step)

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready event log."""
        return {
            "n": self.n,
            "directed": self.directed,
            "order": list(self.order),
            "events": [[v, "T->U" if m is Move.PUSH else "U->S"] for v, m in self.events],
            "epochs": [{"start": e.start, "end": e.end, "vertices": sorted(e.vertices)} for e in self.epochs],
            "max_u_path": list(self.max_u_path) if self.max_u_path is not None else [],
            "max_u_step": self.max_u_step,
            "balanced_step": self.balanced_step,
            "query_count": self.query_count,
            "tail_queries": self.tail_queries,
        }

    def __repr__(self) -> str:
        return (
            f"DfsTrace(n={self.n}, steps={self.steps}, epochs={len(self.epochs)}, "
            f"max_u={self.max_u}, queries={self.query_count})"
        )


class TraceRecorder:
    """Builds a :class:`DfsTrace` while a search runs.

    The search calls :meth:`push` and :meth:`pop`; the recorder maintains the
    stack, the epoch boundaries, the best stack height and the first
    balanced step.
    """

    __slots__ = (
        "n",
        "stack",
        "events",
        "queries_at_step",
        "epochs",
        "_s_size",
        "_t_size",
        "_best_len",
        "_best_step",
        "_balanced_step",
        "_epoch_start",
        "_epoch_members",
    )

    def __init__(self, n: int) -> None:
        self.n = n
        self.stack: list[int] = []
        self.events: list[tuple[int, Move]] = []
        self.queries_at_step: list[int] = [0]
        self.epochs: list[Epoch] = []
        self._s_size = 0
        self._t_size = n
        self._best_len = 0
        self._best_step = 0
        self._balanced_step: int | None = 0 if n == 0 else None
        self._epoch_start = 0
        self._epoch_members: list[int] = []

    def push(self, v: int, queries: int) -> None:
        if not self.stack:
            self._epoch_start = len(self.events) + 1
            self._epoch_members = []
        self.stack.append(v)
        self._epoch_members.append(v)
        self._t_size -= 1
        self.events.append((v, Move.PUSH))
        self.queries_at_step.append(queries)
        if len(self.stack) > self._best_len:
            self._best_len = len(self.stack)
            self._best_step = len(self.events)
        self._check_balanced()

    def pop(self, queries: int) -> int:
        v = self.stack.pop()
        self._s_size += 1
        self.events.append((v, Move.POP))
        self.queries_at_step.append(queries)
        if not self.stack:
            self.epochs.append(Epoch(self._epoch_start, len(self.events), frozenset(self._epoch_members)))
        self._check_balanced()
        return v

    def _check_balanced(self) -> None:
        if self._balanced_step is None and self._s_size == self._t_size:
            self._balanced_step = len(self.events)

    def finish(
        self, *, order: tuple[int, ...], directed: bool, query_count: int, tail_queries: int = 0
    ) -> DfsTrace:
        trace = DfsTrace(
            n=self.n,
            order=order,
            directed=directed,
            events=self.events,
            epochs=self.epochs,
            max_u_path=None,
            max_u_step=self._best_step,
            balanced_step=self._balanced_step,
            query_count=query_count,
            queries_at_step=self.queries_at_step,
            tail_queries=tail_queries,
        )
        if self._best_len:
            trace.max_u_path = Path(trace.stack_at(self._best_step))
        return trace
