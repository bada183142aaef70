"""Elementary rotations of a path with a fixed start vertex."""

from __future__ import annotations

from collections.abc import Sequence

from rglab.exceptions import InvalidInputError, InvalidRotationError, InvariantViolationError
from rglab.graph.graph_model import Graph, Path


def rotate(vertices: Sequence[int], i: int) -> list[int]:
    """``x0..xi xh x(h-1)..x(i+1)`` without any adjacency check."""
    vs = list(vertices)
    return vs[: i + 1] + vs[:i:-1]


def elementary_rotation(g: Graph, P: Path, i: int) -> Path:
    """Rotate ``P = x0..xh`` at ``x_i`` using the chord ``(x_i, x_h)``.

    The result ``x0..x_i x_h x_{h-1}..x_{i+1}`` keeps the start, the vertex
    set and the length; its new end is ``x_{i+1}``. Rotating twice at the
    same pivot returns the original path.

    Raises
    ------
    InvalidInputError
        Unless ``0 <= i < h - 1``.
    InvalidRotationError
        If ``(x_i, x_h)`` is not an edge of ``g``.

    Examples
    --------
    >>> from rglab.graph.families import cycle_graph
    >>> elementary_rotation(cycle_graph(4), Path([0, 1, 2, 3]), 0)
    Path([0, 3, 2, 1])
    """
    vs = P.vertices
    h = len(vs) - 1
    if not 0 <= i < h - 1:
        raise InvalidInputError(f"rotation index must satisfy 0 <= i < {h - 1}, got {i}", field="i", value=i)
    if not g.has_edge(vs[i], vs[h]):
        raise InvalidRotationError(
            f"no chord between pivot {vs[i]} and endpoint {vs[h]}", pivot=vs[i], endpoint=vs[h]
        )
    out = Path(rotate(vs, i))
    if out.start != P.start or len(out) != len(P) or set(out.vertices) != set(vs):
        raise InvariantViolationError("rotation changed start, length or vertex set", violations=[repr(P), repr(out)])
    return out
