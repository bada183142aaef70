"""
Edge-list text format.

The first line is ``n m`` (optionally followed by the token ``directed``),
then ``m`` lines ``u v`` with 0-indexed vertices. Undirected files list each
edge once with ``u < v``; directed files list ordered arcs. Blank lines and
``#`` comments are ignored.
"""

from __future__ import annotations

import logging
from pathlib import Path as FsPath

from rglab.exceptions import InvalidInputError
from rglab.graph.graph_model import DiGraph, Graph

logger = logging.getLogger(__name__)


def parse_edge_list(text: str) -> Graph | DiGraph:
    """Parse edge-list text into a :class:`Graph` or :class:`DiGraph`.

    Raises
    ------
    InvalidInputError
        On a malformed header, a count mismatch, ``u >= v`` in an undirected
        file, loops or duplicates.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InvalidInputError("edge list is empty", field="header")
    header = lines[0].split()
    directed = len(header) == 3 and header[2].lower() == "directed"
    if len(header) not in (2, 3) or (len(header) == 3 and not directed):
        raise InvalidInputError(f"bad header line {lines[0]!r}", field="header", value=lines[0])
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as e:
        raise InvalidInputError(f"bad header line {lines[0]!r}", field="header", value=lines[0]) from e
    body = lines[1:]
    if len(body) != m:
        raise InvalidInputError(f"header announces {m} edges but {len(body)} follow", field="m", value=m)
    pairs: list[tuple[int, int]] = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise InvalidInputError(f"bad edge line {ln!r}", field="edges", value=ln)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as e:
            raise InvalidInputError(f"bad edge line {ln!r}", field="edges", value=ln) from e
        if not directed and u >= v:
            raise InvalidInputError(f"undirected edge lines need u < v, got {ln!r}", field="edges", value=(u, v))
        pairs.append((u, v))
    if directed:
        return DiGraph(n, pairs)
    return Graph(n, pairs)


def read_edge_list(path: str | FsPath) -> Graph | DiGraph:
    """Read an edge-list file."""
    g = parse_edge_list(FsPath(path).read_text(encoding="utf-8"))
    logger.debug(f"Read {g!r} from {path}")
    return g


def format_edge_list(g: Graph | DiGraph) -> str:
    if isinstance(g, DiGraph):
        rows = [f"{g.n} {g.arc_count} directed"]
        rows.extend(f"{u} {v}" for u, v in g.arcs())
    else:
        rows = [f"{g.n} {g.edge_count}"]
        rows.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(rows) + "\n"


def write_edge_list(g: Graph | DiGraph, path: str | FsPath) -> None:
    """Write ``g`` in edge-list format (parent directories are created)."""
    target = FsPath(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(format_edge_list(g), encoding="utf-8")
    logger.debug(f"Wrote {g!r} to {target}")
