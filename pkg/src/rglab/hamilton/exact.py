"""
Exact Hamiltonicity and longest-path oracles for small graphs.

Both work on adjacency bitmasks. :func:`exact_hamiltonian` backtracks with
degree and connectivity pruning; :func:`exact_longest_path` runs a dynamic
program over vertex subsets that records, for every subset, which vertices
can end a path covering exactly that subset.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Sequence

from rglab.exceptions import CapacityError
from rglab.graph.graph_model import Graph, Path
from rglab.hamilton.ham_models import HamResult, HamStats, HamStatus, certify_cycle
from rglab.settings import get_settings

logger = logging.getLogger(__name__)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def path_end_table(masks: Sequence[int], root: int | None = None) -> list[int]:
    """``ends[S]`` = bitmask of vertices that end a path covering exactly ``S``.

    With ``root`` set, only paths starting at ``root`` are counted.
    """
    n = len(masks)
    ends = [0] * (1 << n)
    starts = range(n) if root is None else (root,)
    for v in starts:
        ends[1 << v] = 1 << v
    for mask in range(1, 1 << n):
        e = ends[mask]
        while e:
            low = e & -e
            e ^= low
            ext = masks[low.bit_length() - 1] & ~mask
            while ext:
                lb = ext & -ext
                ext ^= lb
                ends[mask | lb] |= lb
    return ends


def has_hamiltonian_cycle_dp(masks: Sequence[int]) -> bool:
    """Held-Karp style decision rooted at vertex 0."""
    n = len(masks)
    if n < 3:
        return False
    ends = path_end_table(masks, root=0)
    return bool(ends[(1 << n) - 1] & masks[0])


def longest_path_dp(masks: Sequence[int]) -> tuple[int, list[int]]:
    """Longest path length in edges plus the ends table it was read from."""
    n = len(masks)
    if n == 0:
        return 0, [0]
    ends = path_end_table(masks)
    best = 0
    for mask in range(1, 1 << n):
        if ends[mask]:
            best = max(best, mask.bit_count())
    return best - 1, ends


def _check_cap(g: Graph, cap: int, operation: str) -> None:
    if g.n > cap:
        raise CapacityError(f"{operation} is limited to n <= {cap}, got n={g.n}", operation=operation, n=g.n, cap=cap)


def exact_longest_path(g: Graph, *, cap: int | None = None) -> int:
    """Length in edges of a longest path of ``g`` (0 for ``n <= 1``).

    Raises
    ------
    CapacityError
        If ``g.n`` exceeds the cap (``LabSettings.longest_path_cap``).
    """
    _check_cap(g, get_settings().longest_path_cap if cap is None else cap, "exact_longest_path")
    return longest_path_dp(g.adjacency_masks())[0]


def longest_path_witness(g: Graph, *, cap: int | None = None) -> Path | None:
    """A longest path of ``g``, or ``None`` when ``g`` has no vertices."""
    _check_cap(g, get_settings().longest_path_cap if cap is None else cap, "longest_path_witness")
    if g.n == 0:
        return None
    masks = g.adjacency_masks()
    length, ends = longest_path_dp(masks)
    mask = next(m for m in range(1, 1 << g.n) if ends[m] and m.bit_count() == length + 1)
    x = _bits(ends[mask])[0]
    path = [x]
    while mask.bit_count() > 1:
        prev = mask ^ (1 << x)
        x = _bits(ends[prev] & masks[x])[0]
        path.append(x)
        mask = prev
    return Path(path)


def exact_hamiltonian(g: Graph, *, cap: int | None = None) -> HamResult:
    """Decide Hamiltonicity of ``g`` by backtracking.

    The search starts at a minimum-degree vertex and tries continuations in
    order of fewest onward options. A branch is cut when some unvisited
    vertex keeps fewer than two usable neighbours, or when the unvisited
    vertices cannot all be reached from the current end.

    Raises
    ------
    CapacityError
        If ``g.n`` exceeds the cap (``LabSettings.exact_hamiltonian_cap``).

    Examples
    --------
    >>> from rglab.graph.families import cycle_graph, petersen_graph
    >>> exact_hamiltonian(cycle_graph(5)).status.value
    'hamiltonian'
    >>> exact_hamiltonian(petersen_graph()).status.value
    'not_hamiltonian'
    """
    _check_cap(g, get_settings().exact_hamiltonian_cap if cap is None else cap, "exact_hamiltonian")
    started = time.perf_counter()
    n = g.n
    stats = HamStats()

    def done(cycle: list[int] | None) -> HamResult:
        stats.elapsed_seconds = time.perf_counter() - started
        status = HamStatus.HAMILTONIAN if cycle is not None else HamStatus.NOT_HAMILTONIAN
        return HamResult(status=status, method="exact", n=n, cycle=cycle, stats=stats)

    if n < 3 or g.min_degree() < 2:
        return done(None)
    masks = g.adjacency_masks()
    full = (1 << n) - 1
    start = min(range(n), key=lambda v: (masks[v].bit_count(), v))
    path = [start]

    def reachable(frm: int, allowed: int) -> int:
        seen = 1 << frm
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= masks[v]
            nxt &= allowed & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def viable(end: int, visited: int) -> bool:
        unvisited = full & ~visited
        usable = unvisited | (1 << end) | (1 << start)
        for w in _bits(unvisited):
            if (masks[w] & usable & ~(1 << w)).bit_count() < 2:
                return False
        return reachable(end, unvisited | (1 << end)) & unvisited == unvisited

    def extend(end: int, visited: int) -> bool:
        stats.nodes += 1
        if visited == full:
            return bool(masks[end] >> start & 1)
        if not viable(end, visited):
            return False
        free = masks[end] & ~visited
        for w in sorted(_bits(free), key=lambda w: ((masks[w] & ~visited).bit_count(), w)):
            path.append(w)
            if extend(w, visited | (1 << w)):
                return True
            path.pop()
        return False

    found = extend(start, 1 << start)
    logger.debug(f"exact_hamiltonian n={n}: {'found' if found else 'none'} after {stats.nodes} nodes")
    if not found:
        return done(None)
    return done(certify_cycle(list(path), g))
