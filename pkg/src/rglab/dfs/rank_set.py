"""Order-statistic subset of ``{0..n-1}`` backed by a Fenwick tree."""

from __future__ import annotations


class RankSet:
    """Shrinking subset of ranks with O(log n) counting and selection.

    Starts full. Used for the DFS unvisited set ``T``, where the search needs
    "how many members of ``T`` lie below rank r" and "the k-th member of ``T``".

    Examples
    --------
    >>> t = RankSet(5)
    >>> t.remove(1); t.remove(3)
    >>> t.size, t.kth(1), t.count_below(4)
    (3, 2, 2)
    """

    __slots__ = ("n", "size", "_tree", "_present", "_top")

    def __init__(self, n: int) -> None:
        self.n = n
        self.size = n
        # a full Fenwick tree stores the low-bit span at every node
        self._tree = [i & -i for i in range(n + 1)]
        self._present = [True] * n
        top = 1
        while top * 2 <= n:
            top *= 2
        self._top = top if n else 0

    def __contains__(self, r: int) -> bool:
        return self._present[r]

    def remove(self, r: int) -> None:
        if not self._present[r]:
            raise KeyError(r)
        self._present[r] = False
        self.size -= 1
        tree = self._tree
        i = r + 1
        n = self.n
        while i <= n:
            tree[i] -= 1
            i += i & -i

    def count_below(self, r: int) -> int:
        """Members strictly smaller than ``r``."""
        tree = self._tree
        i = min(r, self.n)
        s = 0
        while i > 0:
            s += tree[i]
            i -= i & -i
        return s

    def kth(self, k: int) -> int:
        """The ``k``-th smallest member (0-based)."""
        if not 0 <= k < self.size:
            raise IndexError(k)
        tree = self._tree
        pos = 0
        remaining = k + 1
        step = self._top
        n = self.n
        while step:
            nxt = pos + step
            if nxt <= n and tree[nxt] < remaining:
                pos = nxt
                remaining -= tree[nxt]
            step >>= 1
        return pos

    def members_from(self, r: int) -> list[int]:
        """All members ``>= r`` in increasing order."""
        present = self._present
        return [x for x in range(r, self.n) if present[x]]
