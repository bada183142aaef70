"""
I.i.d. Bernoulli query stream.

The stream is generated lazily as the run lengths of zeros between ones
(geometric variables drawn in fixed-size batches), so skipping a long run of
zeros costs O(1) and consuming ``t`` bits costs O(number of ones). Replaying
a stream with the same ``(p, seed)`` reproduces the same bits.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable

import numpy as np

from rglab.exceptions import InvalidInputError, StreamUnderflowError
from rglab.random_models.seeding import SeedLike, make_rng

logger = logging.getLogger(__name__)

_BATCH = 4096


def check_probability(p: float, name: str = "p") -> float:
    if not 0.0 <= p <= 1.0:
        raise InvalidInputError(f"{name} must lie in [0, 1], got {p}", field=name, value=p)
    return float(p)


class BernoulliStream:
    """Single-consumer stream of Bernoulli(p) bits.

    Parameters
    ----------
    p : float
        Success probability.
    seed : int or numpy Generator, optional
        Seed for the PCG64 generator.
    length : int, optional
        Finite stream length; reading past it raises
        :class:`~rglab.exceptions.StreamUnderflowError`.

    Examples
    --------
    >>> s = BernoulliStream(1.0, seed=0)
    >>> [s.read() for _ in range(3)], s.position
    ([1, 1, 1], 3)
    """

    def __init__(self, p: float, seed: SeedLike = None, *, length: int | None = None) -> None:
        self.p = check_probability(p)
        self.seed = seed if not isinstance(seed, np.random.Generator) else None
        if length is not None and length < 0:
            raise InvalidInputError("stream length must be non-negative", field="length", value=length)
        self.length = length
        self._rng = make_rng(seed) if 0.0 < self.p < 1.0 else None
        self._pending: list[int] = []
        self._pending_at = 0
        self._explicit = False
        self._position = 0
        self._gap: int | None = self._next_gap()

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BernoulliStream:
        """Finite stream replaying ``bits`` exactly."""
        values = [int(b) for b in bits]
        if any(b not in (0, 1) for b in values):
            raise InvalidInputError("bits must be 0 or 1", field="bits")
        gaps = []
        run = 0
        for b in values:
            if b:
                gaps.append(run)
                run = 0
            else:
                run += 1
        stream = cls.__new__(cls)
        stream.p = sum(values) / len(values) if values else 0.0
        stream.seed = None
        stream.length = len(values)
        stream._rng = None
        stream._pending = gaps
        stream._pending_at = 0
        stream._explicit = True
        stream._position = 0
        stream._gap = stream._next_gap()
        return stream

    # -- internals -------------------------------------------------------------------

    def _next_gap(self) -> int | None:
        if self._explicit:
            if self._pending_at >= len(self._pending):
                return None
            gap = self._pending[self._pending_at]
            self._pending_at += 1
            return gap
        if self.p == 0.0:
            return None
        if self.p == 1.0:
            return 0
        if self._pending_at >= len(self._pending):
            assert self._rng is not None
            self._pending = (self._rng.geometric(self.p, size=_BATCH) - 1).tolist()
            self._pending_at = 0
        gap = self._pending[self._pending_at]
        self._pending_at += 1
        return int(gap)

    def _require(self, count: int) -> None:
        if self.length is not None and self._position + count > self.length:
            raise StreamUnderflowError(
                f"stream of length {self.length} exhausted at position {self._position} (needed {count} more bits)",
                position=self._position,
                length=self.length,
            )

    # -- public API ------------------------------------------------------------------

    @property
    def position(self) -> int:
        """Number of bits consumed so far."""
        return self._position

    @property
    def fresh(self) -> bool:
        return self._position == 0

    def scan(self, limit: int) -> int | None:
        """Consume bits up to and including the first 1 among the next ``limit``.

        Returns
        -------
        int or None
            Offset (0-based) of that 1 within the window, or ``None`` when the
            whole window was zeros (all ``limit`` bits are then consumed).
        """
        if limit < 0:
            raise InvalidInputError("scan limit must be non-negative", field="limit", value=limit)
        if limit == 0:
            return None
        gap = self._gap
        if gap is not None and gap < limit:
            self._require(gap + 1)
            self._position += gap + 1
            self._gap = self._next_gap()
            return gap
        self._require(limit)
        self._position += limit
        if gap is not None:
            self._gap = gap - limit
        return None

    def read(self) -> int:
        """Consume and return one bit."""
        return 1 if self.scan(1) == 0 else 0

    def skip(self, count: int) -> int:
        """Consume ``count`` bits; return how many were ones."""
        ones = 0
        remaining = count
        while remaining > 0:
            hit = self.scan(remaining)
            if hit is None:
                break
            ones += 1
            remaining -= hit + 1
        return ones

    def positions_of_ones(self, count: int) -> np.ndarray:
        """Consume ``count`` bits; return absolute positions (0-based) of the ones."""
        out: list[int] = []
        remaining = count
        while remaining > 0:
            base = self._position
            hit = self.scan(remaining)
            if hit is None:
                break
            out.append(base + hit)
            remaining -= hit + 1
        return np.asarray(out, dtype=np.int64)

    def take(self, count: int) -> np.ndarray:
        """Consume ``count`` bits and return them as a uint8 array."""
        start = self._position
        bits = np.zeros(count, dtype=np.uint8)
        ones = self.positions_of_ones(count)
        bits[ones - start] = 1
        return bits

    def __repr__(self) -> str:
        return f"BernoulliStream(p={self.p}, position={self._position}, length={self.length})"


def bernoulli_stream(p: float, seed: SeedLike = None, *, length: int | None = None) -> BernoulliStream:
    """Create a fresh :class:`BernoulliStream`."""
    return BernoulliStream(p, seed, length=length)
