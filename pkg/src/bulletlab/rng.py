"""Reproducible random streams with hierarchical substreams.

Every stochastic routine in the package draws from an :class:`RngStream`.
A stream is identified by a 64-bit seed plus a path of integer indices;
the pair is hashed through a 64-bit finalizer into the key of a PCG64
generator.  Identical (seed, path) always yields the identical uniform
sequence, and distinct paths give streams that are independent for every
practical purpose, which lets verification suites hand substream i to
replicate i and stay deterministic under any execution order.
"""

from __future__ import annotations

import math

import numpy as np

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15  # golden-ratio increment used to salt indices


def _mix64(value: int) -> int:
    """A 64-bit avalanche finalizer (the murmur3 variant)."""
    value &= _MASK64
    value ^= value >> 33
    value = (value * 0xFF51AFD7ED558CCD) & _MASK64
    value ^= value >> 33
    value = (value * 0xC4CEB9FE1A85EC53) & _MASK64
    value ^= value >> 33
    return value


def _derive_key(seed: int, path: tuple[int, ...]) -> int:
    key = _mix64(seed)
    for index in path:
        key = _mix64(key ^ _mix64((index + _GAMMA) & _MASK64))
    return key


class RngStream:
    """A deterministic uniform stream addressed by seed and index path."""

    __slots__ = ("seed", "path", "_generator")

    def __init__(self, seed: int, path: tuple[int, ...] = ()):
        self.seed = int(seed) & _MASK64
        self.path = tuple(int(i) for i in path)
        self._generator = np.random.Generator(
            np.random.PCG64(_derive_key(self.seed, self.path))
        )

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, path={self.path})"

    @property
    def generator(self) -> np.random.Generator:
        """The underlying numpy generator (shared state, not a copy)."""
        return self._generator

    def substream(self, *indices: int) -> "RngStream":
        """A fresh stream addressed by this stream's path plus ``indices``."""
        return RngStream(self.seed, self.path + tuple(int(i) for i in indices))

    def random(self) -> float:
        """One uniform draw in [0, 1)."""
        return self._generator.random()

    def exponential(self, rate: float) -> float:
        """One exponential draw by inverse CDF; rate 0 gives infinity.

        A zero rate consumes no uniform, so callers can guard optional
        clocks without disturbing the stream.
        """
        if rate < 0.0:
            raise ValueError(f"rate must be >= 0, got {rate}")
        if rate == 0.0:
            return math.inf
        return -math.log1p(-self._generator.random()) / rate
