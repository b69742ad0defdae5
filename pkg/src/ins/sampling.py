"""Seeded random generation of discrete sets for law checking and tests.

All randomness flows through :func:`rng_from_seed`, a PCG64 generator, so
every report is reproducible from its seed across platforms. Endpoints are
drawn as sorted pairs of uniform samples, which keeps them on the 2**-53
grid where complement reflection (1 - x) is exact in floating point.
"""

from __future__ import annotations

import numpy as np

from .core import DiscreteINS

__all__ = [
    "rng_from_seed",
    "random_universe",
    "random_set",
    "random_superset",
    "random_subset",
]

_UNIVERSE_CACHE: dict[int, tuple[str, ...]] = {}


def rng_from_seed(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_universe(rng: np.random.Generator, min_size: int = 1, max_size: int = 8) -> tuple[str, ...]:
    """A universe x1..xk with k drawn uniformly from [min_size, max_size]."""
    size = int(rng.integers(min_size, max_size + 1))
    cached = _UNIVERSE_CACHE.get(size)
    if cached is None:
        cached = _UNIVERSE_CACHE[size] = tuple(f"x{i}" for i in range(1, size + 1))
    return cached


def random_set(rng: np.random.Generator, universe: tuple[str, ...]) -> DiscreteINS:
    """Uniformly random set: each component interval is a sorted pair of
    uniform [0, 1] samples."""
    n = len(universe)
    data = rng.random((n, 3, 2))
    data.sort(axis=2)
    return DiscreteINS.from_array(universe, data.reshape(n, 6))


def random_superset(rng: np.random.Generator, a: DiscreteINS) -> DiscreteINS:
    """A random set containing ``a``: truth endpoints pushed up, the others
    pushed down, respecting interval ordering.

    Uses only min/max against fresh uniform draws, never arithmetic, so the
    result stays on the same dyadic grid as the draws.
    """
    d = a.endpoints
    r = rng.random(d.shape)
    out = np.empty_like(d)
    # truth: raise both endpoints
    out[:, 1] = np.maximum(d[:, 1], r[:, 1])
    out[:, 0] = np.maximum(d[:, 0], np.minimum(r[:, 0], out[:, 1]))
    # indeterminacy and falsity: lower both endpoints
    for lo, hi in ((2, 3), (4, 5)):
        out[:, lo] = np.minimum(d[:, lo], r[:, lo])
        out[:, hi] = np.minimum(d[:, hi], np.maximum(r[:, hi], out[:, lo]))
    return DiscreteINS.from_array(a.universe, out)


def random_subset(rng: np.random.Generator, a: DiscreteINS) -> DiscreteINS:
    """A random set contained in ``a``: the mirror of :func:`random_superset`."""
    d = a.endpoints
    r = rng.random(d.shape)
    out = np.empty_like(d)
    # truth: lower both endpoints
    out[:, 0] = np.minimum(d[:, 0], r[:, 0])
    out[:, 1] = np.minimum(d[:, 1], np.maximum(r[:, 1], out[:, 0]))
    # indeterminacy and falsity: raise both endpoints
    for lo, hi in ((2, 3), (4, 5)):
        out[:, hi] = np.maximum(d[:, hi], r[:, hi])
        out[:, lo] = np.maximum(d[:, lo], np.minimum(r[:, lo], out[:, hi]))
    return DiscreteINS.from_array(a.universe, out)
