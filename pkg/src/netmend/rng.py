"""Deterministic splittable random streams.

Every stochastic choice in the library flows through a numpy Generator that
is derived, not shared: ``derive_rng(master_seed, trial)`` for a trial and
``derive_rng(master_seed, trial, strategy)`` for a strategy within it.  Spawn
keys make the streams independent of each other and of evaluation order, so
results are identical across runs, platforms, and worker counts.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1


def derive_rng(master_seed: int, *key: int) -> np.random.Generator:
    """Independent PCG64 stream for (master_seed, key)."""
    seq = np.random.SeedSequence(master_seed & _MASK64, spawn_key=tuple(key))
    return np.random.Generator(np.random.PCG64(seq))


def pick(rng: np.random.Generator, pool):
    """Uniform choice from a non-empty sequence."""
    return pool[int(rng.integers(len(pool)))]
