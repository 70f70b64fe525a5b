"""Deterministic RNG stream derivation.

Every stochastic routine in the package takes an explicit generator or a
(seed, stream index) pair.  Streams are derived with numpy's SeedSequence,
which guarantees stable, platform-independent streams for a fixed bit
generator (PCG64 here): stream(seed, i, j, ...) is the generator seeded by
SeedSequence(entropy=seed, spawn_key=(i, j, ...)).
"""

from __future__ import annotations

import numpy as np

DEFAULT_SEED = 20210907


def stream(seed: int, *indices: int) -> np.random.Generator:
    """Independent generator for (master seed, stream indices)."""
    if seed < 0:
        raise ValueError("seed must be nonnegative")
    seq = np.random.SeedSequence(entropy=seed, spawn_key=tuple(int(i) for i in indices))
    return np.random.Generator(np.random.PCG64(seq))
