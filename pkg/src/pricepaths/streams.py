"""Seedable replicate streams and the pinned random-variate recipes.

Reproducibility contract
------------------------
Every replicate draws from numpy's ``Philox`` counter-based generator keyed
by the 128-bit pair ``(seed, stream_id)``, so replicate *k* of a run is the
stream ``(base_seed, k)`` and two runs with equal seeds are bit-identical.

Uniform doubles are ``Generator.random`` clamped to ``[2**-53, 1 - 2**-53]``
so the inverse-CDF transforms below never hit 0 or 1. Normal and exponential
variates are produced by inverse CDF, one uniform per variate, which keeps
the position of every draw in the stream countable (numpy's default normal
and exponential samplers are rejection-based and consume a variable number
of words).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import ndtri

_TINY = 2.0**-53

# Seed offsets used when one base seed has to feed several independent
# ensembles (e.g. both models inside one evaluation run).
NORMAL_SEED_OFFSET = 0
BD_SEED_OFFSET = 1
SHUFFLE_SEED_OFFSET = 2


def derived_seed(base_seed: int, offset: int) -> int:
    """Derive a per-purpose seed from a base seed, wrapping at 2**64."""
    return (int(base_seed) + int(offset)) % 2**64


@dataclass(frozen=True)
class SeededStream:
    """One replicate's random stream, identified by ``(seed, stream_id)``."""

    seed: int
    stream_id: int = 0

    def __post_init__(self):
        for name in ("seed", "stream_id"):
            value = getattr(self, name)
            if not 0 <= int(value) < 2**64:
                raise ValueError(f"{name} must be an unsigned 64-bit integer, got {value}")

    def generator(self) -> np.random.Generator:
        key = np.array([self.seed, self.stream_id], dtype=np.uint64)
        return np.random.Generator(np.random.Philox(key=key))


def open_uniforms(rng: np.random.Generator, size=None) -> np.ndarray:
    """Uniforms strictly inside (0, 1)."""
    return np.maximum(rng.random(size), _TINY)


def standard_normals(rng: np.random.Generator, size=None) -> np.ndarray:
    """Standard normal variates via inverse CDF, one uniform each."""
    return ndtri(open_uniforms(rng, size))


def exponentials(rng: np.random.Generator, mean: float, size=None) -> np.ndarray:
    """Exponential variates with the given mean via inverse CDF, one uniform each."""
    if mean <= 0:
        raise ValueError(f"exponential mean must be positive, got {mean}")
    return -mean * np.log(open_uniforms(rng, size))
