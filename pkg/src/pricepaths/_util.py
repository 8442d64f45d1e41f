"""Small internal helpers."""

from __future__ import annotations

import numpy as np


def frozen_array(values, dtype=float) -> np.ndarray:
    """Copy ``values`` into a read-only 1-D numpy array."""
    arr = np.array(values, dtype=dtype).reshape(-1)
    arr.setflags(write=False)
    return arr


def sample_values(data) -> np.ndarray:
    """Raw sample values from an array-like, PriceSeries, MoveSeries, or Trajectory."""
    for attr in ("prices", "moves"):
        if hasattr(data, attr):
            return np.asarray(getattr(data, attr), dtype=float)
    return np.asarray(data, dtype=float)
