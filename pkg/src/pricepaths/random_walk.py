"""Model 1: daily prices as an arithmetic random walk with normal increments."""

from __future__ import annotations

import logging
import operator
from dataclasses import dataclass

import numpy as np

from ._util import frozen_array
from .fitting import NormalMoveModel
from .streams import SeededStream, standard_normals

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Trajectory:
    """A simulated daily price path anchored at the starting price on day 0."""

    prices: np.ndarray
    stream: SeededStream
    model_tag: str

    def __post_init__(self):
        object.__setattr__(self, "prices", frozen_array(self.prices))

    def __len__(self) -> int:
        return len(self.prices)

    @property
    def horizon(self) -> int:
        return len(self.prices) - 1

    @property
    def moves(self) -> np.ndarray:
        return np.diff(self.prices)


def _check_start(p0: float, horizon: int) -> int:
    if not np.isfinite(p0) or p0 <= 0:
        raise ValueError(f"starting price must be finite and positive, got {p0}")
    horizon = operator.index(horizon)
    if horizon < 1:
        raise ValueError(f"horizon must be at least 1 day, got {horizon}")
    return horizon


def _warn_if_nonpositive(prices: np.ndarray, tag: str, log: logging.Logger = logger) -> None:
    low = prices.min()
    if low <= 0:
        log.warning("%s trajectory crossed zero (minimum price %.4f)", tag, low)


def simulate_normal(
    model: NormalMoveModel, p0: float, horizon: int, stream: SeededStream
) -> Trajectory:
    """Simulate one trajectory whose daily moves are i.i.d. Normal(mean, std).

    Returns ``horizon + 1`` prices with ``prices[0] == p0``. Deterministic for
    a fixed stream. Prices are not floored at zero; a crossing is logged.
    """
    horizon = _check_start(p0, horizon)
    rng = stream.generator()
    steps = model.mean + model.std * standard_normals(rng, horizon)
    prices = np.empty(horizon + 1)
    prices[0] = p0
    prices[1:] = p0 + np.cumsum(steps)
    _warn_if_nonpositive(prices, "random-walk")
    return Trajectory(prices=prices, stream=stream, model_tag="normal")


def simulate_normal_ensemble(
    model: NormalMoveModel, p0: float, horizon: int, n_replicates: int, base_seed: int
) -> list[Trajectory]:
    """Independent replicates; replicate k draws from stream (base_seed, k)."""
    n_replicates = operator.index(n_replicates)
    if n_replicates < 1:
        raise ValueError(f"need at least 1 replicate, got {n_replicates}")
    return [
        simulate_normal(model, p0, horizon, SeededStream(base_seed, k))
        for k in range(n_replicates)
    ]
