"""Model 2: the price as a continuous-time birth-death process.

Events arrive with exponential holding times at the combined rate; each event
is a birth with probability birth_rate/total_rate and moves the price up by
an exponential increment, otherwise down by an exponential decrement. Daily
trajectories come from sampling the event path on the integer-day grid.
"""

from __future__ import annotations

import logging
import math
import operator
from dataclasses import dataclass

import numpy as np

from ._util import frozen_array
from .fitting import BirthDeathModel
from .random_walk import Trajectory, _check_start, _warn_if_nonpositive
from .streams import SeededStream, exponentials, open_uniforms

logger = logging.getLogger(__name__)

# Holding times are drawn in deterministic batches; bounded so absurd rates
# cannot demand one giant allocation.
_MAX_BATCH = 1 << 20


@dataclass(frozen=True)
class EventTrajectory:
    """Continuous-time event path: price level after each event."""

    event_times: np.ndarray
    event_prices: np.ndarray
    p0: float
    horizon: float
    stream: SeededStream

    def __post_init__(self):
        object.__setattr__(self, "event_times", frozen_array(self.event_times))
        object.__setattr__(self, "event_prices", frozen_array(self.event_prices))
        if len(self.event_times) != len(self.event_prices):
            raise ValueError("one price level per event time required")
        if len(self.event_times) > 0:
            if np.any(np.diff(self.event_times) <= 0):
                raise ValueError("event times must be strictly increasing")
            if self.event_times[0] <= 0 or self.event_times[-1] > self.horizon:
                raise ValueError("event times must lie in (0, horizon]")

    @property
    def jumps(self) -> np.ndarray:
        """Signed price change at each event."""
        return np.diff(np.concatenate(([self.p0], self.event_prices)))


def _holding_batch_size(total_rate: float, horizon: float) -> int:
    expected = total_rate * horizon
    return min(_MAX_BATCH, int(expected + 6.0 * math.sqrt(expected + 1.0)) + 16)


def simulate_birth_death(
    model: BirthDeathModel, p0: float, horizon: float, stream: SeededStream
) -> EventTrajectory:
    """Simulate the event path on (0, horizon].

    Holding times are Exponential(total_rate); the event that would cross the
    horizon is discarded. Stream consumption order: batches of holding times
    until the horizon is crossed, then one branch uniform and one magnitude
    uniform per kept event.
    """
    if not np.isfinite(p0) or p0 <= 0:
        raise ValueError(f"starting price must be finite and positive, got {p0}")
    if not np.isfinite(horizon) or horizon <= 0:
        raise ValueError(f"horizon must be a positive time span, got {horizon}")

    rng = stream.generator()
    batch = _holding_batch_size(model.total_rate, horizon)
    mean_gap = 1.0 / model.total_rate

    chunks = []
    elapsed = 0.0
    while True:
        cum = elapsed + np.cumsum(exponentials(rng, mean_gap, batch))
        inside = cum <= horizon
        if inside.all():
            chunks.append(cum)
            elapsed = cum[-1]
            continue
        chunks.append(cum[inside])
        break
    event_times = np.concatenate(chunks)

    n = event_times.size
    births = open_uniforms(rng, n) <= model.birth_probability
    # log(u) < 0: births add -mean_increment*log(u), deaths subtract the
    # corresponding exponential decrement.
    jumps = np.log(open_uniforms(rng, n)) * np.where(
        births, -model.mean_increment, model.mean_decrement
    )
    event_prices = p0 + np.cumsum(jumps)
    if n > 0:
        _warn_if_nonpositive(event_prices, "birth-death", logger)

    return EventTrajectory(
        event_times=event_times,
        event_prices=event_prices,
        p0=float(p0),
        horizon=float(horizon),
        stream=stream,
    )


def sample_daily(traj: EventTrajectory) -> Trajectory:
    """Daily prices from an event path: price after the last event on or before each day.

    Day 0 is the starting price; the step function is right-continuous, so an
    event at exactly day t is reflected in day t's price.
    """
    n_days = int(math.floor(traj.horizon))
    days = np.arange(1, n_days + 1, dtype=float)
    levels = np.concatenate(([traj.p0], traj.event_prices))
    idx = np.searchsorted(traj.event_times, days, side="right")
    prices = np.empty(n_days + 1)
    prices[0] = traj.p0
    prices[1:] = levels[idx]
    return Trajectory(prices=prices, stream=traj.stream, model_tag="bd")


def simulate_bd_ensemble(
    model: BirthDeathModel, p0: float, horizon: int, n_replicates: int, base_seed: int
) -> list[Trajectory]:
    """Independent daily replicates; replicate k draws from stream (base_seed, k)."""
    horizon = _check_start(p0, horizon)
    n_replicates = operator.index(n_replicates)
    if n_replicates < 1:
        raise ValueError(f"need at least 1 replicate, got {n_replicates}")
    return [
        sample_daily(simulate_birth_death(model, p0, horizon, SeededStream(base_seed, k)))
        for k in range(n_replicates)
    ]
