"""Maximum-likelihood parameter estimates for the two price-move models.

Model 1 treats daily moves as i.i.d. normal draws. Model 2 treats up-moves as
births and down-moves as deaths of a continuous-time process: event rates come
from exponential MLE on the day-index gaps between same-type events, jump
sizes from the sample means of the move magnitudes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._util import frozen_array, sample_values
from .errors import InsufficientDataError, SchemaError


@dataclass(frozen=True)
class NormalMoveModel:
    """Fitted normal distribution of the daily move (dollars/day)."""

    mean: float
    std: float

    def __post_init__(self):
        if not (np.isfinite(self.mean) and np.isfinite(self.std)):
            raise ValueError("normal move parameters must be finite")
        if self.std < 0:
            raise ValueError(f"standard deviation must be >= 0, got {self.std}")


@dataclass(frozen=True)
class EventRecord:
    """Up/down moves partitioned into birth and death events with day indices."""

    birth_days: np.ndarray
    death_days: np.ndarray
    increments: np.ndarray
    decrements: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "birth_days", frozen_array(self.birth_days, dtype=np.int64))
        object.__setattr__(self, "death_days", frozen_array(self.death_days, dtype=np.int64))
        object.__setattr__(self, "increments", frozen_array(self.increments))
        object.__setattr__(self, "decrements", frozen_array(self.decrements))
        if len(self.birth_days) != len(self.increments):
            raise ValueError("one increment per birth day required")
        if len(self.death_days) != len(self.decrements):
            raise ValueError("one decrement per death day required")
        if np.any(self.increments <= 0) or np.any(self.decrements <= 0):
            raise ValueError("jump magnitudes must be strictly positive")


@dataclass(frozen=True)
class BirthDeathModel:
    """Fitted birth-death process: event rates (1/day) and mean jump sizes (dollars)."""

    birth_rate: float
    death_rate: float
    mean_increment: float
    mean_decrement: float

    def __post_init__(self):
        for name in ("birth_rate", "death_rate", "mean_increment", "mean_decrement"):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0:
                raise ValueError(f"{name} must be finite and strictly positive, got {value}")

    @property
    def total_rate(self) -> float:
        return self.birth_rate + self.death_rate

    @property
    def birth_probability(self) -> float:
        """Chance that the next event is a birth rather than a death."""
        return self.birth_rate / self.total_rate


def fit_normal(moves) -> NormalMoveModel:
    """Fit the daily-move normal distribution: sample mean and (n-1) std."""
    d = sample_values(moves)
    if d.size < 2:
        raise InsufficientDataError(f"need at least 2 moves to fit, got {d.size}")
    return NormalMoveModel(mean=float(d.mean()), std=float(d.std(ddof=1)))


def extract_events(moves) -> EventRecord:
    """Partition strictly positive and strictly negative moves; zeros drop out."""
    d = sample_values(moves)
    if d.size == 0:
        raise InsufficientDataError("no moves to classify")
    up = d > 0
    down = d < 0
    return EventRecord(
        birth_days=np.flatnonzero(up),
        death_days=np.flatnonzero(down),
        increments=d[up],
        decrements=-d[down],
    )


def interevent_gaps(event_days) -> np.ndarray:
    """Day-index gaps between consecutive events of one type."""
    days = np.asarray(event_days)
    if days.size < 2:
        raise InsufficientDataError(f"need at least 2 events to measure gaps, got {days.size}")
    gaps = np.diff(days)
    if np.any(gaps <= 0):
        raise ValueError("event days must be strictly increasing")
    return gaps


def fit_exponential_rate(samples) -> float:
    """Exponential MLE: rate = 1 / sample mean."""
    x = np.asarray(samples, dtype=float)
    if x.size == 0:
        raise ValueError("cannot fit an exponential rate to an empty sample")
    if np.any(x <= 0) or not np.all(np.isfinite(x)):
        raise ValueError("exponential samples must be finite and strictly positive")
    return float(1.0 / x.mean())


def fit_birth_death(moves) -> BirthDeathModel:
    """Fit event rates from same-type gap MLEs and jump means from magnitudes."""
    events = extract_events(moves)
    for side, days in (("births", events.birth_days), ("deaths", events.death_days)):
        if days.size < 2:
            raise InsufficientDataError(
                f"need at least 2 {side} to measure inter-event gaps, got {days.size}"
            )
    return BirthDeathModel(
        birth_rate=fit_exponential_rate(interevent_gaps(events.birth_days)),
        death_rate=fit_exponential_rate(interevent_gaps(events.death_days)),
        mean_increment=float(events.increments.mean()),
        mean_decrement=float(events.decrements.mean()),
    )


def models_to_dict(normal: NormalMoveModel, birth_death: BirthDeathModel) -> dict:
    """JSON-ready document with the fixed model1/model2 key layout."""
    return {
        "model1": {"mu": float(normal.mean), "sigma": float(normal.std)},
        "model2": {
            "lambda": float(birth_death.birth_rate),
            "mu": float(birth_death.death_rate),
            "mean_increment": float(birth_death.mean_increment),
            "mean_decrement": float(birth_death.mean_decrement),
        },
    }


def models_from_dict(doc: dict) -> tuple[NormalMoveModel, BirthDeathModel]:
    """Inverse of :func:`models_to_dict`."""
    try:
        m1 = doc["model1"]
        m2 = doc["model2"]
        normal = NormalMoveModel(mean=float(m1["mu"]), std=float(m1["sigma"]))
        birth_death = BirthDeathModel(
            birth_rate=float(m2["lambda"]),
            death_rate=float(m2["mu"]),
            mean_increment=float(m2["mean_increment"]),
            mean_decrement=float(m2["mean_decrement"]),
        )
    except KeyError as exc:
        raise SchemaError(f"models document is missing key {exc}") from None
    return normal, birth_death
