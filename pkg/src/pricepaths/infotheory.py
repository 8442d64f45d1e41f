"""Histogram (plug-in) estimators for Shannon entropy and mutual information.

All quantities are in bits. The binning policy is fixed equal-width bins over
the range of the data that defined the spec; samples outside that range are
clamped into the edge bins so simulated output can be scored on the binning
derived from the actual data.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass

import numpy as np

from ._util import frozen_array, sample_values
from .errors import InsufficientDataError


@dataclass(frozen=True)
class BinningSpec:
    """Equal-width binning: ``bin_count`` bins spanning [lower, upper]."""

    bin_count: int
    lower: float
    upper: float
    source_tag: str = ""

    def __post_init__(self):
        if self.bin_count < 1:
            raise ValueError(f"bin_count must be at least 1, got {self.bin_count}")
        if not (np.isfinite(self.lower) and np.isfinite(self.upper)):
            raise ValueError("bin edges must be finite")
        if self.lower >= self.upper:
            raise ValueError(f"lower edge {self.lower} must be below upper edge {self.upper}")

    @property
    def width(self) -> float:
        return (self.upper - self.lower) / self.bin_count


@dataclass(frozen=True)
class Histogram:
    """Bin counts under a :class:`BinningSpec`."""

    counts: np.ndarray
    spec: BinningSpec

    def __post_init__(self):
        object.__setattr__(self, "counts", frozen_array(self.counts, dtype=np.int64))
        if len(self.counts) != self.spec.bin_count:
            raise ValueError("one count per bin required")
        if np.any(self.counts < 0) or self.total < 1:
            raise ValueError("counts must be non-negative with at least one sample")

    @property
    def total(self) -> int:
        return int(self.counts.sum())


def make_binning(samples, bin_count: int, source_tag: str = "") -> BinningSpec:
    """Equal-width bins spanning min..max of ``samples``.

    Constant samples give a degenerate single-bin spec (unit width) so that
    entropy is well-defined and zero.
    """
    bin_count = operator.index(bin_count)
    if bin_count < 1:
        raise ValueError(f"bin_count must be at least 1, got {bin_count}")
    x = sample_values(samples)
    if x.size == 0:
        raise ValueError("cannot derive a binning from an empty sample")
    if not np.all(np.isfinite(x)):
        raise ValueError("samples must be finite")
    lower = float(x.min())
    upper = float(x.max())
    if lower == upper:
        return BinningSpec(bin_count=1, lower=lower, upper=lower + 1.0, source_tag=source_tag)
    return BinningSpec(bin_count=bin_count, lower=lower, upper=upper, source_tag=source_tag)


def bin_indices(samples, spec: BinningSpec) -> np.ndarray:
    """Bin index per sample: floor((x - lower)/width), clamped into the edge bins."""
    x = sample_values(samples)
    raw = np.floor((x - spec.lower) / spec.width).astype(np.int64)
    return np.clip(raw, 0, spec.bin_count - 1)


def bin_samples(samples, spec: BinningSpec) -> Histogram:
    """Histogram of ``samples`` under ``spec``; out-of-range values land in edge bins."""
    counts = np.bincount(bin_indices(samples, spec), minlength=spec.bin_count)
    return Histogram(counts=counts, spec=spec)


def _entropy_of_counts(counts: np.ndarray) -> float:
    total = counts.sum()
    p = counts[counts > 0] / total
    return float(-(p * np.log2(p)).sum())


def entropy_bits(hist: Histogram) -> float:
    """Plug-in Shannon entropy in bits; empty bins contribute zero."""
    return _entropy_of_counts(np.asarray(hist.counts))


def mutual_information_bits(xs, ys, spec_x: BinningSpec, spec_y: BinningSpec) -> float:
    """Plug-in mutual information H(X) + H(Y) - H(X, Y) in bits.

    ``xs`` and ``ys`` are paired sample arrays of equal length, binned on
    their own specs into a 2-D joint histogram. The estimator is clamped at
    zero to absorb floating-point residue.
    """
    ix = bin_indices(xs, spec_x)
    iy = bin_indices(ys, spec_y)
    if ix.size != iy.size:
        raise ValueError(f"paired samples differ in length: {ix.size} vs {iy.size}")
    if ix.size == 0:
        raise ValueError("cannot estimate mutual information from zero pairs")
    joint = np.bincount(
        ix * spec_y.bin_count + iy, minlength=spec_x.bin_count * spec_y.bin_count
    ).reshape(spec_x.bin_count, spec_y.bin_count)
    h_x = _entropy_of_counts(joint.sum(axis=1))
    h_y = _entropy_of_counts(joint.sum(axis=0))
    h_xy = _entropy_of_counts(joint.reshape(-1))
    return max(h_x + h_y - h_xy, 0.0)


def lag_pairs(series, lag: int = 1) -> tuple[np.ndarray, np.ndarray]:
    """Pairs (x[t], x[t+lag]) as two aligned arrays of length ``len - lag``."""
    lag = operator.index(lag)
    if lag < 1:
        raise ValueError(f"lag must be at least 1, got {lag}")
    x = sample_values(series)
    if x.size <= lag:
        raise InsufficientDataError(
            f"series of length {x.size} has no pairs at lag {lag}"
        )
    return x[:-lag], x[lag:]
