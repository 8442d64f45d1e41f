"""Histogram entropy and mutual information on the bundled price series.

Ten equal-width bins span the range of the actual data; entropy is measured
over the binned price levels and mutual information over consecutive-day
price pairs, both in bits. Two identities give a quick trust check: a
uniform histogram has entropy log2(bins), and MI of a series with itself
equals its entropy.
"""

import math

import numpy as np

from _path import DATA

from pricepaths import (
    bin_samples,
    differences,
    entropy_bits,
    lag_pairs,
    load_price_csv,
    make_binning,
    mutual_information_bits,
)

series = load_price_csv(DATA / "sample_prices.csv")
spec = make_binning(series, 10, source_tag="sample prices")
print(f"binning: {spec.bin_count} bins of width {spec.width:.3f} "
      f"over [{spec.lower:.2f}, {spec.upper:.2f}]")

hist = bin_samples(series.prices, spec)
print(f"bin counts: {hist.counts.tolist()}")
print(f"price-level entropy  {entropy_bits(hist):.4f} bits "
      f"(maximum possible {math.log2(spec.bin_count):.4f})")

x, y = lag_pairs(series, 1)
mi = mutual_information_bits(x, y, spec, spec)
print(f"lag-1 price MI       {mi:.4f} bits")

moves = differences(series)
move_spec = make_binning(moves, 10, source_tag="sample moves")
move_hist = bin_samples(moves.moves, move_spec)
print(f"move entropy         {entropy_bits(move_hist):.4f} bits")

print("\nidentity checks")
uniform = bin_samples(np.arange(10.0), make_binning(np.arange(10.0), 10))
print(f"  uniform 10-bin entropy = {entropy_bits(uniform):.4f} "
      f"(log2(10) = {math.log2(10):.4f})")
self_mi = mutual_information_bits(series.prices, series.prices, spec, spec)
print(f"  MI(prices, prices) = {self_mi:.4f} "
      f"(entropy of prices = {entropy_bits(hist):.4f})")
