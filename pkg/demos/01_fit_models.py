"""Fit both price models to the bundled synthetic opening-price series.

The sample file was generated by a normal-increment walk with mean 0.1989
and standard deviation 1.2782 (see data/README.md), so model 1's estimates
should land near those values up to sampling error. Model 2 reads the same
moves as birth/death events and estimates event rates and mean jump sizes.
"""

from _path import DATA

from pricepaths import differences, fit_birth_death, fit_normal, load_price_csv

series = load_price_csv(DATA / "sample_prices.csv")
moves = differences(series)
print(f"loaded {len(series)} prices from {series.label!r}")
print(f"first price {series.prices[0]:.2f}, last price {series.prices[-1]:.2f}")
print(f"derived {len(moves)} day-to-day moves; mean {moves.moves.mean():+.4f}")
print()

normal = fit_normal(moves)
print("model 1 - normal daily moves")
print(f"  estimated mean  {normal.mean:.4f}   (generator used 0.1989)")
print(f"  estimated std   {normal.std:.4f}   (generator used 1.2782)")
print()

bd = fit_birth_death(moves)
print("model 2 - birth-death process")
print(f"  birth rate      {bd.birth_rate:.4f} events/day "
      f"(mean {1.0 / bd.birth_rate:.2f} days between up-moves)")
print(f"  death rate      {bd.death_rate:.4f} events/day "
      f"(mean {1.0 / bd.death_rate:.2f} days between down-moves)")
print(f"  mean increment  {bd.mean_increment:.4f}")
print(f"  mean decrement  {bd.mean_decrement:.4f}")
print(f"  P(next event is a birth) = {bd.birth_probability:.4f}")
print()
print("implied drift of model 2:",
      f"{bd.birth_rate * bd.mean_increment - bd.death_rate * bd.mean_decrement:+.4f} per day",
      f"vs model 1 mean {normal.mean:+.4f}")
