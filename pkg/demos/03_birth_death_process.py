"""Walk through one birth-death event path and its daily resampling.

Events arrive in continuous time with exponential holding times at rate
birth_rate + death_rate; each is an up-jump with probability
birth_rate/(birth_rate + death_rate). Daily prices carry the last event
level forward onto the integer-day grid. An ensemble check compares the
realized daily drift with the analytic value
birth_rate*mean_increment - death_rate*mean_decrement.
"""

import numpy as np

from _path import OUTPUT  # noqa: F401  (not used; keeps demos uniform)

from pricepaths import (
    BirthDeathModel,
    SeededStream,
    sample_daily,
    simulate_bd_ensemble,
    simulate_birth_death,
)

model = BirthDeathModel(
    birth_rate=0.5739, death_rate=0.4223, mean_increment=1.0897, mean_decrement=1.2235
)
print(f"total event rate {model.total_rate:.4f}/day, "
      f"P(birth) {model.birth_probability:.4f}")

traj = simulate_birth_death(model, 100.0, 10.0, SeededStream(2718, 0))
print(f"\nfirst 10 days produced {traj.event_times.size} events:")
print("   time   jump    price")
for t, jump, price in zip(traj.event_times, traj.jumps, traj.event_prices):
    print(f"  {t:5.2f}  {jump:+.3f}  {price:8.3f}")

daily = sample_daily(traj)
print("\ndaily grid (last event carried forward):")
print("  day:   " + "  ".join(f"{d:6d}" for d in range(len(daily))))
print("  price: " + "  ".join(f"{p:6.2f}" for p in daily.prices))

n, horizon = 2000, 251
ensemble = simulate_bd_ensemble(model, 100.0, horizon, n, base_seed=3141)
drifts = np.array([(t.prices[-1] - 100.0) / horizon for t in ensemble])
analytic = model.birth_rate * model.mean_increment - model.death_rate * model.mean_decrement
print(f"\n{n} one-year replicates:")
print(f"  mean daily drift {drifts.mean():+.4f}  (analytic {analytic:+.4f})")
print(f"  drift standard error {drifts.std(ddof=1) / np.sqrt(n):.4f}")
