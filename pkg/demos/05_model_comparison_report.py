"""Run the full model-comparison experiment on the bundled series.

Both models are fitted to the sample data, 100 one-year replicates are
simulated per model, and each replicate is scored with the entropy and
lag-1 MI of the actual-data binning. The cross-move MI pairs each
replicate's daily moves with the actual ones; the shuffle floor shows how
much MI the plug-in estimator reports for genuinely unrelated series, so
values above it indicate real distributional similarity.
"""

from _path import DATA

from pricepaths import differences, evaluate, fit_birth_death, fit_normal, load_price_csv

series = load_price_csv(DATA / "sample_prices.csv")
moves = differences(series)
normal = fit_normal(moves)
bd = fit_birth_death(moves)

report = evaluate(series, normal, bd, base_seed=20160104, n_replicates=100, n_shuffles=1000)

print(f"{'source':<10} {'entropy_bits':>13} {'mi_lag1_bits':>13} {'replicates':>11}")
for row in report.rows:
    print(f"{row.source:<10} {row.entropy_bits:>13.4f} {row.mi_lag1_bits:>13.4f} "
          f"{row.n_replicates:>11}")

cross = report.cross_move_mi_bits
print(f"\ncross-move MI vs actual: model1 {cross['model1_vs_actual_moves']:.4f}, "
      f"model2 {cross['model2_vs_actual_moves']:.4f}")
print(f"shuffle bias floor (99th percentile of {report.n_shuffles} permutations): "
      f"{report.shuffle_floor_bits:.4f}")
print(f"\neverything above reproduces exactly from base_seed={report.base_seed}")
