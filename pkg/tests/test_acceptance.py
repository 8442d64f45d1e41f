"""Acceptance suite: one test per release criterion, each printing a PASS/FAIL line.

Criteria C1-C4 score the pipeline against the user-supplied AAPL 2016
opening-price CSV (see data/README.md) and skip with instructions when that
file is absent. C5-C8 run entirely on synthetic fixtures. Run with::

    pytest tests/test_acceptance.py -v -s
"""

import math
from contextlib import contextmanager
from time import perf_counter

import numpy as np
import pytest

from naive_oracles import (
    naive_bin_index,
    naive_differences,
    naive_entropy_bits,
    naive_events,
    naive_gaps,
    naive_histogram,
    naive_mi_bits,
    naive_sample_daily,
)
from pricepaths import (
    BinningSpec,
    BirthDeathModel,
    EventTrajectory,
    Histogram,
    MoveSeries,
    NormalMoveModel,
    PriceSeries,
    SeededStream,
    bin_indices,
    bin_samples,
    differences,
    entropy_bits,
    evaluate,
    extract_events,
    fit_birth_death,
    fit_normal,
    interevent_gaps,
    lag_pairs,
    make_binning,
    mutual_information_bits,
    sample_daily,
    simulate_birth_death,
    simulate_normal_ensemble,
)
from pricepaths.cli import main as cli_main

# Published values for the 2016 AAPL opening-price dataset.
AAPL_MU = 0.1989
AAPL_SIGMA = 1.2782
AAPL_LAMBDA = 0.5739
AAPL_MU_DEATH = 0.4223
AAPL_MEAN_INCREMENT = 1.0897
AAPL_MEAN_DECREMENT = 1.2235
AAPL_ENTROPY = 3.0241
AAPL_MI_LAG1 = 1.6213
AAPL_MODEL1_ENTROPY = 3.0438
AAPL_MODEL2_ENTROPY = 3.0551
AAPL_MODEL1_MI = 1.5758
AAPL_MODEL2_MI = 1.4066
AAPL_CROSS_MI_MODEL1 = 0.1242
AAPL_CROSS_MI_MODEL2 = 0.1334


@contextmanager
def criterion(cid: str, title: str):
    try:
        yield
    except Exception:
        print(f"[{cid}] FAIL: {title}")
        raise
    print(f"[{cid}] PASS: {title}")


def assert_close(value: float, expected: float, rel: float, what: str) -> None:
    assert abs(value - expected) <= rel * abs(expected), (
        f"{what}: {value:.6f} not within {rel:.2%} of {expected:.6f}"
    )


@pytest.fixture(scope="module")
def aapl_models(aapl_series):
    moves = differences(aapl_series)
    return fit_normal(moves), fit_birth_death(moves)


def test_c1_parameter_recovery(aapl_series, tmp_path):
    from conftest import aapl_csv_path

    with criterion("C1", "fitted parameters match the published AAPL 2016 values"):
        start = perf_counter()
        moves = differences(aapl_series)
        normal = fit_normal(moves)
        bd = fit_birth_death(moves)
        elapsed = perf_counter() - start
        assert_close(normal.mean, AAPL_MU, 0.01, "mu")
        assert_close(normal.std, AAPL_SIGMA, 0.01, "sigma")
        assert_close(bd.birth_rate, AAPL_LAMBDA, 0.01, "lambda")
        assert_close(bd.death_rate, AAPL_MU_DEATH, 0.01, "mu_death")
        assert_close(bd.mean_increment, AAPL_MEAN_INCREMENT, 0.01, "mean increment")
        assert_close(bd.mean_decrement, AAPL_MEAN_DECREMENT, 0.01, "mean decrement")
        assert elapsed < 1.0, f"fit took {elapsed:.3f}s"

        # The fit subcommand must land on the same numbers.
        import json

        assert cli_main(
            ["fit", "--input", str(aapl_csv_path()), "--out-dir", str(tmp_path)]
        ) == 0
        doc = json.loads((tmp_path / "models.json").read_text())
        assert doc["model1"] == {"mu": normal.mean, "sigma": normal.std}
        assert doc["model2"]["lambda"] == bd.birth_rate
        assert doc["model2"]["mu"] == bd.death_rate


def test_c2_actual_row(aapl_series):
    with criterion("C2", "actual-data entropy and lag-1 MI match the published row"):
        start = perf_counter()
        spec = make_binning(aapl_series, 10)
        entropy = entropy_bits(bin_samples(aapl_series.prices, spec))
        x, y = lag_pairs(aapl_series, 1)
        mi = mutual_information_bits(x, y, spec, spec)
        elapsed = perf_counter() - start
        assert abs(entropy - AAPL_ENTROPY) <= 0.15, f"entropy {entropy:.4f}"
        assert abs(mi - AAPL_MI_LAG1) <= 0.15, f"lag-1 MI {mi:.4f}"
        assert elapsed < 1.0, f"actual row took {elapsed:.3f}s"


def test_c3_model_rows(aapl_series, aapl_models):
    with criterion("C3", "model rows match the published table and orderings"):
        start = perf_counter()
        normal, bd = aapl_models
        reports = [
            evaluate(aapl_series, normal, bd, base_seed=3000 + s, n_replicates=100, n_shuffles=0)
            for s in range(20)
        ]
        elapsed = perf_counter() - start

        first = reports[0]
        assert abs(first.row("model1").entropy_bits - AAPL_MODEL1_ENTROPY) <= 0.15
        assert abs(first.row("model2").entropy_bits - AAPL_MODEL2_ENTROPY) <= 0.15
        assert abs(first.row("model1").mi_lag1_bits - AAPL_MODEL1_MI) <= 0.20
        assert abs(first.row("model2").mi_lag1_bits - AAPL_MODEL2_MI) <= 0.20

        ordered = sum(
            1
            for r in reports
            if r.row("model2").entropy_bits > r.row("model1").entropy_bits
            and r.row("model2").mi_lag1_bits < r.row("model1").mi_lag1_bits
        )
        assert ordered >= 16, f"ordering held in only {ordered}/20 runs"
        assert elapsed < 30.0, f"model rows took {elapsed:.1f}s"


def test_c4_cross_move_mi(aapl_series, aapl_models):
    with criterion("C4", "cross-move MI matches published values and beats the bias floor"):
        start = perf_counter()
        normal, bd = aapl_models
        reports = [
            evaluate(
                aapl_series, normal, bd, base_seed=4000 + s, n_replicates=100, n_shuffles=1000
            )
            for s in range(10)
        ]
        elapsed = perf_counter() - start

        first = reports[0]
        mi1 = first.cross_move_mi_bits["model1_vs_actual_moves"]
        mi2 = first.cross_move_mi_bits["model2_vs_actual_moves"]
        assert abs(mi1 - AAPL_CROSS_MI_MODEL1) <= 0.10, f"model1 cross-MI {mi1:.4f}"
        assert abs(mi2 - AAPL_CROSS_MI_MODEL2) <= 0.10, f"model2 cross-MI {mi2:.4f}"

        above_floor = sum(
            1
            for r in reports
            if r.cross_move_mi_bits["model1_vs_actual_moves"] > r.shuffle_floor_bits
            and r.cross_move_mi_bits["model2_vs_actual_moves"] > r.shuffle_floor_bits
        )
        assert above_floor >= 8, f"cross-MI beat the floor in only {above_floor}/10 runs"
        assert elapsed < 60.0, f"cross-MI runs took {elapsed:.1f}s"


def test_c5_estimator_identities():
    with criterion("C5", "entropy/MI estimator identities hold"):
        start = perf_counter()
        rng = np.random.default_rng(55)

        for bins in (1, 2, 7, 10, 16):
            spec = BinningSpec(bin_count=bins, lower=0.0, upper=1.0)
            hist = Histogram(counts=np.full(bins, 9), spec=spec)
            assert abs(entropy_bits(hist) - math.log2(bins)) < 1e-9

        for _ in range(50):
            x = rng.normal(size=rng.integers(4, 300))
            spec = make_binning(x, 10)
            mi_self = mutual_information_bits(x, x, spec, spec)
            assert abs(mi_self - entropy_bits(bin_samples(x, spec))) < 1e-9

            y = rng.normal(size=x.size)
            spec_y = make_binning(y, 10)
            forward = mutual_information_bits(x, y, spec, spec_y)
            backward = mutual_information_bits(y, x, spec_y, spec)
            assert forward >= 0.0
            assert abs(forward - backward) < 1e-12

        for _ in range(1000):
            bins = int(rng.integers(1, 24))
            counts = rng.integers(0, 40, size=bins)
            if counts.sum() == 0:
                counts[rng.integers(bins)] = 1
            hist = Histogram(
                counts=counts, spec=BinningSpec(bin_count=bins, lower=0.0, upper=1.0)
            )
            h = entropy_bits(hist)
            assert -1e-12 <= h <= math.log2(bins) + 1e-12

        elapsed = perf_counter() - start
        assert elapsed < 5.0, f"identity suite took {elapsed:.1f}s"


def test_c6_simulator_statistics():
    with criterion("C6", "simulator statistics match their analytic oracles"):
        start = perf_counter()

        normal = NormalMoveModel(mean=0.1989, std=1.2782)
        n_walkers, horizon = 10_000, 25
        walks = simulate_normal_ensemble(normal, 100.0, horizon, n_walkers, base_seed=61)
        moves = np.concatenate([t.moves for t in walks])
        n = moves.size
        assert abs(moves.mean() - normal.mean) < 3.0 * normal.std / math.sqrt(n)
        var_band = 3.0 * normal.std**2 * math.sqrt(2.0 / (n - 1))
        assert abs(moves.var(ddof=1) - normal.std**2) < var_band

        bd = BirthDeathModel(
            birth_rate=0.5739, death_rate=0.4223, mean_increment=1.0897, mean_decrement=1.2235
        )
        n_reps, window = 10_000, 251.0
        event_trajs = [
            simulate_birth_death(bd, 100.0, window, SeededStream(62, k)) for k in range(n_reps)
        ]

        counts = np.array([t.event_times.size for t in event_trajs], dtype=float)
        expected_count = bd.total_rate * window
        assert abs(counts.mean() - expected_count) < 3.0 * math.sqrt(expected_count / n_reps)

        births = sum(int((t.jumps > 0).sum()) for t in event_trajs)
        total_events = int(counts.sum())
        assert total_events >= 10_000
        p = bd.birth_probability
        frac_band = 3.0 * math.sqrt(p * (1.0 - p) / total_events)
        assert abs(births / total_events - p) < frac_band

        drifts = np.array(
            [(sample_daily(t).prices[-1] - 100.0) / window for t in event_trajs]
        )
        expected_drift = bd.birth_rate * bd.mean_increment - bd.death_rate * bd.mean_decrement
        assert abs(expected_drift - 0.1087) < 5e-4
        drift_band = 3.0 * drifts.std(ddof=1) / math.sqrt(n_reps)
        assert abs(drifts.mean() - expected_drift) < drift_band

        elapsed = perf_counter() - start
        assert elapsed < 60.0, f"simulator statistics took {elapsed:.1f}s"


def test_c7_byte_identical_outputs(sample_csv_path, tmp_path):
    with criterion("C7", "identical seeds give byte-identical CSVs and reports"):
        start = perf_counter()
        sim_args = ["simulate", "--input", str(sample_csv_path), "--model", "both",
                    "--horizon", "50", "--replicates", "5", "--seed", "1234", "--events"]
        eval_args = ["evaluate", "--input", str(sample_csv_path), "--replicates", "5",
                     "--seed", "1234", "--shuffles", "100"]
        for run_dir in ("first", "second"):
            out = tmp_path / run_dir
            assert cli_main(sim_args + ["--out-dir", str(out)]) == 0
            assert cli_main(eval_args + ["--out-dir", str(out)]) == 0
        names = (
            "trajectories_normal.csv",
            "trajectories_bd.csv",
            "events_bd.csv",
            "report.json",
            "table1.csv",
        )
        for name in names:
            first = (tmp_path / "first" / name).read_bytes()
            second = (tmp_path / "second" / name).read_bytes()
            assert first == second, f"{name} differs between identical runs"
        elapsed = perf_counter() - start
        assert elapsed < 10.0, f"determinism check took {elapsed:.1f}s"


def test_c8_brute_force_equivalence():
    with criterion("C8", "tiny-input behavior matches brute-force reimplementations"):
        start = perf_counter()
        rng = np.random.default_rng(88)

        for _ in range(100):
            length = int(rng.integers(2, 13))
            prices = rng.uniform(1.0, 200.0, size=length)
            series = PriceSeries(prices=prices)

            moves = differences(series)
            assert np.allclose(
                moves.moves, naive_differences(prices.tolist()), rtol=0, atol=1e-12
            )

            move_list = moves.moves.tolist()
            if rng.random() < 0.3:
                move_list[int(rng.integers(len(move_list)))] = 0.0
            record = extract_events(
                MoveSeries(moves=np.asarray(move_list), source_length=len(move_list) + 1)
            )
            birth_days, death_days, increments, decrements = naive_events(move_list)
            assert record.birth_days.tolist() == birth_days
            assert record.death_days.tolist() == death_days
            assert np.allclose(record.increments, increments, rtol=0, atol=1e-12)
            assert np.allclose(record.decrements, decrements, rtol=0, atol=1e-12)

            if record.birth_days.size >= 2:
                assert interevent_gaps(record.birth_days).tolist() == naive_gaps(
                    record.birth_days.tolist()
                )

            bins = int(rng.integers(1, 8))
            spec = make_binning(prices, bins)
            idx = bin_indices(prices, spec)
            naive_idx = [
                naive_bin_index(x, spec.lower, spec.upper, spec.bin_count)
                for x in prices.tolist()
            ]
            assert idx.tolist() == naive_idx
            hist = bin_samples(prices, spec)
            assert hist.counts.tolist() == naive_histogram(
                prices.tolist(), spec.lower, spec.upper, spec.bin_count
            )
            assert abs(
                entropy_bits(hist)
                - naive_entropy_bits(hist.counts.tolist())
            ) < 1e-12

            if length >= 3:
                x, y = lag_pairs(prices, 1)
                mi = mutual_information_bits(x, y, spec, spec)
                naive = naive_mi_bits(
                    x.tolist(), y.tolist(), spec.lower, spec.upper, spec.lower, spec.upper,
                    spec.bin_count,
                )
                assert abs(mi - naive) < 1e-12

            n_events = int(rng.integers(0, 9))
            horizon = float(rng.integers(3, 12))
            times = np.sort(rng.uniform(0.01, horizon, size=n_events))
            times = np.unique(times)
            levels = 100.0 + np.cumsum(rng.normal(size=times.size))
            traj = EventTrajectory(
                event_times=times,
                event_prices=levels,
                p0=100.0,
                horizon=horizon,
                stream=SeededStream(1, 0),
            )
            daily = sample_daily(traj)
            assert np.allclose(
                daily.prices,
                naive_sample_daily(times.tolist(), levels.tolist(), 100.0, int(horizon)),
                rtol=0,
                atol=1e-12,
            )

        elapsed = perf_counter() - start
        assert elapsed < 5.0, f"brute-force comparison took {elapsed:.1f}s"
