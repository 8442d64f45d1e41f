import os
import sys
from pathlib import Path

import pytest
from hypothesis import settings

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")

ROOT = Path(__file__).resolve().parents[1]
SRC = ROOT / "src"
TESTS = ROOT / "tests"
for entry in (str(ROOT), str(SRC), str(TESTS)):
    if entry not in sys.path:
        sys.path.insert(0, entry)

from pricepaths import load_price_csv  # noqa: E402

SAMPLE_CSV = ROOT / "data" / "sample_prices.csv"

# The real 2016 AAPL opening-price file is supplied by the user, not shipped.
AAPL_ENV = "AAPL_2016_CSV"
AAPL_DEFAULT = ROOT / "data" / "aapl_2016_open.csv"


def aapl_csv_path() -> Path:
    return Path(os.environ.get(AAPL_ENV, AAPL_DEFAULT))


@pytest.fixture(scope="session")
def sample_csv_path() -> Path:
    return SAMPLE_CSV


@pytest.fixture(scope="session")
def sample_series():
    return load_price_csv(SAMPLE_CSV)


@pytest.fixture(scope="session")
def aapl_series():
    path = aapl_csv_path()
    if not path.exists():
        pytest.skip(
            f"AAPL 2016 opening-price CSV not found at {path}; place it there or set "
            f"${AAPL_ENV} (see data/README.md)"
        )
    return load_price_csv(path)
