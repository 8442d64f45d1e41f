"""Opening-price CSV ingestion and day-to-day move extraction."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ._util import frozen_array
from .errors import InsufficientDataError, ParseError, SchemaError

DEFAULT_PRICE_COLUMN = "Open"


@dataclass(frozen=True)
class PriceSeries:
    """Ordered daily prices; array position is the 0-based trading-day ordinal."""

    prices: np.ndarray
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "prices", frozen_array(self.prices))
        if len(self.prices) < 2:
            raise InsufficientDataError(
                f"a price series needs at least 2 prices, got {len(self.prices)}"
            )
        if not np.all(np.isfinite(self.prices)) or np.any(self.prices <= 0):
            raise ValueError("prices must be finite and strictly positive")

    def __len__(self) -> int:
        return len(self.prices)


@dataclass(frozen=True)
class MoveSeries:
    """Signed day-to-day differences: moves[i] = prices[i+1] - prices[i]."""

    moves: np.ndarray
    source_length: int

    def __post_init__(self):
        object.__setattr__(self, "moves", frozen_array(self.moves))
        if len(self.moves) != self.source_length - 1:
            raise ValueError(
                f"expected {self.source_length - 1} moves for a series of "
                f"{self.source_length} prices, got {len(self.moves)}"
            )
        if not np.all(np.isfinite(self.moves)):
            raise ValueError("moves must be finite")

    def __len__(self) -> int:
        return len(self.moves)


def parse_price_csv(
    text: str | io.TextIOBase,
    column: str = DEFAULT_PRICE_COLUMN,
    label: str = "",
) -> PriceSeries:
    """Parse a header-bearing CSV of daily rows into a :class:`PriceSeries`.

    Rows must already be in chronological order; one price is read from
    ``column`` per row and every other column is ignored.

    Raises
    ------
    SchemaError
        If the header is missing or does not contain ``column``.
    ParseError
        If a cell in ``column`` is not a finite positive number.
    InsufficientDataError
        If fewer than 2 data rows are present.
    """
    stream = io.StringIO(text) if isinstance(text, str) else text
    reader = csv.DictReader(stream)
    if reader.fieldnames is None:
        raise SchemaError("empty input: no CSV header found")
    if column not in reader.fieldnames:
        available = ", ".join(reader.fieldnames)
        raise SchemaError(f"no column named {column!r}; available columns: {available}")

    prices: list[float] = []
    for row_number, row in enumerate(reader, start=1):
        raw = row.get(column)
        try:
            value = float(raw) if raw not in (None, "") else math.nan
        except ValueError:
            value = math.nan
        if not math.isfinite(value) or value <= 0:
            raise ParseError(
                f"row {row_number}: {raw!r} in column {column!r} is not a positive price"
            )
        prices.append(value)

    if len(prices) < 2:
        raise InsufficientDataError(f"need at least 2 price rows, got {len(prices)}")
    return PriceSeries(prices=np.asarray(prices), label=label)


def load_price_csv(
    path: str | Path,
    column: str = DEFAULT_PRICE_COLUMN,
    label: str | None = None,
) -> PriceSeries:
    """Read a price CSV from disk; the file name becomes the label by default."""
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as fh:
        return parse_price_csv(fh, column=column, label=path.name if label is None else label)


def differences(series: PriceSeries) -> MoveSeries:
    """Day-to-day moves of a price series; sums telescope to last minus first."""
    return MoveSeries(moves=np.diff(series.prices), source_length=len(series))
