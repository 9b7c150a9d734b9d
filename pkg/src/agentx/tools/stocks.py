"""Stock history tool and the seeded random-walk that generates its fixtures."""

from __future__ import annotations

import datetime
import random
import zlib
from dataclasses import dataclass

from ..errors import ToolError, UnknownTicker
from ..mcp.protocol import ToolResult
from .context import ToolContext

# fixture universe and generation parameters; regenerating with the same seed
# reproduces the shipped CSVs byte-for-byte
TICKERS = ("AAPL", "GOOGL", "MSFT", "NFLX", "DIS", "AMZN", "KO", "PEP", "MDLZ")
STOCK_SEED = 796_231
SERIES_POINTS = 252  # one trading year
SERIES_END = datetime.date(2025, 6, 30)

PERIOD_POINTS = {"1mo": 21, "3mo": 63, "6mo": 126, "1y": SERIES_POINTS}


@dataclass(frozen=True)
class StockSeries:
    ticker: str
    points: tuple[tuple[str, float], ...]  # (ISO date, close), dates strictly increasing

    def __post_init__(self):
        dates = [p[0] for p in self.points]
        if any(a >= b for a, b in zip(dates, dates[1:])):
            raise ValueError("dates must be strictly increasing")

    def to_csv(self) -> str:
        rows = [f"{d},{c:.2f}" for d, c in self.points]
        return "date,close\n" + "\n".join(rows) + "\n"

    @classmethod
    def from_csv(cls, ticker: str, text: str) -> "StockSeries":
        rows = text.strip().splitlines()[1:]
        points = tuple((d, float(c)) for d, c in (row.split(",") for row in rows))
        return cls(ticker=ticker, points=points)


def business_days_back(end: datetime.date, count: int) -> list[datetime.date]:
    days: list[datetime.date] = []
    cursor = end
    while len(days) < count:
        if cursor.weekday() < 5:
            days.append(cursor)
        cursor -= datetime.timedelta(days=1)
    return list(reversed(days))


def generate_series(ticker: str, points: int = SERIES_POINTS, seed: int = STOCK_SEED) -> StockSeries:
    rng = random.Random(seed + zlib.crc32(ticker.encode("ascii")))
    price = 40.0 + (zlib.crc32(ticker.encode("ascii")) % 400)
    values = []
    for day in business_days_back(SERIES_END, points):
        price = max(1.0, price * (1.0 + rng.gauss(0.0004, 0.015)))
        values.append((day.isoformat(), round(price, 2)))
    return StockSeries(ticker=ticker, points=tuple(values))


def get_stock_history(ctx: ToolContext, ticker: str, period: str = "1y") -> ToolResult:
    """Full untruncated price series; downstream consumers get every point."""
    if period not in PERIOD_POINTS:
        raise ToolError(f"unsupported period {period!r}; use one of {sorted(PERIOD_POINTS)}")
    symbol = ticker.upper()
    key = f"{symbol}.csv"
    if not ctx.fixtures.has("yfinance", key):
        raise UnknownTicker(f"no price history for ticker {ticker!r}")
    series = StockSeries.from_csv(symbol, ctx.fixtures.text("yfinance", key))
    wanted = PERIOD_POINTS[period]
    if wanted < len(series.points):
        series = StockSeries(ticker=symbol, points=series.points[-wanted:])
    return ToolResult(content=f"{symbol} daily close ({period}):\n{series.to_csv()}")
