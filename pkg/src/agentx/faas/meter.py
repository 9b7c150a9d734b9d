"""GB-second billing meter for emulated function invocations."""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from decimal import Decimal
from pathlib import Path
from typing import Any

# ap-south-1 cost factor per GB-second
DEFAULT_USD_PER_GB_S = Decimal("0.0000166667")


def faas_cost(duration_ms: int, memory_mb: int,
              usd_per_gb_s: Decimal = DEFAULT_USD_PER_GB_S) -> Decimal:
    """(seconds) x (GB allocated) x cost factor, in decimal arithmetic."""
    if duration_ms < 0 or memory_mb < 0:
        raise ValueError("duration and memory must be non-negative")
    seconds = Decimal(duration_ms) / Decimal(1000)
    gigabytes = Decimal(memory_mb) / Decimal(1024)
    return seconds * gigabytes * usd_per_gb_s


@dataclass(frozen=True)
class InvocationRecord:
    function: str
    duration_ms: int
    memory_mb: int
    billed_usd: Decimal

    def to_json(self) -> dict[str, Any]:
        return {
            "function": self.function,
            "duration_ms": self.duration_ms,
            "memory_mb": self.memory_mb,
            "billed_usd": str(self.billed_usd),
        }


class Meter:
    """Append-only concurrent log of billed invocations."""

    def __init__(self, usd_per_gb_s: Decimal = DEFAULT_USD_PER_GB_S):
        self.usd_per_gb_s = usd_per_gb_s
        self._records: list[InvocationRecord] = []
        self._lock = threading.Lock()

    def record(self, function: str, duration_ms: int, memory_mb: int) -> InvocationRecord:
        rec = InvocationRecord(
            function=function,
            duration_ms=duration_ms,
            memory_mb=memory_mb,
            billed_usd=faas_cost(duration_ms, memory_mb, self.usd_per_gb_s),
        )
        with self._lock:
            self._records.append(rec)
        return rec

    def records(self) -> list[InvocationRecord]:
        with self._lock:
            return list(self._records)

    def total_usd(self) -> Decimal:
        with self._lock:
            return sum((r.billed_usd for r in self._records), Decimal(0))

    def mark(self) -> int:
        """Cursor into the log, for attributing later records to one run."""
        with self._lock:
            return len(self._records)

    def since(self, mark: int) -> list[InvocationRecord]:
        with self._lock:
            return list(self._records[mark:])

    def dump(self, path: Path | str) -> None:
        doc = {
            "format": "faas_meter.v1",
            "usd_per_gb_s": str(self.usd_per_gb_s),
            "records": [r.to_json() for r in self.records()],
            "total_usd": str(self.total_usd()),
        }
        Path(path).write_text(json.dumps(doc, indent=1), encoding="utf-8")
