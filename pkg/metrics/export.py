"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │          METRICS EXPORT             │
 *  └─────────────────────────────────────┘
 *  CSV serialization of run and aggregate metrics
 *
 *  Parameters:
 *  - None
 *
 *  Returns:
 *  - export_csv, parse_csv, export_aggregate_csv
 *
 *  Notes:
 *  - Output is byte-deterministic for a given input
 *  - Lines end with '\n'
 */
"""

import csv
import io
from typing import List, Optional, Sequence

from config import CSV_ENERGY_DIGITS
from core.models import AggregateStats, RoundRecord, RunSummary


RUN_HEADER = ["round", "alive", "cluster_heads", "packets_to_bs_cum", "total_residual_energy_j"]
AGGREGATE_HEADER = [
    "protocol", "seed_count",
    "fnd_mean", "fnd_std", "hnd_mean", "hnd_std", "lnd_mean", "lnd_std",
    "packets_mean"
]


def format_energy(value: float) -> str:
    return f"{value:.{CSV_ENERGY_DIGITS}g}"


def format_optional(value: Optional[float]) -> str:
    """Empty field for a missing statistic"""
    return "" if value is None else repr(float(value))


def write_rows(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    """Render rows as CSV text"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def export_csv(summary: RunSummary) -> str:
    """
     ┌─────────────────────────────────────┐
     │           EXPORT_CSV                │
     └─────────────────────────────────────┘
     Per-round metrics of one run as CSV

     Parameters:
     - summary: run summary

     Returns:
     - Header line plus one row per round
    """
    rows = [
        [rec.round, rec.alive, rec.cluster_heads, rec.packets_to_bs_cumulative,
         format_energy(rec.total_residual_energy)]
        for rec in summary.records
    ]
    return write_rows(RUN_HEADER, rows)


def parse_csv(text: str) -> List[RoundRecord]:
    """Parse export_csv output back into records"""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != RUN_HEADER:
        raise ValueError(f"unexpected metrics header: {header}")
    return [
        RoundRecord(
            round=int(row[0]),
            alive=int(row[1]),
            cluster_heads=int(row[2]),
            packets_to_bs_cumulative=int(row[3]),
            total_residual_energy=float(row[4])
        )
        for row in reader if row
    ]


def export_aggregate_csv(stats: Sequence[AggregateStats]) -> str:
    """One row per protocol with milestone means/stds and mean packets"""
    rows = [
        [s.protocol.value, s.seed_count,
         format_optional(s.fnd_mean), format_optional(s.fnd_std),
         format_optional(s.hnd_mean), format_optional(s.hnd_std),
         format_optional(s.lnd_mean), format_optional(s.lnd_std),
         format_optional(s.packets_mean)]
        for s in stats
    ]
    return write_rows(AGGREGATE_HEADER, rows)
