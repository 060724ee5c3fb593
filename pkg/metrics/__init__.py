"""
Metrics module for the WSN clustering simulator

This module records per-round metrics and lifetime milestones,
exports them as CSV and aggregates multi-seed results.
"""

from .recorder import record_round, milestones_from_records
from .export import (
    RUN_HEADER,
    AGGREGATE_HEADER,
    export_csv,
    parse_csv,
    export_aggregate_csv,
    write_rows
)
from .aggregate import aggregate_runs, mean_std

__all__ = [
    'record_round',
    'milestones_from_records',
    'RUN_HEADER',
    'AGGREGATE_HEADER',
    'export_csv',
    'parse_csv',
    'export_aggregate_csv',
    'write_rows',
    'aggregate_runs',
    'mean_std'
]
