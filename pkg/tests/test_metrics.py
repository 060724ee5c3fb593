"""
 ┌─────────────────────────────────────┐
 │          TEST_METRICS               │
 └─────────────────────────────────────┘
 Metric recording, CSV export and aggregation tests
"""

import sys
import os
from types import SimpleNamespace
from typing import Dict, Any, List, Optional

from .base_test import BaseTest, run_suite_for_pytest

# Add parent directory to path for imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.models import Protocol, RoundOutcome, RoundRecord, RunSummary
from core.params import ElectionParams, RadioParams
from core.topology import generate_topology
from engine import run_simulation
from metrics import (
    AGGREGATE_HEADER,
    RUN_HEADER,
    aggregate_runs,
    export_aggregate_csv,
    export_csv,
    mean_std,
    milestones_from_records,
    parse_csv,
    record_round
)


def summary_with(protocol: Protocol, fnd: Optional[int], hnd: Optional[int], lnd: Optional[int],
                 energies: List[float], packets: int = 0) -> RunSummary:
    records = [
        RoundRecord(round=r, alive=1, cluster_heads=0,
                    packets_to_bs_cumulative=packets if r == len(energies) - 1 else 0,
                    total_residual_energy=e)
        for r, e in enumerate(energies)
    ]
    return RunSummary(protocol=protocol, seed=0, num_nodes=2, fnd=fnd, hnd=hnd, lnd=lnd, records=records)


class MetricsTests(BaseTest):
    """
     ┌─────────────────────────────────────┐
     │          METRICSTESTS               │
     └─────────────────────────────────────┘
     Test suite for the metrics package
    """

    def __init__(self):
        super().__init__("Metrics Tests")

    def _record(self, summary: RunSummary, r: int, alive: int, packets: int = 1) -> None:
        outcome = RoundOutcome(round=r, cluster_heads=[0], packets_to_bs=packets, packets_to_ch=2)
        state = SimpleNamespace(alive_count=alive, total_residual=0.1 * alive)
        record_round(summary, outcome, state)

    def test_first_death_sets_fnd(self) -> Dict[str, Any]:
        summary = RunSummary(protocol=Protocol.LEACH, seed=0, num_nodes=100)
        for r in range(240):
            self._record(summary, r, 100)
        self._record(summary, 240, 99)
        return self.combine(
            self.assert_equals(summary.fnd, 240),
            self.assert_equals(summary.hnd, None),
            self.assert_equals(summary.lnd, None),
            self.assert_equals(summary.total_packets_to_bs, 241),
            self.assert_equals(summary.packets_to_ch_total, 482)
        )

    def test_two_nodes_reach_fnd_and_hnd_together(self) -> Dict[str, Any]:
        summary = RunSummary(protocol=Protocol.LEACH, seed=0, num_nodes=2)
        self._record(summary, 0, 2)
        self._record(summary, 1, 1)
        self._record(summary, 2, 0)
        return self.combine(
            self.assert_equals((summary.fnd, summary.hnd, summary.lnd), (1, 1, 2)),
            self.assert_equals(milestones_from_records(summary.records, 2), (1, 1, 2))
        )

    def test_milestones_match_independent_scan(self) -> Dict[str, Any]:
        topology = generate_topology(40, 100.0, 75.0, seed=13)
        for protocol in Protocol:
            summary = run_simulation(topology, ElectionParams(variant=protocol), RadioParams(),
                                     seed=13, max_rounds=20000)
            scanned = milestones_from_records(summary.records, 40)
            if scanned != (summary.fnd, summary.hnd, summary.lnd):
                return {'success': False, 'message': f"{protocol.value}: {scanned} != incremental milestones"}
            records = summary.records
            monotone = all(
                b.alive <= a.alive
                and b.packets_to_bs_cumulative >= a.packets_to_bs_cumulative
                and b.total_residual_energy <= a.total_residual_energy
                for a, b in zip(records, records[1:])
            )
            if not monotone:
                return {'success': False, 'message': f"{protocol.value}: record series not monotone"}
            if summary.lnd is not None and records[-1].alive != 0:
                return {'success': False, 'message': f"{protocol.value}: lnd set but nodes alive"}
        return {'success': True, 'message': "incremental and scanned milestones agree for every variant"}

    def test_export_csv_shapes(self) -> Dict[str, Any]:
        empty = RunSummary(protocol=Protocol.LEACH, seed=0, num_nodes=1)
        one = RunSummary(protocol=Protocol.LEACH, seed=0, num_nodes=1)
        self._record(one, 0, 1)
        text = export_csv(one)
        return self.combine(
            self.assert_equals(export_csv(empty), ",".join(RUN_HEADER) + "\n"),
            self.assert_equals(len(text.splitlines()), 2),
            self.assert_true(text.endswith("\n"), "trailing newline"),
            self.assert_equals(RUN_HEADER[-1], "total_residual_energy_j")
        )

    def test_csv_round_trip_is_exact(self) -> Dict[str, Any]:
        topology = generate_topology(50, 100.0, 75.0, seed=17)
        summary = run_simulation(topology, ElectionParams(variant=Protocol.E_LEACH), RadioParams(),
                                 seed=17, max_rounds=300)
        return self.combine(
            self.assert_equals(parse_csv(export_csv(summary)), summary.records),
            self.assert_raises(ValueError, parse_csv, "round,alive\n0,1\n")
        )

    def test_mean_std_conventions(self) -> Dict[str, Any]:
        return self.combine(
            self.assert_equals(mean_std([]), (None, None)),
            self.assert_equals(mean_std([42.0]), (42.0, 0.0)),
            self.assert_equals(mean_std([100, 200])[0], 150.0),
            self.assert_close(mean_std([100, 200])[1], 70.71067811865476, rel_tol=1e-12)
        )

    def test_aggregate_single_run(self) -> Dict[str, Any]:
        run = summary_with(Protocol.DE_LEACH, 10, 20, 30, [1.0, 0.5], packets=7)
        stats = aggregate_runs([run])
        return self.combine(
            self.assert_equals((stats.fnd_mean, stats.hnd_mean, stats.lnd_mean), (10.0, 20.0, 30.0)),
            self.assert_equals((stats.fnd_std, stats.hnd_std, stats.lnd_std), (0.0, 0.0, 0.0)),
            self.assert_equals(stats.packets_mean, 7.0),
            self.assert_equals(stats.energy_trajectory, [1.0, 0.5]),
            self.assert_equals(stats.seed_count, 1)
        )

    def test_aggregate_absent_milestones(self) -> Dict[str, Any]:
        a = summary_with(Protocol.LEACH, 100, 150, None, [1.0, 0.8, 0.6])
        b = summary_with(Protocol.LEACH, 200, 250, 300, [0.9, 0.7])
        stats = aggregate_runs([a, b])
        return self.combine(
            self.assert_equals(stats.fnd_mean, 150.0),
            self.assert_equals(stats.lnd_mean, 300.0),
            self.assert_equals(stats.lnd_absent, 1),
            self.assert_equals(stats.fnd_absent, 0),
            self.assert_equals(len(stats.energy_trajectory), 2),
            self.assert_close(stats.energy_trajectory[0], 0.95)
        )

    def test_aggregate_errors(self) -> Dict[str, Any]:
        a = summary_with(Protocol.LEACH, 1, 2, 3, [1.0])
        b = summary_with(Protocol.DE_LEACH, 1, 2, 3, [1.0])
        return self.combine(
            self.assert_raises(ValueError, aggregate_runs, []),
            self.assert_raises(ValueError, aggregate_runs, [a, b], match="mixed")
        )

    def test_aggregate_csv_layout(self) -> Dict[str, Any]:
        stats = aggregate_runs([summary_with(Protocol.LEACH, 5, None, None, [1.0])])
        lines = export_aggregate_csv([stats]).splitlines()
        return self.combine(
            self.assert_equals(lines[0], ",".join(AGGREGATE_HEADER)),
            self.assert_equals(lines[1], "leach,1,5.0,0.0,,,,,0.0")
        )


def test_metrics_suite():
    run_suite_for_pytest(MetricsTests)
