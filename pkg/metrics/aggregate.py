"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │        METRICS AGGREGATE            │
 *  └─────────────────────────────────────┘
 *  Multi-seed statistics over completed runs
 *
 *  Parameters:
 *  - None
 *
 *  Returns:
 *  - aggregate_runs, mean_std
 *
 *  Notes:
 *  - Sample standard deviation; 0 when only one value exists
 */
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.models import AggregateStats, RunSummary


def mean_std(values: Sequence[float]) -> Tuple[Optional[float], Optional[float]]:
    """(mean, sample std) of values, (None, None) when empty"""
    if not values:
        return None, None
    array = np.asarray(values, dtype=float)
    std = float(np.std(array, ddof=1)) if len(array) > 1 else 0.0
    return float(np.mean(array)), std


def _milestone(values: List[Optional[int]]) -> Tuple[Optional[float], Optional[float], int]:
    present = [value for value in values if value is not None]
    mean, std = mean_std(present)
    return mean, std, len(values) - len(present)


def aggregate_runs(summaries: Sequence[RunSummary]) -> AggregateStats:
    """
     ┌─────────────────────────────────────┐
     │         AGGREGATE_RUNS              │
     └─────────────────────────────────────┘
     Combine runs of one protocol/config

     Parameters:
     - summaries: at least one completed run, same protocol

     Returns:
     - AggregateStats with milestone means/stds, absent counts,
       mean BS packets and the mean residual-energy trajectory
    """
    if not summaries:
        raise ValueError("aggregate_runs needs at least one summary")
    protocols = {summary.protocol for summary in summaries}
    if len(protocols) > 1:
        raise ValueError(f"cannot aggregate mixed protocols: {sorted(p.value for p in protocols)}")

    fnd_mean, fnd_std, fnd_absent = _milestone([s.fnd for s in summaries])
    hnd_mean, hnd_std, hnd_absent = _milestone([s.hnd for s in summaries])
    lnd_mean, lnd_std, lnd_absent = _milestone([s.lnd for s in summaries])

    shortest = min(summary.rounds_simulated for summary in summaries)
    trajectory: List[float] = []
    if shortest > 0:
        energies = np.array([
            [rec.total_residual_energy for rec in summary.records[:shortest]]
            for summary in summaries
        ])
        trajectory = [float(value) for value in energies.mean(axis=0)]

    return AggregateStats(
        protocol=summaries[0].protocol,
        seed_count=len(summaries),
        fnd_mean=fnd_mean, fnd_std=fnd_std, fnd_absent=fnd_absent,
        hnd_mean=hnd_mean, hnd_std=hnd_std, hnd_absent=hnd_absent,
        lnd_mean=lnd_mean, lnd_std=lnd_std, lnd_absent=lnd_absent,
        packets_mean=float(np.mean([s.total_packets_to_bs for s in summaries])),
        energy_trajectory=trajectory
    )
