"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │         METRICS RECORDER            │
 *  └─────────────────────────────────────┘
 *  Per-round metric capture and lifetime milestones
 *
 *  Appends one RoundRecord per round and sets the first, half
 *  and last node dead rounds the first time they are reached.
 *
 *  Parameters:
 *  - None
 *
 *  Returns:
 *  - record_round, milestones_from_records
 *
 *  Notes:
 *  - Half-node death means alive <= floor(n / 2)
 */
"""

from typing import Optional, Sequence, Tuple

from core.models import RoundOutcome, RoundRecord, RunSummary


Milestones = Tuple[Optional[int], Optional[int], Optional[int]]


def record_round(summary: RunSummary, outcome: RoundOutcome, state) -> RunSummary:
    """
     ┌─────────────────────────────────────┐
     │          RECORD_ROUND               │
     └─────────────────────────────────────┘
     Append the round's metrics to the summary

     Parameters:
     - summary: run summary, updated in place
     - outcome: the round's engine outcome
     - state: network state after the round

     Returns:
     - The same summary
    """
    previous = summary.records[-1].packets_to_bs_cumulative if summary.records else 0
    alive = state.alive_count
    summary.records.append(RoundRecord(
        round=outcome.round,
        alive=alive,
        cluster_heads=len(outcome.cluster_heads),
        packets_to_bs_cumulative=previous + outcome.packets_to_bs,
        total_residual_energy=state.total_residual
    ))
    summary.packets_to_ch_total += outcome.packets_to_ch

    n = summary.num_nodes
    if summary.fnd is None and alive < n:
        summary.fnd = outcome.round
    if summary.hnd is None and alive <= n // 2:
        summary.hnd = outcome.round
    if summary.lnd is None and alive == 0:
        summary.lnd = outcome.round
    return summary


def milestones_from_records(records: Sequence[RoundRecord], n: int) -> Milestones:
    """Recompute (fnd, hnd, lnd) by scanning a record series"""
    fnd = next((rec.round for rec in records if rec.alive < n), None)
    hnd = next((rec.round for rec in records if rec.alive <= n // 2), None)
    lnd = next((rec.round for rec in records if rec.alive == 0), None)
    return fnd, hnd, lnd
