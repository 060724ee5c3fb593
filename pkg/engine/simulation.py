"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │          SIMULATION                 │
 *  └─────────────────────────────────────┘
 *  Full-run driver
 *
 *  Plays rounds from r = 0 until every node is dead or the
 *  round limit is reached, recording metrics after each round.
 *
 *  Parameters:
 *  - None
 *
 *  Returns:
 *  - run_simulation, election_rng
 *
 *  Notes:
 *  - The election stream is derived from (seed, protocol) so
 *    protocols sharing a deployment draw independently
 *  - A run owns all of its state
 */
"""

from typing import Callable, Optional

import numpy as np

from core.models import Protocol, RoundOutcome, RunSummary, Topology
from core.params import ElectionParams, RadioParams
from debugger import debug_info
from metrics.recorder import record_round

from .rounds import run_round
from .state import NetworkState


RoundObserver = Callable[[RoundOutcome, NetworkState], None]


def election_rng(seed: int, protocol: Protocol) -> np.random.Generator:
    """Election-draw generator for one (seed, protocol) run"""
    return np.random.default_rng([seed, protocol.stream_id])


def run_simulation(topology: Topology, params: ElectionParams, radio: RadioParams,
                   seed: int, max_rounds: int,
                   observer: Optional[RoundObserver] = None) -> RunSummary:
    """
     ┌─────────────────────────────────────┐
     │         RUN_SIMULATION              │
     └─────────────────────────────────────┘
     Simulate one protocol on one deployment

     Parameters:
     - topology: shared deployment (not modified)
     - params: election parameters, variant included
     - radio: radio coefficients and initial energy
     - seed: run seed for the election stream
     - max_rounds: round limit (>= 1)
     - observer: optional callback after each round

     Returns:
     - RunSummary with the metric series and milestones
    """
    if max_rounds < 1:
        raise ValueError("max_rounds must be >= 1")

    state = NetworkState.from_topology(topology, radio.initial_energy)
    rng = election_rng(seed, params.variant)
    summary = RunSummary(protocol=params.variant, seed=seed, num_nodes=topology.n)

    for r in range(max_rounds):
        if state.alive_count == 0:
            break
        outcome = run_round(state, params, radio, r, rng)
        record_round(summary, outcome, state)
        if observer is not None:
            observer(outcome, state)

    debug_info(
        f"{params.variant.value} seed={seed}: fnd={summary.fnd} hnd={summary.hnd} "
        f"lnd={summary.lnd} packets={summary.total_packets_to_bs} rounds={summary.rounds_simulated}"
    )
    return summary
