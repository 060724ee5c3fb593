"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │         TASK HANDLERS               │
 *  └─────────────────────────────────────┘
 *  Handler functions for harness task types
 *
 *  Keeps the simulation work separate from queue management.
 *  Handlers are module-level functions so they can run in a
 *  worker process.
 *
 *  Parameters:
 *  - Task-specific parameters via payload
 *
 *  Returns:
 *  - Task-specific results
 */
"""

from typing import Callable, Dict

from core.models import RunSummary, TaskName, Topology
from core.params import SimConfig
from engine import run_simulation


def handle_simulation_run(config: SimConfig, topology: Topology) -> RunSummary:
    """
     ┌─────────────────────────────────────┐
     │     HANDLE_SIMULATION_RUN           │
     └─────────────────────────────────────┘
     Simulate one (protocol, seed) run

     Parameters:
     - config: effective config (protocol, seed, radio, election)
     - topology: deployment shared by the runs of this seed

     Returns:
     - RunSummary of the run
    """
    return run_simulation(
        topology,
        config.election,
        config.radio,
        config.seed,
        config.max_rounds
    )


HANDLERS: Dict[str, Callable] = {
    TaskName.SIMULATION_RUN.value: handle_simulation_run
}
