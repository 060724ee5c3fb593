"""
Engine module for the WSN clustering simulator

This module contains the per-run network state, the round
phases and the full simulation driver.
"""

from .state import NetworkState
from .rounds import nearest_cluster_head, run_setup_phase, run_steady_state, run_round
from .simulation import RoundObserver, election_rng, run_simulation

__all__ = [
    'NetworkState',
    'nearest_cluster_head',
    'run_setup_phase',
    'run_steady_state',
    'run_round',
    'RoundObserver',
    'election_rng',
    'run_simulation'
]
