"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │        ELECTION MANAGER             │
 *  └─────────────────────────────────────┘
 *  Dispatches elections to the configured variant
 *
 *  Maps protocol variants to strategy classes and provides the
 *  epoch maintenance and election entry points used by the
 *  round engine.
 *
 *  Parameters:
 *  - None
 *
 *  Returns:
 *  - get_strategy, elect_cluster_heads, advance_epoch
 *
 *  Notes:
 *  - Strategies are stateless apart from their params
 */
"""

from typing import Dict, List, Sequence, Type

import numpy as np

from core.models import Node, Protocol
from core.params import ElectionParams

from .base import ElectionStrategy
from .deleach import DeLeachElection
from .eleach import ELeachElection
from .leach import LeachElection


STRATEGIES: Dict[Protocol, Type[ElectionStrategy]] = {
    Protocol.LEACH: LeachElection,
    Protocol.E_LEACH: ELeachElection,
    Protocol.DE_LEACH: DeLeachElection
}


def get_strategy(params: ElectionParams) -> ElectionStrategy:
    """
     ┌─────────────────────────────────────┐
     │          GET_STRATEGY               │
     └─────────────────────────────────────┘
     Build the strategy for params.variant

     Raises ValueError if the variant has no strategy.
    """
    if params.variant not in STRATEGIES:
        raise ValueError(f"No election strategy configured for protocol: {params.variant}")
    return STRATEGIES[params.variant](params)


def advance_epoch(nodes: Sequence[Node], r: int, params: ElectionParams) -> bool:
    """
     ┌─────────────────────────────────────┐
     │         ADVANCE_EPOCH               │
     └─────────────────────────────────────┘
     Restore eligibility at epoch boundaries

     Parameters:
     - nodes: node states, updated in place
     - r: round index about to be played
     - params: election parameters

     Returns:
     - True if an epoch reset happened

     Notes:
     - Resets every alive node's in_g when r mod floor(1/p) == 0
    """
    if r % params.epoch_length != 0:
        return False
    for node in nodes:
        if node.alive:
            node.in_g = True
    return True


def elect_cluster_heads(nodes: Sequence[Node], params: ElectionParams, r: int,
                        d_avg: float, rng: np.random.Generator) -> List[int]:
    """Elect this round's cluster heads with the configured variant"""
    return get_strategy(params).elect(nodes, r, d_avg, rng)
