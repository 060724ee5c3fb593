"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │         LEACH ELECTION              │
 *  └─────────────────────────────────────┘
 *  Classic rotation threshold
 *
 *  T(n) = p / (1 - p * (r mod 1/p)) for nodes in G, else 0.
 */
"""

from core.models import Node, Protocol
from core.params import ElectionParams

from .base import ElectionStrategy, clamp_probability, rotation_threshold


def leach_threshold(params: ElectionParams, r: int, in_g: bool) -> float:
    """LEACH threshold, clamped to [0, 1]; 0 outside G"""
    if not in_g:
        return 0.0
    return clamp_probability(rotation_threshold(params, r, params.p))


class LeachElection(ElectionStrategy):
    """Energy- and distance-agnostic rotation"""

    variant = Protocol.LEACH

    def node_threshold(self, node: Node, r: int, d_avg: float) -> float:
        return leach_threshold(self.params, r, node.in_g)
