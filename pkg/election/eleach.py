"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │        E-LEACH ELECTION             │
 *  └─────────────────────────────────────┘
 *  Residual-energy weighted rotation threshold
 *
 *  Nodes holding more than half of their initial energy use the
 *  LEACH threshold; below that the LEACH value is scaled by
 *  2p * E_residual / E_init.
 */
"""

from core.models import Node, Protocol
from core.params import ElectionParams

from .base import ElectionStrategy, check_energy, clamp_probability
from .leach import leach_threshold


def eleach_threshold(params: ElectionParams, r: int, in_g: bool,
                     e_residual: float, e_init: float) -> float:
    """E-LEACH threshold, clamped to [0, 1]; 0 outside G"""
    check_energy(e_residual, e_init)
    if not in_g:
        return 0.0
    base = leach_threshold(params, r, in_g)
    # strictly more than half keeps the plain LEACH value
    if e_residual > 0.5 * e_init:
        return base
    return clamp_probability(base * (2.0 * params.p * e_residual / e_init))


class ELeachElection(ElectionStrategy):
    """Residual-energy aware rotation"""

    variant = Protocol.E_LEACH

    def node_threshold(self, node: Node, r: int, d_avg: float) -> float:
        return eleach_threshold(self.params, r, node.in_g, node.e_residual, node.e_init)
