"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │       DE-LEACH ELECTION             │
 *  └─────────────────────────────────────┘
 *  Dual-region distance/energy election
 *
 *  The region split is the deployment mean distance to the base
 *  station, d_avg. Near nodes (d_i <= d_avg) are weighted by
 *  c * d_avg / d_i, far nodes (d_i > d_avg) by their residual
 *  energy fraction.
 *
 *  Parameters:
 *  - None
 *
 *  Returns:
 *  - Threshold functions and the DeLeachElection strategy
 *
 *  Notes:
 *  - Both regions keep p in the rotation denominator
 *  - With c = 6 the near threshold usually clamps to 1
 */
"""

from core.models import Node, Protocol
from core.params import ElectionParams

from .base import ElectionStrategy, check_energy, clamp_probability, rotation_threshold


def is_near(d_i: float, d_avg: float) -> bool:
    """Near-region membership; the boundary belongs to the near region"""
    return d_i <= d_avg


def deleach_near_threshold(params: ElectionParams, r: int, in_g: bool,
                           d_avg: float, d_i: float) -> float:
    """
     ┌─────────────────────────────────────┐
     │     DELEACH_NEAR_THRESHOLD          │
     └─────────────────────────────────────┘
     (p_opt1 / (1 - p * (r mod 1/p))) * c * d_avg / d_i

     Parameters:
     - d_avg: region boundary
     - d_i: node distance to the BS, 0 < d_i <= d_avg

     Returns:
     - Probability clamped to [0, 1]; 0 outside G
    """
    if not d_i > 0:
        raise ValueError("d_i must be > 0")
    if not is_near(d_i, d_avg):
        raise ValueError(f"d_i={d_i} is beyond d_avg={d_avg}; node belongs to the far region")
    if not in_g:
        return 0.0
    raw = rotation_threshold(params, r, params.p_opt1) * (params.c * d_avg / d_i)
    return clamp_probability(raw)


def deleach_far_threshold(params: ElectionParams, r: int, in_g: bool,
                          e_residual: float, e_init: float) -> float:
    """(p_opt2 / (1 - p * (r mod 1/p))) * E_residual / E_init, clamped; 0 outside G"""
    check_energy(e_residual, e_init)
    if not in_g:
        return 0.0
    raw = rotation_threshold(params, r, params.p_opt2) * (e_residual / e_init)
    return clamp_probability(raw)


class DeLeachElection(ElectionStrategy):
    """Distance- and energy-based election over two regions"""

    variant = Protocol.DE_LEACH

    def node_threshold(self, node: Node, r: int, d_avg: float) -> float:
        if is_near(node.d_i, d_avg):
            return deleach_near_threshold(self.params, r, node.in_g, d_avg, node.d_i)
        return deleach_far_threshold(self.params, r, node.in_g, node.e_residual, node.e_init)
