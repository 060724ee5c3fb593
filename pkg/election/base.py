"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │         BASE ELECTION               │
 *  └─────────────────────────────────────┘
 *  Abstract base class for cluster-head election strategies
 *
 *  Defines the threshold interface every protocol variant
 *  implements and the shared random-draw loop.
 *
 *  Parameters:
 *  - None
 *
 *  Returns:
 *  - Base strategy class and the rotation threshold helper
 *
 *  Notes:
 *  - Thresholds are clamped to [0, 1]
 *  - One uniform draw per alive node, ascending id
 */
"""

from abc import ABC, abstractmethod
from typing import List, Sequence

import numpy as np

from core.models import Node, Protocol
from core.params import ElectionParams


def clamp_probability(value: float) -> float:
    """Clamp a threshold to [0, 1]"""
    return min(1.0, max(0.0, value))


def rotation_threshold(params: ElectionParams, r: int, numerator: float) -> float:
    """
     ┌─────────────────────────────────────┐
     │       ROTATION_THRESHOLD            │
     └─────────────────────────────────────┘
     numerator / (1 - p * (r mod floor(1/p))), unclamped

     Parameters:
     - params: election parameters (p sets the epoch)
     - r: round index (>= 0)
     - numerator: p for LEACH, p_opt1 / p_opt2 for the regions
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    denominator = 1.0 - params.p * (r % params.epoch_length)
    return numerator / denominator


def check_energy(e_residual: float, e_init: float) -> None:
    if not e_init > 0:
        raise ValueError("e_init must be > 0")
    if e_residual < 0:
        raise ValueError("e_residual must be >= 0")


class ElectionStrategy(ABC):
    """
     ┌─────────────────────────────────────┐
     │       ELECTIONSTRATEGY              │
     └─────────────────────────────────────┘
     Abstract base class for election variants

     Parameters:
     - params: election parameters

     Notes:
     - Subclasses implement node_threshold()
     - elect() owns the draw order and in_g bookkeeping
    """

    variant: Protocol

    def __init__(self, params: ElectionParams):
        self.params = params

    @abstractmethod
    def node_threshold(self, node: Node, r: int, d_avg: float) -> float:
        """
         ┌─────────────────────────────────────┐
         │        NODE_THRESHOLD               │
         └─────────────────────────────────────┘
         Threshold for an alive node in round r

         Parameters:
         - node: node state (energies, d_i, in_g)
         - r: round index
         - d_avg: deployment mean distance to the BS

         Returns:
         - Probability in [0, 1]
        """
        pass

    def threshold(self, node: Node, r: int, d_avg: float) -> float:
        """Threshold with dead and ineligible nodes forced to 0"""
        if not node.alive or not node.in_g:
            return 0.0
        return self.node_threshold(node, r, d_avg)

    def elect(self, nodes: Sequence[Node], r: int, d_avg: float,
              rng: np.random.Generator) -> List[int]:
        """
         ┌─────────────────────────────────────┐
         │             ELECT                   │
         └─────────────────────────────────────┘
         Run one election over the node states

         Parameters:
         - nodes: node states ordered by id
         - r: round index
         - d_avg: deployment mean distance to the BS
         - rng: the run's seeded generator

         Returns:
         - Elected node ids, ascending

         Notes:
         - Dead nodes draw nothing
         - Elected nodes leave the eligible set G
        """
        alive = [node for node in nodes if node.alive]
        if not alive:
            return []

        draws = rng.random(len(alive))
        elected = []
        for node, draw in zip(alive, draws):
            if draw < self.threshold(node, r, d_avg):
                node.in_g = False
                elected.append(node.id)
        return elected
