"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │         NETWORK STATE               │
 *  └─────────────────────────────────────┘
 *  Per-run mutable node state
 *
 *  Copies a deployment's nodes so the shared Topology stays
 *  untouched while a run drains energy.
 */
"""

import math
from dataclasses import dataclass, replace
from typing import List

from core.models import Node, Topology


@dataclass
class NetworkState:
    """Nodes of one run plus the deployment they came from"""
    topology: Topology
    nodes: List[Node]

    @classmethod
    def from_topology(cls, topology: Topology, initial_energy: float) -> 'NetworkState':
        """Fresh full-energy, all-eligible copy of the deployment"""
        nodes = [
            replace(node, e_init=initial_energy, e_residual=initial_energy, alive=True, in_g=True)
            for node in topology.nodes
        ]
        return cls(topology=topology, nodes=nodes)

    @property
    def d_avg(self) -> float:
        return self.topology.d_avg

    @property
    def alive_count(self) -> int:
        return sum(1 for node in self.nodes if node.alive)

    @property
    def total_residual(self) -> float:
        return math.fsum(node.e_residual for node in self.nodes)

    @property
    def total_initial(self) -> float:
        return math.fsum(node.e_init for node in self.nodes)
