"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │             MODELS                  │
 *  └─────────────────────────────────────┘
 *  Core data models for the WSN clustering simulator
 *
 *  Defines the deployment, per-round and per-run data structures
 *  shared by the topology, engine, election and metrics packages.
 *
 *  Parameters:
 *  - None
 *
 *  Returns:
 *  - Data model classes
 *
 *  Notes:
 *  - Deployment types (Position, Topology) are frozen
 *  - Node is the only mutable per-run record
 */
"""

from dataclasses import dataclass, field
from typing import Optional, Dict, Any, List, Tuple
from enum import Enum


class Protocol(str, Enum):
    """
     ┌─────────────────────────────────────┐
     │            PROTOCOL                 │
     └─────────────────────────────────────┘
     Cluster-head election variants

     Values double as CLI names and CSV/file-name tags.
    """
    LEACH = "leach"
    E_LEACH = "eleach"
    DE_LEACH = "deleach"

    @classmethod
    def parse(cls, value: str) -> 'Protocol':
        """Parse a protocol name, tolerating case, '-' and '_'"""
        if isinstance(value, Protocol):
            return value
        normalized = str(value).strip().lower().replace("-", "").replace("_", "")
        for protocol in cls:
            if protocol.value == normalized:
                return protocol
        raise ValueError(f"unknown protocol: {value}")

    @property
    def stream_id(self) -> int:
        """Stable index used to derive this protocol's election-draw stream"""
        return list(Protocol).index(self) + 1


# Task system components defined here to avoid circular imports
class TaskStatus(str, Enum):
    """
     ┌─────────────────────────────────────┐
     │           TASK STATUS               │
     └─────────────────────────────────────┘
     Lifecycle states of a harness task
    """
    PENDING = "pending"
    PROCESSING = "processing"
    COMPLETED = "completed"
    FAILED = "failed"


class TaskName(str, Enum):
    """Task types understood by the worker pool"""
    SIMULATION_RUN = "simulation_run"


class NodeRole(str, Enum):
    """Role of a node within one round"""
    CLUSTER_HEAD = "cluster_head"
    MEMBER = "member"
    DIRECT_SENDER = "direct_sender"
    DEAD = "dead"


@dataclass(frozen=True)
class Position:
    """Planar coordinates in meters"""
    x: float
    y: float


@dataclass
class Node:
    """
     ┌─────────────────────────────────────┐
     │              NODE                   │
     └─────────────────────────────────────┘
     Sensor node state

     Holds deployment geometry plus the per-run energy and
     eligibility state mutated by the engine.

     Parameters:
     - id: 0-based node id
     - position: deployment coordinates
     - d_i: distance to the base station
     - e_init: initial energy in joules
     - e_residual: remaining energy in joules
     - alive: False once the node has depleted its energy
     - in_g: True while the node has not served as CH this epoch

     Notes:
     - 0 <= e_residual <= e_init at all times
     - a dead node has e_residual == 0
    """
    id: int
    position: Position
    d_i: float
    e_init: float
    e_residual: float
    alive: bool = True
    in_g: bool = True

    def spend(self, cost: float) -> bool:
        """
         ┌─────────────────────────────────────┐
         │             SPEND                   │
         └─────────────────────────────────────┘
         Deduct an energy cost from the node

         Parameters:
         - cost: energy required by the pending operation

         Returns:
         - True if the operation completed, False if the node
           ran out of energy first (its message is lost)

         Notes:
         - A node spending exactly its remaining energy completes
           the operation and dies at that instant
         - A node short of energy spends what it has and dies
        """
        if cost <= self.e_residual:
            self.e_residual -= cost
            if self.e_residual <= 0.0:
                self.e_residual = 0.0
                self.alive = False
            return True
        self.e_residual = 0.0
        self.alive = False
        return False


@dataclass(frozen=True)
class Topology:
    """
     ┌─────────────────────────────────────┐
     │            TOPOLOGY                 │
     └─────────────────────────────────────┘
     Static node deployment and base-station geometry

     Parameters:
     - nodes: deployed nodes ordered by id, in their initial state
     - bs_position: base station coordinates
     - region_side: side M of the sensing square
     - d_avg: mean node-to-BS distance over all deployed nodes

     Notes:
     - Never mutated; the engine copies nodes into its own state
    """
    nodes: Tuple[Node, ...]
    bs_position: Position
    region_side: float
    d_avg: float

    @property
    def n(self) -> int:
        return len(self.nodes)

    def positions(self) -> List[Position]:
        return [node.position for node in self.nodes]


@dataclass
class RoundOutcome:
    """
     ┌─────────────────────────────────────┐
     │          ROUNDOUTCOME               │
     └─────────────────────────────────────┘
     Result of one setup + steady-state round

     Notes:
     - Id collections are sorted ascending
     - Every node alive at round start has exactly one role
     - packets_to_bs counts completed BS uplinks only
    """
    round: int
    cluster_heads: List[int] = field(default_factory=list)
    clusters: Dict[int, List[int]] = field(default_factory=dict)
    direct_senders: List[int] = field(default_factory=list)
    packets_to_bs: int = 0
    packets_to_ch: int = 0
    energy_consumed: float = 0.0
    deaths: List[int] = field(default_factory=list)

    def role_of(self, node_id: int) -> NodeRole:
        """Role the node played this round (DEAD if it took no part)"""
        if node_id in self.clusters:
            return NodeRole.CLUSTER_HEAD
        if node_id in self.direct_senders:
            return NodeRole.DIRECT_SENDER
        for members in self.clusters.values():
            if node_id in members:
                return NodeRole.MEMBER
        return NodeRole.DEAD

    def participants(self) -> List[int]:
        """All node ids with a role this round, with repetition if the partition is broken"""
        ids = list(self.cluster_heads) + list(self.direct_senders)
        for members in self.clusters.values():
            ids.extend(members)
        return ids


@dataclass(frozen=True)
class RoundRecord:
    """Per-round metric row"""
    round: int
    alive: int
    cluster_heads: int
    packets_to_bs_cumulative: int
    total_residual_energy: float


@dataclass
class RunSummary:
    """
     ┌─────────────────────────────────────┐
     │           RUNSUMMARY                │
     └─────────────────────────────────────┘
     Per-run metric series and lifetime milestones

     Parameters:
     - protocol: election variant used for the run
     - seed: run seed
     - num_nodes: deployed node count
     - fnd / hnd / lnd: first / half / last node dead round, or None
     - records: one RoundRecord per simulated round
     - packets_to_ch_total: member messages delivered to cluster heads

     Notes:
     - fnd <= hnd <= lnd whenever all are present
    """
    protocol: 'Protocol'
    seed: int
    num_nodes: int
    fnd: Optional[int] = None
    hnd: Optional[int] = None
    lnd: Optional[int] = None
    records: List[RoundRecord] = field(default_factory=list)
    packets_to_ch_total: int = 0

    @property
    def total_packets_to_bs(self) -> int:
        return self.records[-1].packets_to_bs_cumulative if self.records else 0

    @property
    def rounds_simulated(self) -> int:
        return len(self.records)

    def packets_at_round(self, round_index: int) -> int:
        """Cumulative BS packets at the given round (last value if the run ended earlier)"""
        if not self.records:
            return 0
        index = min(round_index, len(self.records) - 1)
        return self.records[index].packets_to_bs_cumulative

    def to_dict(self) -> Dict[str, Any]:
        """Convert to the key/value summary printed by the CLI"""
        return {
            'protocol': self.protocol.value,
            'seed': self.seed,
            'fnd': self.fnd,
            'hnd': self.hnd,
            'lnd': self.lnd,
            'packets_to_bs': self.total_packets_to_bs,
            'packets_to_ch': self.packets_to_ch_total,
            'rounds': self.rounds_simulated
        }


@dataclass
class AggregateStats:
    """
     ┌─────────────────────────────────────┐
     │         AGGREGATESTATS              │
     └─────────────────────────────────────┘
     Multi-seed statistics for one protocol/config

     Notes:
     - Milestone means/stds skip runs where the milestone is absent;
       the *_absent counters report how many were skipped
     - std is the sample standard deviation (0 for a single value)
     - energy_trajectory is truncated to the shortest run
    """
    protocol: 'Protocol'
    seed_count: int
    fnd_mean: Optional[float] = None
    fnd_std: Optional[float] = None
    fnd_absent: int = 0
    hnd_mean: Optional[float] = None
    hnd_std: Optional[float] = None
    hnd_absent: int = 0
    lnd_mean: Optional[float] = None
    lnd_std: Optional[float] = None
    lnd_absent: int = 0
    packets_mean: float = 0.0
    energy_trajectory: List[float] = field(default_factory=list)
