"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │            TOPOLOGY                 │
 *  └─────────────────────────────────────┘
 *  Node deployment and base-station geometry
 *
 *  Generates seeded uniform deployments in an M x M square with
 *  the base station centered above the top edge, and answers
 *  distance queries.
 *
 *  Parameters:
 *  - None
 *
 *  Returns:
 *  - generate_topology, distance, average_distance and CSV helpers
 *
 *  Notes:
 *  - d_avg is computed once at deployment over all nodes
 *  - Identical seeds give bit-identical coordinates
 */
"""

import csv
import io
import math
from typing import List, Sequence

import numpy as np

import config
from core.models import Node, Position, Topology


TOPOLOGY_HEADER = ["id", "x", "y"]


def distance(a: Position, b: Position) -> float:
    """Euclidean distance between two positions"""
    return math.hypot(a.x - b.x, a.y - b.y)


def average_distance(topology: Topology) -> float:
    """
     ┌─────────────────────────────────────┐
     │        AVERAGE_DISTANCE             │
     └─────────────────────────────────────┘
     Mean node-to-BS distance over every deployed node

     Parameters:
     - topology: deployment with at least one node

     Returns:
     - (1/n) * sum(d_i), alive or dead

     Notes:
     - Raises ValueError for an empty topology
    """
    if not topology.nodes:
        raise ValueError("topology has no nodes")
    return math.fsum(node.d_i for node in topology.nodes) / len(topology.nodes)


def build_topology(positions: Sequence[Position],
                   bs_position: Position,
                   region_side: float,
                   initial_energy: float = config.INITIAL_ENERGY) -> Topology:
    """Assemble a topology from explicit positions, precomputing d_i and d_avg"""
    if not positions:
        raise ValueError("topology needs at least one node")
    nodes = tuple(
        Node(
            id=node_id,
            position=position,
            d_i=distance(position, bs_position),
            e_init=initial_energy,
            e_residual=initial_energy
        )
        for node_id, position in enumerate(positions)
    )
    d_avg = math.fsum(node.d_i for node in nodes) / len(nodes)
    return Topology(nodes=nodes, bs_position=bs_position, region_side=region_side, d_avg=d_avg)


def generate_topology(n: int,
                      region_side: float,
                      bs_offset: float,
                      seed: int,
                      initial_energy: float = config.INITIAL_ENERGY) -> Topology:
    """
     ┌─────────────────────────────────────┐
     │        GENERATE_TOPOLOGY            │
     └─────────────────────────────────────┘
     Deploy n nodes uniformly in [0, M]^2

     Parameters:
     - n: node count (>= 1)
     - region_side: side M of the sensing square (> 0)
     - bs_offset: base station distance from the top edge (>= 0)
     - seed: deployment seed

     Returns:
     - Topology with BS at (M/2, M + bs_offset)
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not region_side > 0:
        raise ValueError("region_side must be > 0")
    if bs_offset < 0:
        raise ValueError("bs_offset must be >= 0")

    rng = np.random.default_rng(seed)
    coords = rng.uniform(0.0, region_side, size=(n, 2))
    positions = [Position(float(x), float(y)) for x, y in coords]
    bs_position = Position(region_side / 2.0, region_side + bs_offset)
    return build_topology(positions, bs_position, region_side, initial_energy)


def dump_topology_csv(topology: Topology) -> str:
    """
     ┌─────────────────────────────────────┐
     │        DUMP_TOPOLOGY_CSV            │
     └─────────────────────────────────────┘
     Serialize a deployment as CSV

     A '# bs_x,bs_y,region_side' comment line is followed by the
     id,x,y header and one row per node. Coordinates use repr so
     a reload is exact.
    """
    buffer = io.StringIO()
    bs = topology.bs_position
    buffer.write(f"# {bs.x!r},{bs.y!r},{topology.region_side!r}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TOPOLOGY_HEADER)
    for node in topology.nodes:
        writer.writerow([node.id, repr(node.position.x), repr(node.position.y)])
    return buffer.getvalue()


def load_topology_csv(text: str, initial_energy: float = config.INITIAL_ENERGY) -> Topology:
    """Parse dump_topology_csv output; ids must be contiguous from 0"""
    lines = text.splitlines()
    comment = next((line for line in lines if line.startswith("#")), None)
    if comment is None:
        raise ValueError("topology CSV lacks the '# bs_x,bs_y,region_side' line")
    try:
        bs_x, bs_y, region_side = (float(part) for part in comment.lstrip("#").split(","))
    except ValueError as e:
        raise ValueError(f"bad base-station line: {comment}") from e

    rows = list(csv.reader(line for line in lines if line and not line.startswith("#")))
    if not rows or rows[0] != TOPOLOGY_HEADER:
        raise ValueError("topology CSV must start with header id,x,y")

    positions: List[Position] = []
    for expected_id, row in enumerate(rows[1:]):
        if len(row) != len(TOPOLOGY_HEADER):
            raise ValueError(f"row {expected_id} needs id,x,y (got {','.join(row)!r})")
        if int(row[0]) != expected_id:
            raise ValueError(f"node ids must be contiguous from 0 (got {row[0]} at row {expected_id})")
        positions.append(Position(float(row[1]), float(row[2])))

    return build_topology(positions, Position(bs_x, bs_y), region_side, initial_energy)
