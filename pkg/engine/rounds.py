"""
/**
 *
 *  ┌─────────────────────────────────────┐
 *  │          ROUND ENGINE               │
 *  └─────────────────────────────────────┘
 *  Setup and steady-state phases of one round
 *
 *  Setup elects cluster heads and forms clusters around the
 *  nearest CH; steady state charges the data-phase energy in a
 *  fixed order and counts delivered packets.
 *
 *  Parameters:
 *  - None
 *
 *  Returns:
 *  - run_setup_phase, run_steady_state, run_round
 *
 *  Notes:
 *  - Setup-phase control traffic is free
 *  - A round with no CH falls back to direct BS transmission
 *  - Charge order: members, then CHs, then direct senders,
 *    each ascending by id
 */
"""

from typing import Dict, List, Tuple

import numpy as np

from core.models import Node, RoundOutcome
from core.params import ElectionParams, RadioParams
from core.radio import aggregation_energy, rx_energy, tx_energy
from core.topology import distance
from election import advance_epoch, elect_cluster_heads

from .state import NetworkState


def _charge(node: Node, cost: float, outcome: RoundOutcome) -> bool:
    """Deduct cost from node, tracking the energy actually spent"""
    outcome.energy_consumed += min(cost, node.e_residual)
    return node.spend(cost)


def nearest_cluster_head(node: Node, heads: List[Node]) -> int:
    """Id of the closest CH; ties go to the lowest CH id"""
    best_id = heads[0].id
    best_distance = distance(node.position, heads[0].position)
    for head in heads[1:]:
        d = distance(node.position, head.position)
        if d < best_distance:
            best_id, best_distance = head.id, d
    return best_id


def run_setup_phase(state: NetworkState, params: ElectionParams, r: int,
                    rng: np.random.Generator) -> Tuple[List[int], Dict[int, List[int]], List[int]]:
    """
     ┌─────────────────────────────────────┐
     │        RUN_SETUP_PHASE              │
     └─────────────────────────────────────┘
     Elect cluster heads and form clusters

     Parameters:
     - state: network state at round start
     - params: election parameters
     - r: round index
     - rng: the run's election generator

     Returns:
     - (cluster_heads, clusters, direct_senders), ids ascending

     Notes:
     - Each alive non-CH joins its nearest CH
     - Zero CHs makes every alive node a direct sender
    """
    cluster_heads = elect_cluster_heads(state.nodes, params, r, state.d_avg, rng)
    alive = [node for node in state.nodes if node.alive]

    if not cluster_heads:
        return [], {}, [node.id for node in alive]

    head_set = set(cluster_heads)
    heads = [state.nodes[head_id] for head_id in cluster_heads]
    clusters: Dict[int, List[int]] = {head_id: [] for head_id in cluster_heads}
    for node in alive:
        if node.id in head_set:
            continue
        clusters[nearest_cluster_head(node, heads)].append(node.id)
    return cluster_heads, clusters, []


def run_steady_state(state: NetworkState, clusters: Dict[int, List[int]],
                     direct_senders: List[int], radio: RadioParams,
                     r: int = 0) -> RoundOutcome:
    """
     ┌─────────────────────────────────────┐
     │        RUN_STEADY_STATE             │
     └─────────────────────────────────────┘
     Charge data-phase energy and count deliveries

     Parameters:
     - state: network state after setup
     - clusters: CH id -> member ids
     - direct_senders: ids uplinking straight to the BS
     - radio: radio coefficients
     - r: round index stamped on the outcome

     Returns:
     - RoundOutcome for the round

     Notes:
     - Members pay tx to their CH; CHs pay rx per message sent
       to them, aggregation over received + 1 messages and the
       BS uplink; direct senders pay the BS uplink
     - A node short of energy spends what it has, dies and its
       pending message is lost
    """
    L = radio.message_bits
    nodes = state.nodes
    alive_at_start = {node.id for node in nodes if node.alive}
    outcome = RoundOutcome(
        round=r,
        cluster_heads=sorted(clusters),
        clusters={head_id: sorted(members) for head_id, members in sorted(clusters.items())},
        direct_senders=sorted(direct_senders)
    )

    # members -> CH
    head_of = {
        member_id: head_id
        for head_id, members in outcome.clusters.items()
        for member_id in members
    }
    sent_to: Dict[int, int] = {head_id: 0 for head_id in outcome.clusters}
    for member_id in sorted(head_of):
        member = nodes[member_id]
        head = nodes[head_of[member_id]]
        cost = tx_energy(L, distance(member.position, head.position), radio)
        if _charge(member, cost, outcome):
            sent_to[head.id] += 1

    # CH receive, aggregate, uplink
    for head_id in outcome.cluster_heads:
        head = nodes[head_id]
        received = 0
        for _ in range(sent_to[head_id]):
            if not _charge(head, rx_energy(L, radio), outcome):
                break
            received += 1
        outcome.packets_to_ch += received
        if not head.alive:
            continue
        if not _charge(head, aggregation_energy(L, received + 1, radio), outcome):
            continue
        if _charge(head, tx_energy(L, head.d_i, radio), outcome):
            outcome.packets_to_bs += 1

    # direct senders -> BS
    for sender_id in outcome.direct_senders:
        sender = nodes[sender_id]
        if _charge(sender, tx_energy(L, sender.d_i, radio), outcome):
            outcome.packets_to_bs += 1

    outcome.deaths = sorted(node_id for node_id in alive_at_start if not nodes[node_id].alive)
    return outcome


def run_round(state: NetworkState, params: ElectionParams, radio: RadioParams,
              r: int, rng: np.random.Generator) -> RoundOutcome:
    """
     ┌─────────────────────────────────────┐
     │           RUN_ROUND                 │
     └─────────────────────────────────────┘
     Epoch maintenance, setup and steady state for round r
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    advance_epoch(state.nodes, r, params)
    _, clusters, direct_senders = run_setup_phase(state, params, r, rng)
    return run_steady_state(state, clusters, direct_senders, radio, r)
