"""
 ┌─────────────────────────────────────┐
 │          TEST_ELECTION              │
 └─────────────────────────────────────┘
 Cluster-head election tests

 Threshold fixtures for all three variants, clamping, epoch
 resets and the random election loop.
"""

import sys
import os
from typing import Dict, Any, List

import numpy as np

from .base_test import BaseTest, run_suite_for_pytest

# Add parent directory to path for imports
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.models import Node, Position, Protocol
from core.params import ElectionParams
from election import (
    DeLeachElection,
    ELeachElection,
    LeachElection,
    advance_epoch,
    clamp_probability,
    deleach_far_threshold,
    deleach_near_threshold,
    eleach_threshold,
    elect_cluster_heads,
    get_strategy,
    is_near,
    leach_threshold
)


def make_nodes(count: int, d_i: float = 100.0, e: float = 0.5) -> List[Node]:
    return [
        Node(id=i, position=Position(float(i), 0.0), d_i=d_i, e_init=0.5, e_residual=e)
        for i in range(count)
    ]


class ElectionTests(BaseTest):
    """
     ┌─────────────────────────────────────┐
     │         ELECTIONTESTS               │
     └─────────────────────────────────────┘
     Test suite for threshold formulas and elections
    """

    def __init__(self):
        super().__init__("Election Tests")
        self.params = None

    def setup(self):
        super().setup()
        self.params = ElectionParams()

    def test_epoch_length(self) -> Dict[str, Any]:
        return self.combine(
            self.assert_equals(self.params.epoch_length, 20),
            self.assert_equals(ElectionParams(p=0.1).epoch_length, 10),
            self.assert_equals(ElectionParams(p=0.3).epoch_length, 3),
            self.assert_equals(ElectionParams(p=0.9).epoch_length, 1)
        )

    def test_leach_threshold_fixtures(self) -> Dict[str, Any]:
        return self.combine(
            self.assert_close(leach_threshold(self.params, 0, True), 0.05),
            self.assert_close(leach_threshold(self.params, 19, True), 1.0),
            self.assert_close(leach_threshold(self.params, 20, True), 0.05),
            self.assert_close(leach_threshold(self.params, 10, True), 0.1),
            self.assert_equals(leach_threshold(self.params, 5, False), 0.0)
        )

    def test_eleach_threshold_fixtures(self) -> Dict[str, Any]:
        p = self.params
        return self.combine(
            self.assert_close(eleach_threshold(p, 0, True, 0.4, 0.5), 0.05),
            self.assert_close(eleach_threshold(p, 0, True, 0.2, 0.5), 0.002),
            self.assert_close(eleach_threshold(p, 0, True, 0.25, 0.5), 0.05 * 0.05),
            self.assert_equals(eleach_threshold(p, 0, True, 0.0, 0.5), 0.0),
            self.assert_equals(eleach_threshold(p, 0, False, 0.4, 0.5), 0.0),
            self.assert_raises(ValueError, eleach_threshold, p, 0, True, 0.1, 0.0)
        )

    def test_deleach_near_threshold_fixtures(self) -> Dict[str, Any]:
        p = self.params
        return self.combine(
            self.assert_close(deleach_near_threshold(p, 0, True, 120.0, 120.0), 0.375),
            self.assert_close(deleach_near_threshold(p, 10, True, 120.0, 120.0), 0.75),
            self.assert_equals(deleach_near_threshold(p, 19, True, 120.0, 80.0), 1.0),
            self.assert_equals(deleach_near_threshold(p, 3, False, 120.0, 80.0), 0.0),
            self.assert_raises(ValueError, deleach_near_threshold, p, 0, True, 120.0, 0.0),
            self.assert_raises(ValueError, deleach_near_threshold, p, 0, True, 120.0, 121.0, match="far region")
        )

    def test_deleach_far_threshold_fixtures(self) -> Dict[str, Any]:
        p = self.params
        return self.combine(
            self.assert_close(deleach_far_threshold(p, 0, True, 0.5, 0.5), 0.03125),
            self.assert_close(deleach_far_threshold(p, 0, True, 0.25, 0.5), 0.015625),
            self.assert_equals(deleach_far_threshold(p, 13, True, 0.0, 0.5), 0.0),
            self.assert_equals(deleach_far_threshold(p, 0, False, 0.5, 0.5), 0.0),
            self.assert_raises(ValueError, deleach_far_threshold, p, 0, True, 0.5, -1.0)
        )

    def test_thresholds_stay_in_unit_interval(self) -> Dict[str, Any]:
        p = self.params
        values = []
        for r in range(40):
            for e in (0.0, 0.1, 0.25, 0.26, 0.5):
                values.append(eleach_threshold(p, r, True, e, 0.5))
                values.append(deleach_far_threshold(p, r, True, e, 0.5))
            for d_i in (1.0, 50.0, 99.0, 120.0):
                values.append(deleach_near_threshold(p, r, True, 120.0, d_i))
            values.append(leach_threshold(p, r, True))
        return self.combine(
            self.assert_true(all(0.0 <= v <= 1.0 for v in values), "all thresholds within [0, 1]"),
            self.assert_equals(clamp_probability(7.5), 1.0),
            self.assert_equals(clamp_probability(-0.1), 0.0)
        )

    def test_region_monotonicity(self) -> Dict[str, Any]:
        p = ElectionParams(c=1.0)
        for r in (0, 4, 12):
            near = [deleach_near_threshold(p, r, True, 120.0, d) for d in np.linspace(10.0, 120.0, 23)]
            far = [deleach_far_threshold(p, r, True, e, 0.5) for e in np.linspace(0.0, 0.5, 11)]
            if any(b > a for a, b in zip(near, near[1:])):
                return {'success': False, 'message': f"near threshold increases with d_i at r={r}"}
            if any(b < a for a, b in zip(far, far[1:])):
                return {'success': False, 'message': f"far threshold decreases with energy at r={r}"}
        return {'success': True, 'message': "near non-increasing in d_i, far non-decreasing in energy"}

    def test_deleach_dispatch_boundary(self) -> Dict[str, Any]:
        strategy = DeLeachElection(self.params.copy(update={'variant': Protocol.DE_LEACH}))
        boundary = Node(id=0, position=Position(0, 0), d_i=120.0, e_init=0.5, e_residual=0.5)
        beyond = Node(id=1, position=Position(0, 0), d_i=120.5, e_init=0.5, e_residual=0.5)
        return self.combine(
            self.assert_true(is_near(120.0, 120.0), "boundary belongs to the near region"),
            self.assert_close(strategy.threshold(boundary, 0, 120.0), 0.375),
            self.assert_close(strategy.threshold(beyond, 0, 120.0), 0.03125)
        )

    def test_strategy_dispatch(self) -> Dict[str, Any]:
        return self.combine(
            self.assert_true(isinstance(get_strategy(ElectionParams(variant=Protocol.LEACH)), LeachElection)),
            self.assert_true(isinstance(get_strategy(ElectionParams(variant=Protocol.E_LEACH)), ELeachElection)),
            self.assert_true(isinstance(get_strategy(ElectionParams(variant=Protocol.DE_LEACH)), DeLeachElection)),
            self.assert_equals(Protocol.parse("DE-LEACH"), Protocol.DE_LEACH),
            self.assert_equals(Protocol.parse("e_leach"), Protocol.E_LEACH),
            self.assert_raises(ValueError, Protocol.parse, "pegasis")
        )

    def test_dead_and_ineligible_nodes_get_zero(self) -> Dict[str, Any]:
        strategy = LeachElection(self.params)
        dead = make_nodes(1)[0]
        dead.alive = False
        used = make_nodes(1)[0]
        used.in_g = False
        return self.combine(
            self.assert_equals(strategy.threshold(dead, 19, 100.0), 0.0),
            self.assert_equals(strategy.threshold(used, 19, 100.0), 0.0)
        )

    def test_all_dead_elects_nobody(self) -> Dict[str, Any]:
        nodes = make_nodes(10)
        for node in nodes:
            node.alive = False
        rng = np.random.default_rng(0)
        before = rng.bit_generator.state
        elected = elect_cluster_heads(nodes, self.params, 0, 100.0, rng)
        return self.combine(
            self.assert_equals(elected, []),
            self.assert_equals(rng.bit_generator.state, before, "dead nodes draw nothing")
        )

    def test_last_epoch_round_forces_election(self) -> Dict[str, Any]:
        nodes = make_nodes(1)
        elected = elect_cluster_heads(nodes, self.params, 19, 100.0, np.random.default_rng(1))
        return self.combine(
            self.assert_equals(elected, [0]),
            self.assert_equals(nodes[0].in_g, False)
        )

    def test_leach_monte_carlo_mean(self) -> Dict[str, Any]:
        rng = np.random.default_rng(12345)
        nodes = make_nodes(100)
        counts = []
        for _ in range(10000):
            for node in nodes:
                node.in_g = True
            counts.append(len(elect_cluster_heads(nodes, self.params, 0, 100.0, rng)))
        mean = float(np.mean(counts))
        return self.assert_true(4.8 <= mean <= 5.2, f"mean CH count {mean:.3f} in [4.8, 5.2]", mean=mean)

    def test_election_is_rng_deterministic(self) -> Dict[str, Any]:
        runs = []
        for _ in range(2):
            nodes = make_nodes(100)
            rng = np.random.default_rng(99)
            runs.append([elect_cluster_heads(nodes, self.params, r, 100.0, rng) for r in range(20)])
        return self.assert_equals(runs[0], runs[1])

    def test_epoch_reset(self) -> Dict[str, Any]:
        nodes = make_nodes(3)
        for node in nodes:
            node.in_g = False
        nodes[2].alive = False
        no_reset = advance_epoch(nodes, 7, self.params)
        unchanged = [node.in_g for node in nodes]
        reset = advance_epoch(nodes, 20, self.params)
        return self.combine(
            self.assert_equals(no_reset, False),
            self.assert_equals(unchanged, [False, False, False]),
            self.assert_equals(reset, True),
            self.assert_equals([node.in_g for node in nodes], [True, True, False]),
            self.assert_equals(advance_epoch(nodes, 0, self.params), True)
        )

    def test_each_node_heads_once_per_epoch(self) -> Dict[str, Any]:
        for variant in Protocol:
            params = self.params.copy(update={'variant': variant})
            nodes = make_nodes(60, d_i=90.0)
            for i, node in enumerate(nodes):
                node.d_i = 60.0 + i
            rng = np.random.default_rng(4)
            for epoch in range(5):
                seen = set()
                for r in range(epoch * 20, epoch * 20 + 20):
                    advance_epoch(nodes, r, params)
                    elected = elect_cluster_heads(nodes, params, r, 89.5, rng)
                    if seen.intersection(elected):
                        return {'success': False, 'message': f"{variant.value}: repeat CH in epoch {epoch}"}
                    seen.update(elected)
        return {'success': True, 'message': "no repeat CH within an epoch for any variant"}


def test_election_suite():
    run_suite_for_pytest(ElectionTests)
