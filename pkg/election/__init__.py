"""
Election module for the WSN clustering simulator

This module provides the cluster-head threshold formulas for
LEACH, E-LEACH and DE-LEACH and the per-round election loop.
"""

from .base import ElectionStrategy, clamp_probability, rotation_threshold
from .leach import LeachElection, leach_threshold
from .eleach import ELeachElection, eleach_threshold
from .deleach import DeLeachElection, deleach_near_threshold, deleach_far_threshold, is_near
from .manager import STRATEGIES, get_strategy, advance_epoch, elect_cluster_heads

__all__ = [
    'ElectionStrategy',
    'clamp_probability',
    'rotation_threshold',
    'LeachElection',
    'leach_threshold',
    'ELeachElection',
    'eleach_threshold',
    'DeLeachElection',
    'deleach_near_threshold',
    'deleach_far_threshold',
    'is_near',
    'STRATEGIES',
    'get_strategy',
    'advance_epoch',
    'elect_cluster_heads'
]
