"""
Services layer for the WSN clustering simulator

This module provides the experiment service that coordinates
deployments, the worker pool, metrics aggregation and the
results repository.

Services are organized by domain responsibility:
- ExperimentService: single runs, comparisons, sweeps and the
  analytic cluster-count report
"""

from .experiment_service import (
    ExperimentService,
    AGGREGATE_FILENAME,
    SWEEP_C_FILENAME,
    SWEEP_N_FILENAME,
    SWEEP_C_HEADER,
    SWEEP_N_HEADER,
    best_c,
    deployment_for,
    seed_list,
    unique
)

__all__ = [
    'ExperimentService',
    'AGGREGATE_FILENAME',
    'SWEEP_C_FILENAME',
    'SWEEP_N_FILENAME',
    'SWEEP_C_HEADER',
    'SWEEP_N_HEADER',
    'best_c',
    'deployment_for',
    'seed_list',
    'unique'
]
