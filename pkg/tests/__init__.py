"""
WSN Clustering Simulator Test Suite

This package contains the tests for the radio model, deployments,
elections, the round engine, metrics and the experiment harness.
Run them after any significant refactoring or new functionality.
"""

from .test_runner import TestRunner
from .test_radio import RadioTests
from .test_topology import TopologyTests
from .test_election import ElectionTests
from .test_engine import EngineTests
from .test_metrics import MetricsTests
from .test_cli import CliTests
from .test_experiments import ExperimentTests
from .test_acceptance import AcceptanceTests

__all__ = [
    'TestRunner',
    'RadioTests',
    'TopologyTests',
    'ElectionTests',
    'EngineTests',
    'MetricsTests',
    'CliTests',
    'ExperimentTests',
    'AcceptanceTests'
]
