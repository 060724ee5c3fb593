"""
Core module for the WSN clustering simulator

This module contains the data models, validated parameters,
deployment geometry and the radio energy model.
"""

from .models import (
    Protocol,
    NodeRole,
    TaskStatus,
    TaskName,
    Position,
    Node,
    Topology,
    RoundOutcome,
    RoundRecord,
    RunSummary,
    AggregateStats
)

from .params import (
    ConfigError,
    RadioParams,
    ElectionParams,
    SimConfig,
    CONFIG_KEYS,
    load_config
)

from .topology import (
    distance,
    average_distance,
    generate_topology,
    build_topology,
    dump_topology_csv,
    load_topology_csv
)

__all__ = [
    # Models
    'Protocol',
    'NodeRole',
    'TaskStatus',
    'TaskName',
    'Position',
    'Node',
    'Topology',
    'RoundOutcome',
    'RoundRecord',
    'RunSummary',
    'AggregateStats',
    # Parameters
    'ConfigError',
    'RadioParams',
    'ElectionParams',
    'SimConfig',
    'CONFIG_KEYS',
    'load_config',
    # Topology
    'distance',
    'average_distance',
    'generate_topology',
    'build_topology',
    'dump_topology_csv',
    'load_topology_csv'
]
