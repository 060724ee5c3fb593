"""
Task queue system for the WSN clustering simulator

This module provides the in-memory task queue and worker pool
that execute independent simulation runs.
"""

from .queue import SimulationTask, TaskQueue
from .worker import TaskWorker, WorkerPool
from .handlers import HANDLERS, handle_simulation_run

__all__ = [
    # Queue
    'SimulationTask',
    'TaskQueue',
    # Worker
    'TaskWorker',
    'WorkerPool',
    # Handlers
    'HANDLERS',
    'handle_simulation_run'
]
