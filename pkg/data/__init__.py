"""
Data access layer for the WSN clustering simulator

This module provides the repository that persists run and
experiment results as CSV files.
"""

from .repositories.results import ResultsRepository

__all__ = [
    'ResultsRepository'
]
