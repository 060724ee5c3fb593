"""
Repository implementations for simulation outputs
"""

from .results import ResultsRepository

__all__ = [
    'ResultsRepository'
]
