"""Bandit environment interfaces and data structures"""
from .interfaces import Policy
from .data_types import ArmMeans, Observation, RegretLedger

__all__ = [
    'Policy',
    'ArmMeans',
    'Observation',
    'RegretLedger'
]
