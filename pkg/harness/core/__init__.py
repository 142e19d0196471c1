"""Harness data types"""
from .data_types import ExperimentConfig, PolicyKind, RunRecord, AggregateCurve

__all__ = [
    'ExperimentConfig',
    'PolicyKind',
    'RunRecord',
    'AggregateCurve'
]
