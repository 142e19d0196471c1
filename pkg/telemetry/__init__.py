"""Telemetry module for bandit runs"""
from .metrics import RunMetrics, assignment_is_optimal

__all__ = ['RunMetrics', 'assignment_is_optimal']
