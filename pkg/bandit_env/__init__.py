"""Multi-player bandit environment module"""
from .environment import (
    Environment, BanditSetupError, create_environment, collision_indicator,
    top_m_sum, expected_uniform_reward, uniform_regret_slope
)
from .core import ArmMeans, Observation, RegretLedger, Policy

__all__ = [
    'Environment',
    'BanditSetupError',
    'create_environment',
    'collision_indicator',
    'top_m_sum',
    'expected_uniform_reward',
    'uniform_regret_slope',
    'ArmMeans',
    'Observation',
    'RegretLedger',
    'Policy'
]
