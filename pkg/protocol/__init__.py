"""Decentralized multi-player protocol without collision sensing"""
from .player import ProposedPlayer, delta_for_horizon, musical_chairs_tau, signaling_tau
from .baselines import OraclePlayer, UniformPlayer
from .lockstep import (
    run_lockstep, play, run_full_algorithm, player_seed, environment_seed,
    LockstepResult, PlayResult
)
from .core import Stage, PlayerState, LeaderBook, Decision, ScheduleOutcome, ProtocolAbort

__all__ = [
    'ProposedPlayer',
    'delta_for_horizon',
    'musical_chairs_tau',
    'signaling_tau',
    'OraclePlayer',
    'UniformPlayer',
    'run_lockstep',
    'play',
    'run_full_algorithm',
    'player_seed',
    'environment_seed',
    'LockstepResult',
    'PlayResult',
    'Stage',
    'PlayerState',
    'LeaderBook',
    'Decision',
    'ScheduleOutcome',
    'ProtocolAbort'
]
