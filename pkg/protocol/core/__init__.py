"""Protocol state and result types"""
from .data_types import (
    Stage, PlayerState, LeaderBook, Decision, ScheduleOutcome, ProtocolAbort, Subroutine
)

__all__ = [
    'Stage',
    'PlayerState',
    'LeaderBook',
    'Decision',
    'ScheduleOutcome',
    'ProtocolAbort',
    'Subroutine'
]
