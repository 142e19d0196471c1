"""Data structures for the decentralized protocol

Arms are 0-based inside the protocol; the Policy surface converts to 1-based.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Generator, List, Optional, Tuple, TypeVar

import numpy as np

T = TypeVar('T')

# A subroutine yields this slot's arm, receives the reward and returns its result
Subroutine = Generator[int, int, T]


class Stage(Enum):
    """Protocol stage of one player

    State machine flow:
    FIND_GOOD_ARM → MUSICAL_CHAIRS → COUNT_PLAYERS → EXPLORE → EXPLOIT
          └──────────────┴──────────────┴─────────────┴──→ ABORTED
    """
    FIND_GOOD_ARM = "find_good_arm"
    MUSICAL_CHAIRS = "musical_chairs"
    COUNT_PLAYERS = "count_players"
    EXPLORE = "explore"
    EXPLOIT = "exploit"
    ABORTED = "aborted"


class ProtocolAbort(Exception):
    """Raised by a subroutine that cannot continue consistently"""

    def __init__(self, reason: str, stage: Optional[Stage] = None):
        super().__init__(reason)
        self.reason = reason
        self.stage = stage


@dataclass
class PlayerState:
    """Everything one player knows; nothing here is shared between players"""
    K: int
    delta: float
    stage: Stage = Stage.FIND_GOOD_ARM
    slot: int = 0
    phase: int = 0
    R: List[float] = field(default_factory=list)
    N: List[int] = field(default_factory=list)
    good_arm: Optional[int] = None
    mu_lower: Optional[float] = None
    external_rank: Optional[int] = None
    internal_rank: Optional[int] = None
    M_hat: Optional[int] = None
    active_arms: List[int] = field(default_factory=list)
    active_players: Optional[int] = None
    assigned_arm: Optional[int] = None
    rejected_arms: List[int] = field(default_factory=list)
    bits_sent: int = 0
    bits_received: int = 0
    abort_reason: Optional[str] = None
    stage_log: List[Tuple[str, int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.R:
            self.R = [0.0] * self.K
        if not self.N:
            self.N = [0] * self.K

    def enter(self, stage: Stage):
        self.stage = stage
        self.stage_log.append((stage.value, self.slot))

    def assign(self, arm: int):
        if self.assigned_arm is not None and self.assigned_arm != arm:
            raise ProtocolAbort(f"Arm already assigned ({self.assigned_arm}), refusing {arm}", self.stage)
        self.assigned_arm = arm

    @property
    def is_leader(self) -> bool:
        return self.internal_rank == 1

    def to_dict(self):
        return {
            'stage': self.stage.value,
            'phase': self.phase,
            'good_arm': None if self.good_arm is None else self.good_arm + 1,
            'mu_lower': self.mu_lower,
            'external_rank': self.external_rank,
            'internal_rank': self.internal_rank,
            'M_hat': self.M_hat,
            'assigned_arm': None if self.assigned_arm is None else self.assigned_arm + 1,
            'rejected_arms': [k + 1 for k in self.rejected_arms],
            'bits_sent': self.bits_sent,
            'bits_received': self.bits_received,
            'abort_reason': self.abort_reason,
            'stage_log': [list(entry) for entry in self.stage_log],
        }


@dataclass
class LeaderBook:
    """Estimates the leader holds for every (arm, player) and its latest decisions"""
    mu_hat: np.ndarray
    counts: np.ndarray
    accepted: List[int] = field(default_factory=list)
    rejected: List[int] = field(default_factory=list)
    rho: Dict[int, float] = field(default_factory=dict)
    radius: Dict[int, float] = field(default_factory=dict)

    @classmethod
    def empty(cls, K: int, M_hat: int) -> 'LeaderBook':
        return cls(mu_hat=np.zeros((K, M_hat)), counts=np.zeros((K, M_hat), dtype=np.int64))

    @property
    def players(self) -> int:
        return self.mu_hat.shape[1]


@dataclass
class Decision:
    """Outcome of one communication round for one player"""
    assigned_arm: Optional[int]
    active_arms: List[int]
    active_players: int


class ScheduleOutcome:
    """Result payloads of the four subroutines; each can be set only once"""

    FIELDS = ('good_arm', 'mu_lower', 'external_rank', 'M_hat', 'internal_rank', 'assigned_arm')

    def __init__(self):
        self._values: Dict[str, Any] = {}

    def record(self, name: str, value: Any):
        if name not in self.FIELDS:
            raise KeyError(f"Unknown outcome field '{name}'")
        if name in self._values:
            raise ValueError(f"Outcome field '{name}' already set to {self._values[name]}")
        self._values[name] = value

    def get(self, name: str) -> Any:
        return self._values.get(name)

    def is_complete(self) -> bool:
        return all(name in self._values for name in self.FIELDS)

    def to_dict(self):
        return dict(self._values)
