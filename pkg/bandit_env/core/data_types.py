"""Data structures for the multi-player bandit environment"""
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple


@dataclass(frozen=True)
class ArmMeans:
    """Bernoulli means of the K arms, in interface order (arm 1 first)"""
    means: Tuple[float, ...]

    def __init__(self, means: Sequence[float]):
        object.__setattr__(self, 'means', tuple(float(mu) for mu in means))

    @property
    def K(self) -> int:
        return len(self.means)

    def sorted_desc(self) -> Tuple[float, ...]:
        """Order statistics mu_(1) >= mu_(2) >= ... >= mu_(K)"""
        return tuple(sorted(self.means, reverse=True))

    def top_arms(self, M: int) -> List[int]:
        """1-based indices of the M best arms (ties broken by lower index)"""
        order = sorted(range(self.K), key=lambda k: (-self.means[k], k))
        return sorted(k + 1 for k in order[:M])

    def __getitem__(self, arm: int) -> float:
        """Mean of 1-based arm index"""
        return self.means[arm - 1]

    def __len__(self) -> int:
        return self.K

    def to_list(self) -> List[float]:
        return list(self.means)


@dataclass
class Observation:
    """Per-player rewards of one slot. Collisions and other players' choices are not included."""
    slot: int
    rewards: Tuple[int, ...]

    def reward_of(self, player: int) -> int:
        return self.rewards[player]


@dataclass
class RegretLedger:
    """Cumulative pseudo-regret with (slot, cumulative) checkpoints"""
    cumulative: float = 0.0
    checkpoints: List[Tuple[int, float]] = field(default_factory=list)

    def add(self, increment: float):
        # Float noise of sum differences must not make the ledger decrease
        if increment > 0.0:
            self.cumulative += increment

    def checkpoint(self, slot: int):
        if not self.checkpoints or self.checkpoints[-1][0] != slot:
            self.checkpoints.append((slot, self.cumulative))

    def to_dict(self):
        return {
            'cumulative': self.cumulative,
            'checkpoints': [list(cp) for cp in self.checkpoints],
        }
