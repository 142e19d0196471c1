"""Reference policies for the harness"""
from typing import Optional

from bandit_env.core.interfaces import Policy
from .algorithms.random_source import UniformArmSampler


class OraclePlayer(Policy):
    """Pinned to one arm from the first slot; distinct top-M pins give zero regret"""

    def __init__(self, arm: int):
        self.arm = arm

    def reset(self, seed, K: int, T: int):
        if not 1 <= self.arm <= K:
            raise ValueError(f"Oracle arm {self.arm} outside 1..{K}")

    def act(self, slot: int) -> int:
        return self.arm

    def observe(self, reward: int):
        pass

    @property
    def committed_arm(self) -> Optional[int]:
        return self.arm


class UniformPlayer(Policy):
    """Independent uniform arm choice every slot"""

    def __init__(self):
        self._sampler: Optional[UniformArmSampler] = None

    def reset(self, seed, K: int, T: int):
        self._sampler = UniformArmSampler(seed, K)

    def act(self, slot: int) -> int:
        return self._sampler.draw() + 1

    def observe(self, reward: int):
        pass
