"""Player policy interface"""
from abc import ABC, abstractmethod
from typing import Optional


class Policy(ABC):
    """
    One decentralized player.

    A policy only ever sees its own rewards: the runner calls act() to get
    the arm for the current slot and then observe() with the reward that
    arm paid to this player.
    """

    @abstractmethod
    def reset(self, seed, K: int, T: int):
        """Prepare a fresh run with K arms and horizon T"""
        pass

    @abstractmethod
    def act(self, slot: int) -> int:
        """Return the 1-based arm to pull at this slot"""
        pass

    @abstractmethod
    def observe(self, reward: int):
        """Receive this player's reward for the last act()"""
        pass

    @property
    def committed_arm(self) -> Optional[int]:
        """Arm played for every remaining slot whatever the rewards, or None"""
        return None
