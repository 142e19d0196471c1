"""Slotted multi-player Bernoulli bandit without collision sensing"""
import logging
from typing import Dict, Optional, Sequence, Union

import numpy as np

from config.settings import simulation_config
from .core.data_types import ArmMeans, Observation, RegretLedger

logger = logging.getLogger(__name__)


class BanditSetupError(ValueError):
    """Raised for invalid means, player counts or arm indices"""
    pass


def _as_arm_means(means: Union[ArmMeans, Sequence[float]]) -> ArmMeans:
    arms = means if isinstance(means, ArmMeans) else ArmMeans(means)
    if arms.K < 2:
        raise BanditSetupError(f"At least 2 arms required, got K={arms.K}")
    bad = [mu for mu in arms.means if not (0.0 <= mu <= 1.0)]
    if bad:
        raise BanditSetupError(f"Arm means must lie in [0, 1], got {bad}")
    return arms


def collision_indicator(choices: Sequence[int], k: int) -> bool:
    """True iff at least two players chose arm k"""
    return sum(1 for arm in choices if arm == k) >= 2


def top_m_sum(means: Union[ArmMeans, Sequence[float]], M: int) -> float:
    """Sum of the M largest means (oracle reward per slot)"""
    values = means.means if isinstance(means, ArmMeans) else tuple(means)
    if M < 0 or M > len(values):
        raise BanditSetupError(f"M must be between 0 and K={len(values)}, got {M}")
    return sum(sorted(values, reverse=True)[:M])


def expected_uniform_reward(means: Union[ArmMeans, Sequence[float]], M: int, k: int) -> float:
    """
    Expected reward of arm k for a player when all M players pick arms uniformly

    Args:
        means: arm means
        M: number of players
        k: 1-based arm index

    Returns:
        (1 - 1/K)^(M-1) * mu_k
    """
    values = means.means if isinstance(means, ArmMeans) else tuple(means)
    K = len(values)
    if not 1 <= k <= K:
        raise BanditSetupError(f"Arm index {k} outside 1..{K}")
    return (1.0 - 1.0 / K) ** (M - 1) * values[k - 1]


def uniform_regret_slope(means: Union[ArmMeans, Sequence[float]], M: int) -> float:
    """Expected per-slot regret when every player picks arms uniformly at random"""
    values = means.means if isinstance(means, ArmMeans) else tuple(means)
    K = len(values)
    collected = sum(expected_uniform_reward(values, M, k) for k in range(1, K + 1)) * M / K
    return top_m_sum(values, M) - collected


class Environment:
    """
    Lockstep environment shared by M players.

    Each (arm, slot) has a single Bernoulli draw X_k(t) shared by every player
    on that arm. Draws come in chunks of slots from a generator keyed by
    (seed, chunk index), so skipping slots or arms never shifts later draws.
    """

    def __init__(self, arms: ArmMeans, M: int, seed: int, chunk_size: Optional[int] = None):
        self.arms = arms
        self.M = M
        self.seed = seed
        self.slot = 0
        self.ledger = RegretLedger()

        self._means = arms.means
        self._top_sum = top_m_sum(arms, M)
        self._chunk_size = chunk_size or simulation_config['reward_chunk']
        self._chunk_index: Optional[int] = None
        self._chunk: Optional[np.ndarray] = None

    @property
    def K(self) -> int:
        return self.arms.K

    def _draw_row(self, slot: int) -> np.ndarray:
        chunk_index = slot // self._chunk_size
        if chunk_index != self._chunk_index:
            rng = np.random.default_rng([self.seed, chunk_index])
            self._chunk = rng.random((self._chunk_size, self.K))
            self._chunk_index = chunk_index
        return self._chunk[slot % self._chunk_size]

    def _count_choices(self, choices: Sequence[int]) -> Dict[int, int]:
        if len(choices) != self.M:
            raise BanditSetupError(f"Expected {self.M} choices, got {len(choices)}")
        counts: Dict[int, int] = {}
        for arm in choices:
            if not 1 <= arm <= self.K:
                raise BanditSetupError(f"Arm index {arm} outside 1..{self.K}")
            counts[arm] = counts.get(arm, 0) + 1
        return counts

    def _regret_increment(self, counts: Dict[int, int]) -> float:
        # Same summation order as top_m_sum, so a distinct top-M set gives exactly 0
        collected = sorted((self._means[arm - 1] for arm, n in counts.items() if n == 1), reverse=True)
        return self._top_sum - sum(collected)

    def step(self, choices: Sequence[int]) -> Observation:
        """
        Play one slot

        Args:
            choices: 1-based arm chosen by each player

        Returns:
            Observation with one reward per player (0 for collided players)
        """
        counts = self._count_choices(choices)
        row = self._draw_row(self.slot)
        means = self._means
        rewards = tuple(
            int(row[arm - 1] < means[arm - 1]) if counts[arm] == 1 else 0
            for arm in choices
        )
        self.ledger.add(self._regret_increment(counts))
        observation = Observation(slot=self.slot, rewards=rewards)
        self.slot += 1
        return observation

    def advance(self, choices: Sequence[int], n_slots: int):
        """Play the same choices for n_slots without producing observations"""
        if n_slots <= 0:
            return
        counts = self._count_choices(choices)
        self.ledger.add(self._regret_increment(counts) * n_slots)
        self.slot += n_slots

    def checkpoint(self):
        """Record the current cumulative regret at the current slot"""
        self.ledger.checkpoint(self.slot)


def create_environment(means: Union[ArmMeans, Sequence[float]], M: int, seed: int,
                       chunk_size: Optional[int] = None) -> Environment:
    """
    Create a fresh environment at slot 0

    Args:
        means: K >= 2 means in [0, 1]
        M: number of players, 1 <= M < K
        seed: non-negative integer keying all reward draws
        chunk_size: slots per generated block of draws (defaults to MMAB_REWARD_CHUNK)
    """
    arms = _as_arm_means(means)
    if not 1 <= M < arms.K:
        raise BanditSetupError(f"Player count must satisfy 1 <= M < K={arms.K}, got M={M}")
    if seed < 0:
        raise BanditSetupError(f"Seed must be non-negative, got {seed}")
    logger.debug(f"Environment created: K={arms.K}, M={M}, seed={seed}")
    return Environment(arms, M, seed, chunk_size=chunk_size)
