"""Agreement on a good arm and a lower bound on its mean"""
import logging
import math
from typing import Tuple

from ..core.data_types import PlayerState, Subroutine
from .random_source import UniformArmSampler

logger = logging.getLogger(__name__)


def sub_phase_one_length(K: int, p: int, delta: float) -> int:
    """Uniform exploration slots of phase p: ceil(6 K 2^p ln(2/delta))"""
    return math.ceil(6 * K * 2 ** p * math.log(2 / delta))


def confirmation_window_length(K: int, p: int, delta: float) -> int:
    """Slots spent on each candidate arm in the confirmation sub-phase"""
    return math.ceil(K * 2 ** p * math.log(2 / delta))


def phase_length(K: int, p: int, delta: float) -> int:
    """Upper bound on the slots of phase p (all K confirmation windows played)"""
    return sub_phase_one_length(K, p, delta) + K * confirmation_window_length(K, p, delta)


def accepts_arm(total_reward: float, pulls: int, p: int) -> bool:
    """Arm accepted in phase p iff its empirical mean is at least 2^(1-p); unseen arms are rejected"""
    return pulls > 0 and total_reward / pulls >= 2.0 ** (1 - p)


def find_good_arm(state: PlayerState, sampler: UniformArmSampler) -> Subroutine[Tuple[int, float]]:
    """
    Phases p = 1, 2, ...:
      1. sample arms uniformly and accept those with empirical mean >= 2^(1-p)
      2. for each arm l in ascending order, sample uniformly if l is accepted
         (confirming l on any positive reward from it) or jam l otherwise

    A confirmed arm ends the subroutine at the end of its window, so every
    player that confirms the same arm leaves on the same slot.

    Returns:
        (good arm, 2^-p)
    """
    K, delta = state.K, state.delta
    p = 0
    while True:
        p += 1
        state.phase = p
        R = [0.0] * K
        N = [0] * K
        for _ in range(sub_phase_one_length(K, p, delta)):
            k = sampler.draw()
            r = yield k
            R[k] += r
            N[k] += 1
        state.R, state.N = R, N
        accepted = [accepts_arm(R[k], N[k], p) for k in range(K)]
        logger.debug(f"Phase {p}: accepted arms {[k for k in range(K) if accepted[k]]}")

        window = confirmation_window_length(K, p, delta)
        for ell in range(K):
            if accepted[ell]:
                confirmed = False
                for _ in range(window):
                    k = sampler.draw()
                    r = yield k
                    if k == ell and r > 0:
                        confirmed = True
                if confirmed:
                    return ell, 2.0 ** -p
            else:
                for _ in range(window):
                    yield ell
