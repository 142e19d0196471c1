"""
Rank assignment on virtual arms

The good arm is time-shared as K virtual arms: slot offset l of every block
of K slots is virtual arm l. Musical chairs on the virtual arms gives each
player a distinct external rank s in 1..K; sequential hopping on them then
counts the players and gives each a distinct internal rank j in 1..M.
"""
import logging
from typing import Tuple

from ..core.data_types import PlayerState, ProtocolAbort, Stage, Subroutine
from .random_source import UniformArmSampler

logger = logging.getLogger(__name__)


def parking_arm(K: int, k_good: int) -> int:
    """Smallest arm other than the good arm"""
    return 1 if k_good == 0 else 0


def musical_chairs_length(K: int, tau: int) -> int:
    return K * tau


def number_players_length(K: int, tau: int) -> int:
    return 2 * K * K * tau


def virtual_musical_chairs(state: PlayerState, sampler: UniformArmSampler,
                           k_good: int, tau: int) -> Subroutine[int]:
    """
    Musical chairs on K virtual arms for exactly K * tau slots

    An unseated player draws a virtual arm at the start of each block, pulls
    the good arm only at that offset and parks otherwise. The first positive
    reward seats it.

    Returns:
        external rank s in 1..K
    """
    K = state.K
    park = parking_arm(K, k_good)
    seat = None
    offset = 0
    for t in range(musical_chairs_length(K, tau)):
        position = t % K
        if position == 0:
            offset = seat if seat is not None else sampler.draw()
        if position == offset:
            r = yield k_good
            if r > 0 and seat is None:
                seat = offset
                logger.debug(f"Seated on virtual arm {offset + 1} at block {t // K}")
        else:
            yield park
    if seat is None:
        raise ProtocolAbort("No positive reward on any virtual arm during musical chairs",
                            Stage.MUSICAL_CHAIRS)
    return seat + 1


def virtual_number_players(state: PlayerState, k_good: int, s: int, tau: int) -> Subroutine[Tuple[int, int]]:
    """
    2K rounds of sequential hopping on the virtual arms

    A player stays on virtual arm s until round 2s, then hops by one each
    round. Every pair of players meets exactly once; an all-zero window
    counts one more player, and also raises the internal rank when the
    player has not started hopping yet.

    Returns:
        (M_hat, j)
    """
    K = state.K
    park = parking_arm(K, k_good)
    M_hat, j = 1, 1
    offset = s - 1
    for n in range(1, 2 * K + 1):
        if n > 2 * s:
            offset = (offset + 1) % K
        for position in range(K):
            if position != offset:
                for _ in range(tau):
                    yield park
                continue
            total = 0
            for _ in range(tau):
                r = yield k_good
                total += r
            if total == 0:
                M_hat += 1
                if n <= 2 * s:
                    j += 1
    return M_hat, j
