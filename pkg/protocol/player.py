"""The full decentralized protocol as a single-player Policy"""
import logging
import math
from typing import Optional

from bandit_env.core.interfaces import Policy
from .algorithms.exploration import distributed_exploration
from .algorithms.find_good_arm import find_good_arm
from .algorithms.random_source import UniformArmSampler
from .algorithms.rank_assignment import parking_arm, virtual_musical_chairs, virtual_number_players
from .core.data_types import PlayerState, ProtocolAbort, ScheduleOutcome, Stage, Subroutine

logger = logging.getLogger(__name__)


def delta_for_horizon(T: int) -> float:
    """1 / (T ln T), capped at 0.5 so short horizons still give a valid confidence"""
    if T < 3:
        return 0.5
    return min(0.5, 1.0 / (T * math.log(T)))


def musical_chairs_tau(K: int, delta: float, mu_lower: float) -> int:
    return math.ceil(K * math.log(1 / delta) / mu_lower)


def signaling_tau(delta: float, mu_lower: float) -> int:
    """Slots per bit for counting, exploration messages and decisions"""
    return math.ceil(math.log(1 / delta) / mu_lower)


class ProposedPlayer(Policy):
    """
    One player running find good arm, musical chairs, player counting and
    distributed exploration, then exploiting its assigned arm until the horizon.

    Nothing is shared with other players: the only inputs are the seed, K, T,
    the slot index and this player's own rewards.
    """

    def __init__(self, name: str = "player", delta: Optional[float] = None):
        self.name = name
        self.delta = delta
        self.state: Optional[PlayerState] = None
        self.outcome = ScheduleOutcome()
        self.T = 0
        self._sampler: Optional[UniformArmSampler] = None
        self._pipeline: Optional[Subroutine[None]] = None
        self._next_arm = 0
        self._committed: Optional[int] = None

    def reset(self, seed, K: int, T: int):
        self.T = T
        self.state = PlayerState(K=K, delta=self.delta or delta_for_horizon(T))
        self.outcome = ScheduleOutcome()
        self._sampler = UniformArmSampler(seed, K)
        self._committed = None
        self._pipeline = self._run()
        self._resume(None)

    def act(self, slot: int) -> int:
        self.state.slot = slot
        return self._next_arm + 1

    def observe(self, reward: int):
        self.state.slot += 1
        if self._committed is not None:
            return
        self._resume(reward)

    @property
    def committed_arm(self) -> Optional[int]:
        return None if self._committed is None else self._committed + 1

    @property
    def stage(self) -> Stage:
        return self.state.stage

    def _resume(self, reward: Optional[int]):
        try:
            if reward is None:
                self._next_arm = next(self._pipeline)
            else:
                self._next_arm = self._pipeline.send(reward)
        except ProtocolAbort as e:
            self._abort(e)

    def _abort(self, error: ProtocolAbort):
        state = self.state
        stage = error.stage or state.stage
        state.abort_reason = f"{stage.value}: {error.reason}"
        state.enter(Stage.ABORTED)
        if state.assigned_arm is not None:
            fallback = state.assigned_arm
        elif state.good_arm is not None:
            fallback = parking_arm(state.K, state.good_arm)
        else:
            fallback = 0
        self._next_arm = fallback
        self._committed = fallback
        logger.warning(f"⚠️ {self.name} aborted at slot {state.slot} ({state.abort_reason}); "
                       f"parking on arm {fallback + 1}")

    def _enter(self, stage: Stage):
        self.state.enter(stage)
        logger.debug(f"{self.name} entering {stage.value} at slot {self.state.slot}")

    def _run(self) -> Subroutine[None]:
        state = self.state
        K, delta = state.K, state.delta

        self._enter(Stage.FIND_GOOD_ARM)
        k_good, mu_lower = yield from find_good_arm(state, self._sampler)
        state.good_arm, state.mu_lower = k_good, mu_lower
        self.outcome.record('good_arm', k_good)
        self.outcome.record('mu_lower', mu_lower)

        self._enter(Stage.MUSICAL_CHAIRS)
        s = yield from virtual_musical_chairs(state, self._sampler, k_good, musical_chairs_tau(K, delta, mu_lower))
        state.external_rank = s
        self.outcome.record('external_rank', s)

        tau = signaling_tau(delta, mu_lower)
        self._enter(Stage.COUNT_PLAYERS)
        M_hat, j = yield from virtual_number_players(state, k_good, s, tau)
        state.M_hat, state.internal_rank = M_hat, j
        self.outcome.record('M_hat', M_hat)
        self.outcome.record('internal_rank', j)

        self._enter(Stage.EXPLORE)
        f = yield from distributed_exploration(state, k_good, tau)
        state.assign(f)
        self.outcome.record('assigned_arm', f)

        self._enter(Stage.EXPLOIT)
        self._committed = f
        while True:
            yield f
