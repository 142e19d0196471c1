"""
Lockstep drivers: M players and one environment advancing slot by slot
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from bandit_env import ArmMeans, Environment, create_environment
from bandit_env.core.interfaces import Policy
from .core.data_types import ProtocolAbort, Subroutine
from .player import ProposedPlayer

logger = logging.getLogger(__name__)


@dataclass
class LockstepResult:
    """Per-player return values and exit slots of a set of subroutines"""
    results: List[object]
    exit_slots: List[Optional[int]]
    aborts: List[Optional[ProtocolAbort]]
    slots: int = 0

    @property
    def finished(self) -> bool:
        return all(slot is not None for slot in self.exit_slots)

    @property
    def simultaneous_exit(self) -> bool:
        return self.finished and len(set(self.exit_slots)) == 1


@dataclass
class PlayResult:
    """Environment after a run, the policies that played it and optionally every slot's choices"""
    env: Environment
    policies: List[Policy]
    choices: List[Tuple[int, ...]] = field(default_factory=list)


def run_lockstep(env: Environment, subroutines: Sequence[Subroutine], idle_arm: int = 0,
                 max_slots: Optional[int] = None) -> LockstepResult:
    """
    Drive one subroutine per player against env until all of them return

    Subroutines yield 0-based arms. A player whose subroutine has returned
    (or aborted) pulls idle_arm until the others are done.

    Args:
        env: environment with len(subroutines) players
        subroutines: one primed-or-fresh generator per player
        idle_arm: 0-based arm for finished players
        max_slots: stop after this many slots even if some are still running
    """
    n = len(subroutines)
    results: List[object] = [None] * n
    exit_slots: List[Optional[int]] = [None] * n
    aborts: List[Optional[ProtocolAbort]] = [None] * n
    arms: List[int] = [idle_arm] * n
    start = env.slot

    def settle(i: int, advance):
        try:
            arms[i] = advance()
        except StopIteration as stop:
            results[i] = stop.value
            exit_slots[i] = env.slot - start
            arms[i] = idle_arm
        except ProtocolAbort as e:
            aborts[i] = e
            exit_slots[i] = env.slot - start
            arms[i] = idle_arm

    for i, gen in enumerate(subroutines):
        settle(i, lambda gen=gen: next(gen))

    while not all(slot is not None for slot in exit_slots):
        if max_slots is not None and env.slot - start >= max_slots:
            break
        observation = env.step([arm + 1 for arm in arms])
        for i, gen in enumerate(subroutines):
            if exit_slots[i] is None:
                reward = observation.rewards[i]
                settle(i, lambda gen=gen, reward=reward: gen.send(reward))

    return LockstepResult(results=results, exit_slots=exit_slots, aborts=aborts, slots=env.slot - start)


def play(env: Environment, policies: Sequence[Policy], horizon: int,
         checkpoint_slots: Sequence[int] = (), record_choices: bool = False) -> PlayResult:
    """
    Run already-reset policies against env up to slot `horizon`

    Regret is checkpointed after each slot listed in checkpoint_slots. Once
    every policy reports a committed arm the remaining slots are played in
    one advance between checkpoints.
    """
    marks = sorted(set(int(c) for c in checkpoint_slots if 0 < c <= horizon))
    next_mark = 0
    choices_log: List[Tuple[int, ...]] = []

    while env.slot < horizon:
        committed = [policy.committed_arm for policy in policies]
        if all(arm is not None for arm in committed):
            target = marks[next_mark] if next_mark < len(marks) else horizon
            n_slots = target - env.slot
            env.advance(committed, n_slots)
            if record_choices:
                choices_log.extend([tuple(committed)] * n_slots)
        else:
            slot = env.slot
            choices = [policy.act(slot) for policy in policies]
            observation = env.step(choices)
            for policy, reward in zip(policies, observation.rewards):
                policy.observe(reward)
            if record_choices:
                choices_log.append(tuple(choices))
        while next_mark < len(marks) and marks[next_mark] <= env.slot:
            env.checkpoint()
            next_mark += 1

    return PlayResult(env=env, policies=list(policies), choices=choices_log)


def player_seed(master_seed: int, run_id: int, player: int) -> List[int]:
    """Independent substream key of one player in one run"""
    return [master_seed, run_id, player + 1]


def environment_seed(master_seed: int, run_id: int) -> int:
    return int(np.random.SeedSequence([master_seed, run_id]).generate_state(1)[0])


def run_full_algorithm(means: Union[ArmMeans, Sequence[float]], M: int, T: int, master_seed: int,
                       run_id: int = 0, checkpoint_slots: Sequence[int] = (),
                       record_choices: bool = False) -> PlayResult:
    """
    M ProposedPlayers against a fresh environment for T slots

    Returns:
        PlayResult; with record_choices the 1-based choices of every slot
    """
    if T < 1:
        raise ValueError(f"Horizon must be at least 1, got T={T}")
    env = create_environment(means, M, environment_seed(master_seed, run_id))
    players = [ProposedPlayer(name=f"run{run_id}/player{m + 1}") for m in range(M)]
    for m, player in enumerate(players):
        player.reset(player_seed(master_seed, run_id, m), env.K, T)
    logger.debug(f"Run {run_id}: K={env.K}, M={M}, T={T}, delta={players[0].state.delta:.3e}")
    return play(env, players, T, checkpoint_slots, record_choices)
