"""
Distributed exploration with elimination through a leader

Active players explore the active arms by sequential hopping offset by their
internal rank. After each phase the followers upload their estimates to the
leader over the good arm, the leader accepts and rejects arms with confidence
intervals, then broadcasts the decisions back. Accepted arms are handed out
to the players with the highest ranks, who leave to exploit them.
"""
import logging
import math
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np

from signaling import (
    CodecParams, binary_to_float, binary_to_int, decision_bits, float_to_binary,
    int_to_binary, quantization_bits
)
from ..core.data_types import Decision, LeaderBook, PlayerState, ProtocolAbort, Stage, Subroutine
from .channel import receive_bits, send_bits, wait

logger = logging.getLogger(__name__)


def pulls_per_arm(p: int, delta: float) -> int:
    """Pulls of every active arm in exploration phase p: 2^p ceil(ln(1/delta))"""
    return 2 ** p * math.ceil(math.log(1 / delta))


def exploration_phase_length(n_arms: int, p: int, delta: float) -> int:
    return n_arms * pulls_per_arm(p, delta)


def confidence_radius(t: int, p: int, delta: float) -> float:
    """sqrt(2 ln(1/delta) / t) + 2^(-p/2 - 3); the second term covers quantization"""
    if t < 1:
        raise ValueError(f"Confidence radius needs at least one pull, got t={t}")
    return math.sqrt(2 * math.log(1 / delta) / t) + 2.0 ** (-p / 2 - 3)


def com_round_bits(n_arms: int, active_players: int, p: int, n_decided: int) -> int:
    """Bits exchanged in one communication round: uploads plus decision broadcasts"""
    followers = active_players - 1
    Qd = decision_bits(n_arms)
    return followers * n_arms * quantization_bits(p) + followers * (2 + n_decided) * Qd


def leader_accept_reject(rho: Mapping[int, float], radius: Mapping[int, float],
                         arms: Sequence[int], active_players: int) -> Tuple[List[int], List[int]]:
    """
    Accept k if its lower bound clears the upper bound of at least |K| - M'
    arms; reject k if at least M' arms have a lower bound above its upper bound.

    Returns:
        (accepted, rejected), both ascending
    """
    n = len(arms)
    lower = {k: rho[k] - radius[k] for k in arms}
    upper = {k: rho[k] + radius[k] for k in arms}
    accepted, rejected = [], []
    for k in sorted(arms):
        dominated = sum(1 for i in arms if lower[k] >= upper[i])
        dominating = sum(1 for i in arms if lower[i] >= upper[k])
        if dominated >= n - active_players:
            accepted.append(k)
        elif dominating >= active_players:
            rejected.append(k)
    return accepted, rejected


def aggregate_book(book: LeaderBook, arms: Sequence[int], p: int, delta: float) -> Tuple[Dict[int, float], Dict[int, float]]:
    """Count-weighted mean over players and the radius of the pooled count, per active arm"""
    rho, radius = {}, {}
    for k in arms:
        total = int(book.counts[k].sum())
        rho[k] = float(np.dot(book.mu_hat[k], book.counts[k]) / total)
        radius[k] = confidence_radius(total, p, delta)
    book.rho, book.radius = rho, radius
    return rho, radius


def apply_decisions(j: int, arms: Sequence[int], active_players: int,
                    accepted: Sequence[int], rejected: Sequence[int], k_good: int) -> Decision:
    """
    Same update on every player. Accepted arms other than the good arm are
    taken by followers in descending rank; the leader takes the last one, or
    the good arm when it was accepted and everybody else is served.
    """
    served = sorted(k for k in accepted if k != k_good)
    assigned = None
    if j == 1:
        if len(served) >= active_players:
            assigned = served[active_players - 1]
        elif k_good in accepted and len(served) == active_players - 1:
            assigned = k_good
    elif active_players - j + 1 <= len(served):
        assigned = served[active_players - j]

    removed = set(served) | set(rejected)
    remaining = [k for k in arms if k not in removed]
    players_left = max(active_players - len(served), 0)
    if assigned is None and players_left > len(remaining):
        raise ProtocolAbort(f"{players_left} active players but only {len(remaining)} active arms", Stage.EXPLORE)
    return Decision(assigned_arm=assigned, active_arms=remaining, active_players=players_left)


def _idle_arm(arms: Sequence[int], k_good: int, j: int) -> int:
    others = [k for k in arms if k != k_good]
    return others[j % len(others)]


def com_leader(state: PlayerState, book: LeaderBook, p: int, E: Sequence[float],
               k_good: int, tau: int) -> Subroutine[Decision]:
    arms = state.active_arms
    M_active = state.active_players
    delta = state.delta
    n_phase = pulls_per_arm(p, delta)

    for k in arms:
        book.mu_hat[k, 0] = E[k]
        book.counts[k, 0] += n_phase

    Q = quantization_bits(p)
    for i in range(2, M_active + 1):
        for k in arms:
            msg = yield from receive_bits(state, Q, k_good, tau)
            book.mu_hat[k, i - 1] = binary_to_float(msg)
            book.counts[k, i - 1] += n_phase

    rho, radius = aggregate_book(book, arms, p, delta)
    accepted, rejected = leader_accept_reject(rho, radius, arms, M_active)
    book.accepted, book.rejected = accepted, rejected
    state.rejected_arms.extend(rejected)
    logger.debug(f"Leader phase {p}: accepted {accepted}, rejected {rejected}")

    if M_active > 1:
        Qd = decision_bits(len(arms))
        params = CodecParams.for_active_arms(arms, k_good, tau, Qd)
        position = {k: idx for idx, k in enumerate(arms)}
        for _ in range(2, M_active + 1):
            yield from send_bits(state, int_to_binary(len(accepted), Qd), params)
            yield from send_bits(state, int_to_binary(len(rejected), Qd), params)
        for _ in range(2, M_active + 1):
            for k in accepted + rejected:
                yield from send_bits(state, int_to_binary(position[k], Qd), params)

    return apply_decisions(1, arms, M_active, accepted, rejected, k_good)


def com_follow(state: PlayerState, p: int, E: Sequence[float], k_good: int, tau: int) -> Subroutine[Decision]:
    arms = state.active_arms
    M_active = state.active_players
    j = state.internal_rank
    idle = _idle_arm(arms, k_good, j)

    Q = quantization_bits(p)
    upload_params = CodecParams.for_active_arms(arms, k_good, tau, Q)
    for i in range(2, M_active + 1):
        if i == j:
            for k in arms:
                yield from send_bits(state, float_to_binary(E[k], Q), upload_params)
        else:
            yield from wait(idle, len(arms) * tau * Q)

    n = len(arms)
    Qd = decision_bits(n)
    n_accepted = n_rejected = 0
    for i in range(2, M_active + 1):
        if i == j:
            n_accepted = binary_to_int((yield from receive_bits(state, Qd, k_good, tau)))
            n_rejected = binary_to_int((yield from receive_bits(state, Qd, k_good, tau)))
        else:
            yield from wait(idle, 2 * tau * Qd)
    if n_accepted + n_rejected > n:
        raise ProtocolAbort(f"Decoded list sizes {n_accepted}+{n_rejected} exceed {n} active arms", Stage.EXPLORE)

    positions: List[int] = []
    for i in range(2, M_active + 1):
        if i == j:
            for _ in range(n_accepted + n_rejected):
                positions.append(binary_to_int((yield from receive_bits(state, Qd, k_good, tau))))
        else:
            yield from wait(idle, tau * Qd * (n_accepted + n_rejected))
    if any(pos >= n for pos in positions) or len(set(positions)) != len(positions):
        raise ProtocolAbort(f"Corrupted decision positions {positions} for {n} active arms", Stage.EXPLORE)

    accepted = sorted(arms[pos] for pos in positions[:n_accepted])
    rejected = sorted(arms[pos] for pos in positions[n_accepted:])
    state.rejected_arms.extend(rejected)
    return apply_decisions(j, arms, M_active, accepted, rejected, k_good)


def com_round(role: str, state: PlayerState, p: int, E: Sequence[float], k_good: int, tau: int,
              book: LeaderBook = None) -> Subroutine[Decision]:
    """Dispatch to the leader or follower side of a communication round"""
    if role == 'leader':
        if book is None:
            raise ValueError("Leader side of a communication round needs a LeaderBook")
        return (yield from com_leader(state, book, p, E, k_good, tau))
    if role == 'follower':
        return (yield from com_follow(state, p, E, k_good, tau))
    raise ValueError(f"Unknown role '{role}'")


def distributed_exploration(state: PlayerState, k_good: int, tau: int) -> Subroutine[int]:
    """
    Explore by phases until this player is assigned an arm.

    Expects state.internal_rank and state.M_hat to be set.

    Returns:
        assigned arm (0-based)
    """
    K, delta, j = state.K, state.delta, state.internal_rank
    if state.M_hat > K:
        raise ProtocolAbort(f"Counted {state.M_hat} players for {K} arms", Stage.EXPLORE)
    state.active_arms = list(range(K))
    state.active_players = state.M_hat
    state.R = [0.0] * K
    state.N = [0] * K
    book = LeaderBook.empty(K, state.M_hat) if state.is_leader else None

    p = 0
    while True:
        p += 1
        state.phase = p
        arms = state.active_arms
        n = len(arms)
        idx = j
        for _ in range(exploration_phase_length(n, p, delta)):
            idx = (idx + 1) % n
            arm = arms[idx]
            r = yield arm
            state.R[arm] += r
            state.N[arm] += 1
        E = [state.R[k] / state.N[k] if state.N[k] else 0.0 for k in range(K)]

        role = 'leader' if state.is_leader else 'follower'
        decision = yield from com_round(role, state, p, E, k_good, tau, book)
        if decision.assigned_arm is not None:
            return decision.assigned_arm
        state.active_arms = decision.active_arms
        state.active_players = decision.active_players
        logger.debug(f"Player j={j} after phase {p}: {len(decision.active_arms)} arms, "
                     f"{decision.active_players} players active")
