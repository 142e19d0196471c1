"""Subroutine building blocks for sending, receiving and idling on the good arm"""
from typing import List

from signaling import BitMessage, CodecParams, decode_window, encode_schedule
from ..core.data_types import PlayerState, Subroutine


def send_bits(state: PlayerState, msg: BitMessage, params: CodecParams) -> Subroutine[None]:
    for arm in encode_schedule(msg, params):
        yield arm
    state.bits_sent += msg.Q


def receive_bits(state: PlayerState, n_bits: int, k_good: int, tau: int) -> Subroutine[BitMessage]:
    rewards: List[float] = []
    for _ in range(n_bits * tau):
        r = yield k_good
        rewards.append(r)
    state.bits_received += n_bits
    return decode_window(rewards, tau)


def wait(arm: int, n_slots: int) -> Subroutine[None]:
    for _ in range(n_slots):
        yield arm
