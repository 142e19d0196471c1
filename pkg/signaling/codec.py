"""
Forced-collision bit signaling over a shared good arm

A sender transmits a bit during tau slots: for a 0 bit it pulls the good
arm together with the receiver (forcing a collision and zero rewards), for
a 1 bit it parks elsewhere so the receiver can observe a positive reward.
The functions here only build schedules and parse reward windows; pulling
arms is left to the caller.
"""
import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple


class CodecError(ValueError):
    """Raised for values or parameters the codec cannot represent"""
    pass


@dataclass(frozen=True)
class BitMessage:
    """Fixed-size binary message, most significant bit first"""
    bits: Tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise CodecError(f"Bits must be 0 or 1, got {self.bits}")

    @property
    def Q(self) -> int:
        return len(self.bits)

    def __len__(self) -> int:
        return len(self.bits)


@dataclass(frozen=True)
class CodecParams:
    """Channel configuration: good arm, slots per bit, bits per message, parking arms"""
    k_good: int
    tau: int
    Q: int
    park_set: Tuple[int, ...]

    def __post_init__(self):
        if self.tau < 1:
            raise CodecError(f"tau must be >= 1, got {self.tau}")
        if self.Q < 1:
            raise CodecError(f"Q must be >= 1, got {self.Q}")
        if not self.park_set:
            raise CodecError("park_set must contain at least one arm")
        if self.k_good in self.park_set:
            raise CodecError(f"Good arm {self.k_good} cannot be a parking arm")

    @classmethod
    def for_active_arms(cls, active_arms: Sequence[int], k_good: int, tau: int, Q: int) -> 'CodecParams':
        """Parking arms are the active arms other than the good arm, ascending"""
        return cls(k_good=k_good, tau=tau, Q=Q,
                   park_set=tuple(sorted(a for a in active_arms if a != k_good)))


def float_to_binary(mu: float, Q: int) -> BitMessage:
    """
    Truncated binary expansion of mu on Q bits

    mu = 1.0 saturates to all ones, so the error is at most 2^-Q everywhere.
    """
    if Q < 1:
        raise CodecError(f"Q must be >= 1, got {Q}")
    if not 0.0 <= mu <= 1.0:
        raise CodecError(f"Value to encode must lie in [0, 1], got {mu}")
    n = min(math.floor(mu * (1 << Q)), (1 << Q) - 1)
    return int_to_binary(n, Q)


def binary_to_float(bits: BitMessage) -> float:
    """Sum of bits[q] * 2^-q for q = 1..Q"""
    return binary_to_int(bits) / (1 << bits.Q)


def int_to_binary(n: int, Q: int) -> BitMessage:
    """Big-endian encoding of 0 <= n < 2^Q"""
    if Q < 1:
        raise CodecError(f"Q must be >= 1, got {Q}")
    if not 0 <= n < (1 << Q):
        raise CodecError(f"Integer {n} does not fit on {Q} bits")
    return BitMessage(tuple((n >> (Q - 1 - q)) & 1 for q in range(Q)))


def binary_to_int(bits: BitMessage) -> int:
    value = 0
    for b in bits.bits:
        value = (value << 1) | b
    return value


def bit_arm(bit: int, q: int, params: CodecParams) -> int:
    """Arm the sender pulls while sending bit number q (1-based)"""
    if bit:
        return params.park_set[q % len(params.park_set)]
    return params.k_good


def encode_schedule(msg: BitMessage, params: CodecParams) -> List[int]:
    """Sender's arm for each of the tau * Q slots of the message"""
    if msg.Q != params.Q:
        raise CodecError(f"Message has {msg.Q} bits but the channel expects {params.Q}")
    schedule: List[int] = []
    for q, bit in enumerate(msg.bits, start=1):
        schedule.extend([bit_arm(bit, q, params)] * params.tau)
    return schedule


def decode_window(rewards: Sequence[float], tau: int) -> BitMessage:
    """A bit decodes to 1 iff any of its tau rewards on the good arm is positive"""
    if tau < 1:
        raise CodecError(f"tau must be >= 1, got {tau}")
    if len(rewards) % tau:
        raise CodecError(f"Window of {len(rewards)} rewards is not a multiple of tau={tau}")
    return BitMessage(tuple(
        int(any(r > 0 for r in rewards[start:start + tau]))
        for start in range(0, len(rewards), tau)
    ))


def quantization_bits(p: int) -> int:
    """Bits per estimate in exploration phase p: ceil(p/2 + 3)"""
    return math.ceil(p / 2 + 3)


def decision_bits(n_active: int) -> int:
    """Bits per integer when broadcasting decisions over n_active arms (values 0..n_active)"""
    return max(1, math.ceil(math.log2(n_active + 1)))


def one_bit_miss_probability(mu_good: float, tau: int) -> float:
    """Probability that a sent 1 bit is read as 0: (1 - mu)^tau"""
    return (1.0 - mu_good) ** tau
