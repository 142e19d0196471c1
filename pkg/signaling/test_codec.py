#!/usr/bin/env python3
"""
Tests for forced-collision signaling:
1. Float / integer quantization
2. Send schedules and window decoding
3. Channel behaviour through the bandit environment
"""
import math

import numpy as np
import pytest

from bandit_env import create_environment
from signaling import (
    BitMessage, CodecError, CodecParams, binary_to_float, binary_to_int,
    decision_bits, decode_window, encode_schedule, float_to_binary,
    int_to_binary, one_bit_miss_probability, quantization_bits
)


def _channel(schedule, k_good, draws=None):
    """Receiver sits on k_good; it sees the draw unless the sender jams it"""
    draws = draws or [1] * len(schedule)
    return [0 if arm == k_good else x for arm, x in zip(schedule, draws)]


def test_float_to_binary_examples():
    assert float_to_binary(0.625, 3).bits == (1, 0, 1)
    assert float_to_binary(0.0, 4).bits == (0, 0, 0, 0)
    assert float_to_binary(1.0, 2).bits == (1, 1), "1.0 saturates to all ones"


def test_float_to_binary_rejects_out_of_range():
    with pytest.raises(CodecError):
        float_to_binary(1.01, 4)
    with pytest.raises(CodecError):
        float_to_binary(-0.2, 4)


def test_binary_to_float_examples():
    assert binary_to_float(BitMessage((1, 0, 1))) == 0.625
    assert binary_to_float(BitMessage((0,) * 6)) == 0.0


def test_quantization_bound_on_grid():
    grid = np.linspace(0.0, 1.0, 1000)
    for Q in range(1, 17):
        for mu in grid:
            decoded = binary_to_float(float_to_binary(float(mu), Q))
            assert decoded <= mu, "Truncation never rounds up"
            assert abs(decoded - mu) <= 2.0 ** -Q, f"Quantization error too large for mu={mu}, Q={Q}"


def test_quantization_bits_match_radius_term():
    # 2^-Q <= 2^(-p/2 - 3) for Q = ceil(p/2 + 3)
    for p in range(1, 30):
        Q = quantization_bits(p)
        assert 2.0 ** -Q <= 2.0 ** (-p / 2 - 3) + 1e-15


def test_int_codec_examples():
    assert int_to_binary(5, 3).bits == (1, 0, 1)
    assert int_to_binary(0, 2).bits == (0, 0)
    with pytest.raises(CodecError):
        int_to_binary(8, 3)
    with pytest.raises(CodecError):
        int_to_binary(-1, 3)


def test_int_codec_is_bijection():
    seen = set()
    for n in range(1 << 8):
        msg = int_to_binary(n, 8)
        assert binary_to_int(msg) == n
        seen.add(msg.bits)
    assert len(seen) == 256, "Distinct integers must map to distinct messages"


def test_decision_bits_cover_counts():
    for n_active in range(1, 40):
        assert (1 << decision_bits(n_active)) > n_active, "Counts 0..n_active must be representable"


def test_codec_params_validation():
    with pytest.raises(CodecError):
        CodecParams(k_good=2, tau=0, Q=3, park_set=(1,))
    with pytest.raises(CodecError):
        CodecParams(k_good=2, tau=1, Q=0, park_set=(1,))
    with pytest.raises(CodecError):
        CodecParams(k_good=2, tau=1, Q=3, park_set=(1, 2))
    params = CodecParams.for_active_arms([4, 2, 0, 3], k_good=2, tau=1, Q=2)
    assert params.park_set == (0, 3, 4)


def test_encode_schedule_examples():
    params = CodecParams(k_good=7, tau=2, Q=1, park_set=(1, 2))
    assert encode_schedule(BitMessage((0,)), params) == [7, 7], "0 bit jams the good arm"
    params = CodecParams(k_good=7, tau=1, Q=1, park_set=(3,))
    assert encode_schedule(BitMessage((1,)), params) == [3]
    params = CodecParams(k_good=7, tau=1, Q=2, park_set=(3,))
    assert encode_schedule(BitMessage((1, 0)), params) == [3, 7]


def test_encode_schedule_parking_rotation():
    params = CodecParams(k_good=0, tau=1, Q=4, park_set=(1, 2, 3))
    # bit q parks on park_set[q mod 3]
    assert encode_schedule(BitMessage((1, 1, 1, 1)), params) == [2, 3, 1, 2]


def test_decode_window_examples():
    assert decode_window([0, 1, 0], tau=3).bits == (1,)
    assert decode_window([0, 0, 0], tau=3).bits == (0,)
    assert decode_window([0, 0, 1, 0, 0, 0], tau=3).bits == (1, 0)


def test_deterministic_channel_is_identity():
    for Q in range(1, 11):
        params = CodecParams(k_good=0, tau=2, Q=Q, park_set=(1, 2))
        for n in range(1 << Q):
            msg = int_to_binary(n, Q)
            rewards = _channel(encode_schedule(msg, params), k_good=0)
            assert decode_window(rewards, params.tau) == msg


def test_zero_bits_always_decode_zero():
    rng = np.random.default_rng(0)
    for Q in range(1, 17):
        params = CodecParams(k_good=3, tau=3, Q=Q, park_set=(0, 1, 2))
        values = range(1 << Q) if Q <= 10 else rng.integers(0, 1 << Q, size=200)
        for n in values:
            msg = int_to_binary(int(n), Q)
            draws = rng.integers(0, 2, size=Q * params.tau).tolist()
            decoded = decode_window(_channel(encode_schedule(msg, params), 3, draws), params.tau)
            for sent, got in zip(msg.bits, decoded.bits):
                if sent == 0:
                    assert got == 0, "A jammed bit can never be read as 1"


def test_channel_through_environment_at_mu_one():
    # arm 1 (index 0 internally) is the good arm with mean 1
    env = create_environment([1.0, 0.5, 0.5], M=2, seed=4)
    params = CodecParams(k_good=1, tau=2, Q=5, park_set=(2, 3))
    for n in range(32):
        msg = int_to_binary(n, 5)
        rewards = []
        for sender_arm in encode_schedule(msg, params):
            obs = env.step([sender_arm, 1])
            rewards.append(obs.rewards[1])
        assert decode_window(rewards, params.tau) == msg


def test_one_bit_miss_probability_through_environment():
    mu, delta = 0.3, 0.05
    tau = math.ceil(math.log(1 / delta) / mu)
    p_miss = one_bit_miss_probability(mu, tau)
    assert p_miss <= delta

    env = create_environment([mu, 0.5, 0.5], M=2, seed=17)
    params = CodecParams(k_good=1, tau=tau, Q=1, park_set=(2,))
    trials = 10_000
    misses = 0
    schedule = encode_schedule(BitMessage((1,)), params)
    for _ in range(trials):
        rewards = [env.step([arm, 1]).rewards[1] for arm in schedule]
        misses += decode_window(rewards, tau).bits[0] == 0
    # alpha = 0.01 two-sided binomial band around (1 - mu)^tau
    band = 2.576 * math.sqrt(trials * p_miss * (1 - p_miss))
    assert abs(misses - trials * p_miss) <= band, f"{misses} misses, expected about {trials * p_miss:.0f}"
    assert misses / trials <= delta
