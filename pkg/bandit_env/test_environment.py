#!/usr/bin/env python3
"""
Tests for the multi-player bandit environment:
1. Construction and preconditions
2. Collision zeroing and shared draws
3. Pseudo-regret accounting
4. Determinism and statistical soundness of the reward draws
"""
import math

import pytest

from bandit_env import (
    ArmMeans, BanditSetupError, collision_indicator, create_environment,
    expected_uniform_reward, top_m_sum, uniform_regret_slope
)


def test_create_environment():
    env = create_environment([0.9, 0.1], M=1, seed=7)
    assert env.K == 2, "K should match the number of means"
    assert env.slot == 0, "Fresh environment starts at slot 0"
    assert env.ledger.cumulative == 0.0 and env.ledger.checkpoints == [], "Ledger starts empty"


def test_create_environment_rejects_bad_input():
    with pytest.raises(BanditSetupError):
        create_environment([0.5], M=1, seed=0)
    with pytest.raises(BanditSetupError):
        create_environment([0.5, 0.4], M=2, seed=0)
    with pytest.raises(BanditSetupError):
        create_environment([0.5, 1.2], M=1, seed=0)
    with pytest.raises(BanditSetupError):
        create_environment([0.5, -0.1, 0.3], M=1, seed=0)


def test_step_collision_zeroing():
    env = create_environment([0.4, 0.4, 1.0, 0.2], M=3, seed=1)
    for _ in range(50):
        obs = env.step([1, 1, 3])
        assert obs.rewards[0] == 0 and obs.rewards[1] == 0, "Collided players must get 0"
        assert obs.rewards[2] == 1, "Arm with mean 1 always pays when uncontested"


def test_step_rejects_bad_choices():
    env = create_environment([0.4, 0.4, 1.0], M=2, seed=1)
    with pytest.raises(BanditSetupError):
        env.step([0, 1])
    with pytest.raises(BanditSetupError):
        env.step([1, 4])
    with pytest.raises(BanditSetupError):
        env.step([1])
    assert env.slot == 0, "Rejected steps must not advance time"


def test_oracle_play_has_zero_regret():
    env = create_environment([1.0, 1.0, 1.0, 1.0], M=3, seed=3)
    for _ in range(100):
        obs = env.step([4, 2, 1])
        assert obs.rewards == (1, 1, 1), "All means are 1 so all rewards are 1"
    assert env.ledger.cumulative == 0.0, "Distinct top-M play must have exactly zero regret"

    env = create_environment([0.3, 0.7, 0.1, 0.55], M=2, seed=3)
    for _ in range(100):
        env.step([4, 2])
    assert env.ledger.cumulative == 0.0, "Distinct top-M play must have exactly zero regret"


def test_regret_increment_values():
    env = create_environment([0.9, 0.5, 0.1], M=2, seed=0)
    env.step([1, 1])
    assert env.ledger.cumulative == pytest.approx(1.4), "Full collision loses the whole oracle reward"
    env.step([1, 3])
    assert env.ledger.cumulative == pytest.approx(1.4 + 0.4), "Playing arm 3 instead of 2 loses 0.4"
    env.step([2, 1])
    assert env.ledger.cumulative == pytest.approx(1.8), "Optimal slot adds nothing"


def test_regret_is_monotone_and_bounded():
    env = create_environment([0.8, 0.6, 0.3, 0.2], M=3, seed=11)
    upper = top_m_sum(env.arms, 3)
    previous = 0.0
    patterns = [[1, 2, 3], [1, 1, 1], [4, 3, 2], [2, 2, 4], [1, 2, 4]]
    for i in range(200):
        env.step(patterns[i % len(patterns)])
        increment = env.ledger.cumulative - previous
        assert -1e-12 <= increment <= upper + 1e-12, "Per-slot increment must be within [0, top-M sum]"
        previous = env.ledger.cumulative


def test_shared_draw_for_uncontested_players():
    # A non-collided player gets the slot's draw of its arm, whatever the other players do
    env_a = create_environment([0.5, 0.5, 0.5], M=2, seed=21)
    env_b = create_environment([0.5, 0.5, 0.5], M=2, seed=21)
    for _ in range(500):
        obs_a = env_a.step([1, 2])
        obs_b = env_b.step([1, 3])
        assert obs_a.rewards[0] == obs_b.rewards[0], "Draw of arm 1 must not depend on other arms chosen"


def test_determinism():
    choices = [[1, 2], [2, 2], [3, 1], [2, 3]] * 250
    env_a = create_environment([0.3, 0.6, 0.5], M=2, seed=99)
    env_b = create_environment([0.3, 0.6, 0.5], M=2, seed=99)
    stream_a = [env_a.step(c).rewards for c in choices]
    stream_b = [env_b.step(c).rewards for c in choices]
    assert stream_a == stream_b, "Equal seeds must give identical reward streams"
    assert env_a.ledger.cumulative == env_b.ledger.cumulative


def test_chunk_size_does_not_change_draws():
    env_small = create_environment([0.5, 0.5], M=1, seed=5, chunk_size=16)
    env_small_b = create_environment([0.5, 0.5], M=1, seed=5, chunk_size=16)
    for _ in range(40):
        env_small.step([1])
    env_small_b.advance([1], 40)
    assert env_small.step([2]).rewards == env_small_b.step([2]).rewards, \
        "Fast-forwarding must not shift later draws"


def test_advance_matches_stepwise_regret():
    env_step = create_environment([0.9, 0.5, 0.1], M=2, seed=2)
    env_fast = create_environment([0.9, 0.5, 0.1], M=2, seed=2)
    for _ in range(64):
        env_step.step([1, 3])
    env_fast.advance([1, 3], 64)
    assert env_fast.slot == env_step.slot == 64
    assert env_fast.ledger.cumulative == pytest.approx(env_step.ledger.cumulative)


def test_empirical_mean_within_hoeffding_band():
    env = create_environment([0.6, 0.2], M=1, seed=2024)
    n = 100_000
    total = sum(env.step([1]).rewards[0] for _ in range(n))
    sigma = math.sqrt(0.6 * 0.4 / n)
    assert abs(total / n - 0.6) <= 3 * sigma, "Empirical mean outside the 3-sigma band"


def test_hoeffding_coverage_over_seeds():
    n, alpha = 200, 0.05
    radius = math.sqrt(math.log(2 / alpha) / (2 * n))
    covered = 0
    seeds = 200
    for seed in range(seeds):
        env = create_environment([0.35, 0.9], M=1, seed=seed)
        mean = sum(env.step([1]).rewards[0] for _ in range(n)) / n
        covered += abs(mean - 0.35) <= radius
    assert covered / seeds >= 1 - alpha, f"Coverage {covered / seeds:.3f} below {1 - alpha}"


def test_collision_indicator():
    assert collision_indicator([1, 1, 3], 1)
    assert not collision_indicator([1, 2, 3], 2)
    assert collision_indicator([2, 2, 2], 2)
    assert not collision_indicator([2, 2, 2], 1)


def test_top_m_sum():
    assert top_m_sum([0.9, 0.5, 0.1], 2) == pytest.approx(1.4)
    assert top_m_sum([0.3, 0.3, 0.3], 3) == pytest.approx(0.9)
    assert top_m_sum([0.3, 0.7], 0) == 0
    with pytest.raises(BanditSetupError):
        top_m_sum([0.3, 0.7], 3)


def test_expected_uniform_reward():
    assert expected_uniform_reward([0.8, 0.1], M=2, k=1) == pytest.approx(0.4)
    assert expected_uniform_reward([0.8, 0.33, 0.1], M=1, k=2) == pytest.approx(0.33)
    means = [1.0] + [0.5] * 9
    assert expected_uniform_reward(means, M=5, k=1) == pytest.approx(0.6561)


def test_uniform_regret_slope_closed_form():
    means = [1.0, 0.5, 0.0]
    # top-2 sum 1.5; each player collects mean(mu) * (2/3) = 0.5 * 2/3
    assert uniform_regret_slope(means, 2) == pytest.approx(1.5 - 2 * 0.5 * (2 / 3))


def test_arm_means_accessors():
    arms = ArmMeans([0.2, 0.9, 0.5])
    assert arms.sorted_desc() == (0.9, 0.5, 0.2)
    assert arms.top_arms(2) == [2, 3]
    assert arms[2] == 0.9
