"""Seeded multi-run experiments"""
import logging
import time
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from typing import List

from bandit_env import ArmMeans, BanditSetupError, create_environment
from protocol import (
    OraclePlayer, UniformPlayer, environment_seed, play, player_seed, run_full_algorithm
)
from telemetry import RunMetrics
from .core.data_types import ExperimentConfig, PolicyKind, RunRecord

logger = logging.getLogger(__name__)


def linear_means(K: int, mu_top: float, mu_bottom: float) -> ArmMeans:
    """mu_k = mu_top + (k-1)/(K-1) (mu_bottom - mu_top), arm 1 best"""
    if K < 2:
        raise BanditSetupError(f"A linear profile needs K >= 2, got {K}")
    if not (0.0 <= mu_bottom <= mu_top <= 1.0):
        raise BanditSetupError(f"Need 0 <= mu_bottom <= mu_top <= 1, got {mu_top} -> {mu_bottom}")
    step = (mu_bottom - mu_top) / (K - 1)
    return ArmMeans([mu_top + k * step for k in range(K - 1)] + [mu_bottom])


def resolve_means(config: ExperimentConfig) -> ArmMeans:
    if config.means is not None:
        return ArmMeans(config.means)
    return linear_means(config.K, config.mu_top, config.mu_bottom)


def checkpoint_slots(T: int, checkpoints: int) -> List[int]:
    """About `checkpoints` evenly spaced slots ending at T (fewer when T is small)"""
    return sorted({round(T * i / checkpoints) for i in range(1, checkpoints + 1)} - {0})


def run_single(config: ExperimentConfig, run_id: int) -> RunRecord:
    """One run of the configured policy; depends only on (master_seed, run_id, config)"""
    means = resolve_means(config)
    marks = checkpoint_slots(config.T, config.checkpoints)

    if config.policy == PolicyKind.PROPOSED:
        result = run_full_algorithm(means, config.M, config.T, config.master_seed, run_id, marks)
    else:
        env = create_environment(means, config.M, environment_seed(config.master_seed, run_id))
        if config.policy == PolicyKind.ORACLE:
            policies = [OraclePlayer(arm) for arm in means.top_arms(config.M)]
        else:
            policies = [UniformPlayer() for _ in range(config.M)]
        for m, policy in enumerate(policies):
            policy.reset(player_seed(config.master_seed, run_id, m), means.K, config.T)
        result = play(env, policies, config.T, marks)

    metrics = RunMetrics.from_policies(run_id, result.policies, means, config.T)
    slots = [slot for slot, _ in result.env.ledger.checkpoints]
    regret = [value for _, value in result.env.ledger.checkpoints]
    logger.debug(f"Run {run_id}: final regret {regret[-1] if regret else 0.0:.2f}, success={metrics.success}")
    return RunRecord(run_id=run_id, slots=slots, regret=regret, success=metrics.success,
                     metrics=metrics.to_dict())


def run_experiment(config: ExperimentConfig) -> List[RunRecord]:
    """
    Run config.runs independent simulations in parallel

    Records come back ordered by run_id whatever the executor or the
    number of workers.
    """
    config.validate()
    pool_class = ProcessPoolExecutor if config.executor == 'process' else ThreadPoolExecutor
    workers = min(config.workers, config.runs)
    logger.info(f"🚀 Starting experiment: K={config.K}, M={config.M}, T={config.T}, "
                f"policy={config.policy.value}, runs={config.runs}, "
                f"{workers} {config.executor} worker(s)")
    start = time.time()

    run_ids = list(range(config.runs))
    if workers == 1:
        records = [run_single(config, run_id) for run_id in run_ids]
    else:
        with pool_class(max_workers=workers) as pool:
            records = list(pool.map(run_single, [config] * len(run_ids), run_ids))
    records.sort(key=lambda record: record.run_id)

    successes = sum(record.success for record in records)
    logger.info(f"✅ Experiment finished in {time.time() - start:.1f}s: "
                f"{successes}/{len(records)} runs with an optimal assignment")
    return records
