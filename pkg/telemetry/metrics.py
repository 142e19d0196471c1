"""Per-run protocol metrics"""
from dataclasses import dataclass, field
from datetime import datetime
from typing import Dict, List, Optional, Sequence

from bandit_env import ArmMeans, top_m_sum
from bandit_env.core.interfaces import Policy


@dataclass
class RunMetrics:
    """What happened to every player in one run"""

    run_id: int
    horizon: int = 0

    # Per player, 1-based arms
    assigned_arms: List[Optional[int]] = field(default_factory=list)
    good_arms: List[Optional[int]] = field(default_factory=list)
    mu_lowers: List[Optional[float]] = field(default_factory=list)
    external_ranks: List[Optional[int]] = field(default_factory=list)
    internal_ranks: List[Optional[int]] = field(default_factory=list)
    M_hats: List[Optional[int]] = field(default_factory=list)
    exploration_phases: List[int] = field(default_factory=list)

    # Arms any player dropped as suboptimal during exploration, 1-based
    rejected_arms: List[int] = field(default_factory=list)

    # Slot at which each player entered each stage
    stage_slots: List[Dict[str, int]] = field(default_factory=list)

    # Signaling
    bits_sent: int = 0
    bits_received: int = 0

    # Errors and events
    aborts: List[str] = field(default_factory=list)
    success: bool = False

    session_start: datetime = field(default_factory=datetime.now)

    @classmethod
    def from_policies(cls, run_id: int, policies: Sequence[Policy], means: ArmMeans, horizon: int) -> 'RunMetrics':
        """Collect metrics from the policies after a run; policies without protocol state only report their arm"""
        metrics = cls(run_id=run_id, horizon=horizon)
        for policy in policies:
            state = getattr(policy, 'state', None)
            if state is None:
                metrics.assigned_arms.append(policy.committed_arm)
                continue
            to_arm = (lambda a: None if a is None else a + 1)
            metrics.assigned_arms.append(to_arm(state.assigned_arm))
            metrics.good_arms.append(to_arm(state.good_arm))
            metrics.mu_lowers.append(state.mu_lower)
            metrics.external_ranks.append(state.external_rank)
            metrics.internal_ranks.append(state.internal_rank)
            metrics.M_hats.append(state.M_hat)
            metrics.exploration_phases.append(state.phase if state.internal_rank is not None else 0)
            metrics.stage_slots.append({stage: slot for stage, slot in state.stage_log})
            metrics.rejected_arms = sorted(set(metrics.rejected_arms) | {k + 1 for k in state.rejected_arms})
            metrics.bits_sent += state.bits_sent
            metrics.bits_received += state.bits_received
            if state.abort_reason:
                metrics.aborts.append(state.abort_reason)
        metrics.success = assignment_is_optimal(metrics.assigned_arms, means) and not metrics.aborts
        return metrics

    def exit_slot(self, stage: str) -> Optional[int]:
        """Latest slot at which a player entered `stage`, None if some player never did"""
        slots = [entry.get(stage) for entry in self.stage_slots]
        if not slots or any(slot is None for slot in slots):
            return None
        return max(slots)

    def to_dict(self) -> dict:
        return {
            'run_id': self.run_id,
            'horizon': self.horizon,
            'success': self.success,
            'assigned_arms': self.assigned_arms,
            'good_arms': self.good_arms,
            'mu_lowers': self.mu_lowers,
            'external_ranks': self.external_ranks,
            'internal_ranks': self.internal_ranks,
            'M_hats': self.M_hats,
            'exploration_phases': self.exploration_phases,
            'rejected_arms': self.rejected_arms,
            'stage_slots': self.stage_slots,
            'bits_sent': self.bits_sent,
            'bits_received': self.bits_received,
            'aborts': self.aborts,
            'session_duration_s': (datetime.now() - self.session_start).total_seconds()
        }


def assignment_is_optimal(arms: Sequence[Optional[int]], means: ArmMeans) -> bool:
    """Distinct assigned arms whose means add up to the top-M sum"""
    if not arms or any(arm is None for arm in arms) or len(set(arms)) != len(arms):
        return False
    collected = sorted((means[arm] for arm in arms), reverse=True)
    return sum(collected) == top_m_sum(means, len(arms))
