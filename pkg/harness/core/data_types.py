"""Data structures for experiments and their results"""
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import numpy as np

from config.settings import EXECUTOR_KINDS, ConfigurationError, output_config, simulation_config


class PolicyKind(Enum):
    """Which policy every player of a run follows"""
    PROPOSED = "proposed"
    ORACLE = "oracle"
    UNIFORM = "uniform"


@dataclass
class ExperimentConfig:
    """
    One experiment: K arms, M players, horizon T, repeated over `runs` seeds.

    Means are either explicit or a linear profile from mu_top (arm 1) down
    to mu_bottom (arm K).
    """
    K: int
    M: int
    T: int
    means: Optional[Tuple[float, ...]] = None
    mu_top: Optional[float] = None
    mu_bottom: Optional[float] = None
    runs: int = field(default_factory=lambda: simulation_config['runs'])
    master_seed: int = field(default_factory=lambda: simulation_config['master_seed'])
    policy: PolicyKind = PolicyKind.PROPOSED
    checkpoints: int = field(default_factory=lambda: simulation_config['checkpoints'])
    output_path: str = field(default_factory=lambda: output_config['output_path'])
    workers: int = field(default_factory=lambda: simulation_config['workers'])
    executor: str = field(default_factory=lambda: simulation_config['executor'])
    plot_file: str = field(default_factory=lambda: output_config['plot_file'])

    def validate(self):
        """Collect every problem and raise one ConfigurationError"""
        errors = []
        if self.K < 2:
            errors.append(f"K must be >= 2, got {self.K}")
        if not 1 <= self.M < max(self.K, 2):
            errors.append(f"M must satisfy 1 <= M < K, got M={self.M}, K={self.K}")
        if self.T < 1:
            errors.append(f"T must be >= 1, got {self.T}")
        if self.runs < 1:
            errors.append(f"runs must be >= 1, got {self.runs}")
        if self.checkpoints < 2:
            errors.append(f"checkpoints must be >= 2, got {self.checkpoints}")
        if self.workers < 1:
            errors.append(f"workers must be >= 1, got {self.workers}")
        if self.executor not in EXECUTOR_KINDS:
            errors.append(f"executor must be one of {EXECUTOR_KINDS}, got '{self.executor}'")
        if self.master_seed < 0:
            errors.append(f"master_seed must be non-negative, got {self.master_seed}")

        if self.means is not None:
            if len(self.means) != self.K:
                errors.append(f"means has {len(self.means)} values but K={self.K}")
            if any(not 0.0 <= mu <= 1.0 for mu in self.means):
                errors.append(f"means must lie in [0, 1], got {list(self.means)}")
        elif self.mu_top is None or self.mu_bottom is None:
            errors.append("either means or both mu_top and mu_bottom are required")
        else:
            for name, value in (('mu_top', self.mu_top), ('mu_bottom', self.mu_bottom)):
                if not 0.0 <= value <= 1.0:
                    errors.append(f"{name} must lie in [0, 1], got {value}")
            if self.mu_top < self.mu_bottom:
                errors.append(f"mu_top ({self.mu_top}) must be >= mu_bottom ({self.mu_bottom})")

        if errors:
            raise ConfigurationError("Experiment configuration invalid:\n" +
                                     "\n".join(f"  - {err}" for err in errors))
        return self

    def to_dict(self):
        data = asdict(self)
        data['policy'] = self.policy.value
        data['means'] = None if self.means is None else list(self.means)
        return data


@dataclass
class RunRecord:
    """Cumulative pseudo-regret of one run at each checkpoint"""
    run_id: int
    slots: List[int]
    regret: List[float]
    success: bool
    metrics: Dict = field(default_factory=dict)

    @property
    def final_regret(self) -> float:
        return self.regret[-1] if self.regret else 0.0

    def is_nondecreasing(self) -> bool:
        return all(b >= a for a, b in zip(self.regret, self.regret[1:]))


@dataclass
class AggregateCurve:
    """Mean regret over runs with a normal-approximation 95% interval per checkpoint"""
    slots: np.ndarray
    mean: np.ndarray
    lower95: np.ndarray
    upper95: np.ndarray
    runs: int
    ci_available: bool = True

    def __len__(self) -> int:
        return len(self.slots)

    def half_width(self) -> np.ndarray:
        return self.upper95 - self.mean
