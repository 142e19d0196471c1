"""Regret aggregation over runs"""
import logging
from typing import Sequence

import numpy as np

from .core.data_types import AggregateCurve, RunRecord

logger = logging.getLogger(__name__)

Z_95 = 1.96
CI_METHOD = "normal approximation: mean +/- 1.96 * sample sd / sqrt(runs)"


def aggregate(records: Sequence[RunRecord]) -> AggregateCurve:
    """
    Per-checkpoint mean and 95% interval of cumulative regret

    With a single run only the mean is defined; the interval bounds are NaN
    and ci_available is False.
    """
    if not records:
        raise ValueError("Cannot aggregate an empty list of runs")
    slots = records[0].slots
    for record in records[1:]:
        if record.slots != slots:
            raise ValueError(f"Run {record.run_id} has different checkpoint slots than run {records[0].run_id}")

    values = np.array([record.regret for record in records], dtype=float)
    mean = values.mean(axis=0)
    n = len(records)
    if n < 2:
        logger.warning("Only one run: confidence interval not available")
        nan = np.full_like(mean, np.nan)
        return AggregateCurve(slots=np.array(slots), mean=mean, lower95=nan, upper95=nan.copy(),
                              runs=n, ci_available=False)

    half = Z_95 * values.std(axis=0, ddof=1) / np.sqrt(n)
    return AggregateCurve(slots=np.array(slots), mean=mean, lower95=mean - half, upper95=mean + half, runs=n)
