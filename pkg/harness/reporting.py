"""CSV, plot and metadata output of an experiment"""
import json
import logging
from pathlib import Path
from typing import Dict, List, Mapping, Sequence, Union

import matplotlib

matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402

from protocol import delta_for_horizon  # noqa: E402
from .aggregation import CI_METHOD, Z_95  # noqa: E402
from .core.data_types import AggregateCurve, ExperimentConfig, PolicyKind, RunRecord  # noqa: E402

logger = logging.getLogger(__name__)

FLOAT_FORMAT = '%.17g'
RUN_COLUMNS = ['run_id', 'slot', 'cumulative_regret']
AGGREGATE_COLUMNS = ['slot', 'mean', 'lower95', 'upper95']


class ReportError(OSError):
    """Raised when an output cannot be produced or written"""
    pass


def _write_csv(frame: pd.DataFrame, path) -> Path:
    out = Path(path)
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(out, index=False, float_format=FLOAT_FORMAT)
    except OSError as e:
        raise ReportError(f"Cannot write {out}: {e}") from e
    logger.info(f"💾 Wrote {len(frame)} rows to {out}")
    return out


def emit_runs_csv(records: Sequence[RunRecord], path) -> Path:
    rows = [(record.run_id, slot, regret)
            for record in records for slot, regret in zip(record.slots, record.regret)]
    if not rows:
        raise ReportError("No run checkpoints to write")
    return _write_csv(pd.DataFrame(rows, columns=RUN_COLUMNS), path)


def emit_aggregate_csv(curve: AggregateCurve, path) -> Path:
    if len(curve) == 0:
        raise ReportError("Cannot write an empty aggregate curve")
    frame = pd.DataFrame({
        'slot': np.asarray(curve.slots, dtype=np.int64),
        'mean': curve.mean,
        'lower95': curve.lower95,
        'upper95': curve.upper95,
    }, columns=AGGREGATE_COLUMNS)
    return _write_csv(frame, path)


def emit_csv(data: Union[AggregateCurve, Sequence[RunRecord]], path) -> Path:
    """Aggregate curve or per-run records, picked by type"""
    if isinstance(data, AggregateCurve):
        return emit_aggregate_csv(data, path)
    return emit_runs_csv(data, path)


def load_run_csv(path) -> List[RunRecord]:
    """Read back a per-run CSV at full precision (success flags are not stored)"""
    frame = pd.read_csv(path, float_precision='round_trip')
    if list(frame.columns) != RUN_COLUMNS:
        raise ValueError(f"Unexpected columns {list(frame.columns)} in {path}")
    records = []
    for run_id, group in frame.groupby('run_id', sort=True):
        records.append(RunRecord(run_id=int(run_id), slots=group['slot'].astype(int).tolist(),
                                 regret=group['cumulative_regret'].astype(float).tolist(), success=False))
    return records


def load_aggregate_csv(path) -> AggregateCurve:
    frame = pd.read_csv(path, float_precision='round_trip')
    ci_available = not frame['lower95'].isna().any()
    return AggregateCurve(slots=frame['slot'].to_numpy(), mean=frame['mean'].to_numpy(),
                          lower95=frame['lower95'].to_numpy(), upper95=frame['upper95'].to_numpy(),
                          runs=0, ci_available=ci_available)


def _draw_curve(ax, curve: AggregateCurve, label: str, color: str):
    ax.plot(curve.slots, curve.mean, color=color, label=label)
    if curve.ci_available:
        ax.fill_between(curve.slots, curve.lower95, curve.upper95, color=color, alpha=0.25)


def _save_figure(fig, ax, out: Path, title: str) -> Path:
    try:
        ax.set_xlabel("slot")
        ax.set_ylabel("cumulative regret")
        if title:
            ax.set_title(title)
        ax.legend(loc='upper left')
        ax.grid(alpha=0.3)
        out.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(out, bbox_inches='tight')
    except (OSError, ValueError) as e:
        raise ReportError(f"Cannot write plot {out}: {e}") from e
    finally:
        plt.close(fig)
    logger.info(f"📈 Wrote plot to {out}")
    return out


def emit_plot(curve: AggregateCurve, path, title: str = "") -> Path:
    """Static regret-vs-slot image with the 95% band; format from the file extension"""
    if len(curve) == 0:
        raise ReportError("Cannot plot an empty aggregate curve")
    fig, ax = plt.subplots(figsize=(7, 4.5))
    band = " (95% CI shaded)" if curve.ci_available else ""
    _draw_curve(ax, curve, f"mean over {curve.runs} runs{band}", 'tab:blue')
    return _save_figure(fig, ax, Path(path), title)


def emit_overlay_plot(curves: Mapping[str, AggregateCurve], path, title: str = "") -> Path:
    """Several labelled curves on one figure, e.g. one per worst-arm mean"""
    if not curves or any(len(curve) == 0 for curve in curves.values()):
        raise ReportError("Cannot plot an empty set of curves")
    fig, ax = plt.subplots(figsize=(7, 4.5))
    colors = plt.rcParams['axes.prop_cycle'].by_key()['color']
    for idx, (label, curve) in enumerate(curves.items()):
        _draw_curve(ax, curve, label, colors[idx % len(colors)])
    return _save_figure(fig, ax, Path(path), title)


def emit_metadata(config: ExperimentConfig, records: Sequence[RunRecord], curve: AggregateCurve, path) -> Path:
    """Config, CI method, delta and per-run outcomes as JSON"""
    out = Path(path)
    metadata = {
        'config': config.to_dict(),
        'delta': delta_for_horizon(config.T) if config.policy == PolicyKind.PROPOSED else None,
        'ci_method': CI_METHOD,
        'z': Z_95,
        'ci_available': curve.ci_available,
        'runs': [
            {'run_id': record.run_id, 'success': record.success,
             'final_regret': record.final_regret, 'metrics': record.metrics}
            for record in records
        ],
    }
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(json.dumps(metadata, indent=2, default=str))
    except OSError as e:
        raise ReportError(f"Cannot write {out}: {e}") from e
    logger.info(f"💾 Wrote metadata to {out}")
    return out


def write_report(config: ExperimentConfig, records: Sequence[RunRecord], curve: AggregateCurve) -> Dict[str, Path]:
    """All artifacts of one experiment under config.output_path"""
    base = Path(config.output_path)
    title = f"K={config.K}, M={config.M}, T={config.T}, {config.policy.value}"
    return {
        'runs': emit_runs_csv(records, base / 'runs.csv'),
        'aggregate': emit_aggregate_csv(curve, base / 'aggregate.csv'),
        'plot': emit_plot(curve, base / config.plot_file, title=title),
        'metadata': emit_metadata(config, records, curve, base / 'metadata.json'),
    }
