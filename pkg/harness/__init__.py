"""Experiment harness: configs, seeded runs, aggregation and reports"""
from .core import ExperimentConfig, PolicyKind, RunRecord, AggregateCurve
from .config_loader import load_experiment_config
from .experiment import linear_means, resolve_means, checkpoint_slots, run_single, run_experiment
from .aggregation import aggregate
from .reporting import (
    ReportError, emit_csv, emit_runs_csv, emit_aggregate_csv, emit_plot, emit_overlay_plot, emit_metadata,
    load_run_csv, load_aggregate_csv, write_report
)

__all__ = [
    'ExperimentConfig',
    'PolicyKind',
    'RunRecord',
    'AggregateCurve',
    'load_experiment_config',
    'linear_means',
    'resolve_means',
    'checkpoint_slots',
    'run_single',
    'run_experiment',
    'aggregate',
    'ReportError',
    'emit_csv',
    'emit_runs_csv',
    'emit_aggregate_csv',
    'emit_plot',
    'emit_overlay_plot',
    'emit_metadata',
    'load_run_csv',
    'load_aggregate_csv',
    'write_report'
]
