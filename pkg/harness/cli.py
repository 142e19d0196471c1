"""Command-line entry point: simulate --config <path> [overrides]"""
import argparse
import logging
from dataclasses import replace
from pathlib import Path
from typing import Dict, List, Optional

from config.settings import EXECUTOR_KINDS, ConfigurationError
from .aggregation import aggregate
from .config_loader import load_experiment_config
from .core.data_types import AggregateCurve, ExperimentConfig, PolicyKind
from .experiment import run_experiment
from .reporting import emit_overlay_plot, write_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_IO_ERROR = 2


def _means_list(text: str) -> List[float]:
    try:
        return [float(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"means must be comma-separated numbers, got '{text}'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='simulate',
        description='Multi-player bandit experiments without collision sensing')
    parser.add_argument('--config', help='flat KEY=value experiment file')
    parser.add_argument('--K', type=int, help='number of arms')
    parser.add_argument('--M', type=int, help='number of players')
    parser.add_argument('--T', type=int, help='horizon in slots')
    parser.add_argument('--runs', type=int, help='independent runs')
    parser.add_argument('--seed', dest='master_seed', type=int, help='master seed')
    parser.add_argument('--policy', choices=[p.value for p in PolicyKind])
    parser.add_argument('--mu-top', dest='mu_top', type=float, help='mean of arm 1 in a linear profile')
    parser.add_argument('--mu-bottom', dest='mu_bottom', type=float, help='mean of arm K in a linear profile')
    parser.add_argument('--means', type=_means_list, help='explicit comma-separated means')
    parser.add_argument('--checkpoints', type=int, help='regret checkpoints per run')
    parser.add_argument('--workers', type=int, help='parallel workers')
    parser.add_argument('--executor', choices=EXECUTOR_KINDS)
    parser.add_argument('--out', dest='output_path', help='output directory')
    parser.add_argument('--sweep-mu-bottom', dest='sweep_mu_bottom', type=_means_list,
                        help='comma-separated worst-arm means; one experiment each plus an overlay plot')
    return parser


def _run_and_report(config: ExperimentConfig) -> AggregateCurve:
    records = run_experiment(config)
    curve = aggregate(records)
    write_report(config, records, curve)
    return curve


def _run_sweep(config: ExperimentConfig, mu_bottoms: List[float]) -> AggregateCurve:
    """One experiment per worst-arm mean, each in its own directory, plus an overlay of all curves"""
    if config.means is not None:
        raise ConfigurationError("--sweep-mu-bottom needs a linear profile (mu_top/mu_bottom), not explicit means")
    base = Path(config.output_path)
    curves: Dict[str, AggregateCurve] = {}
    for mu_bottom in mu_bottoms:
        sub = replace(config, mu_bottom=mu_bottom, output_path=str(base / f"mu_bottom_{mu_bottom:g}")).validate()
        logger.info(f"Sweep point mu_bottom={mu_bottom:g}")
        curve = _run_and_report(sub)
        curves[f"mu_K = {mu_bottom:g}"] = curve
    title = f"K={config.K}, M={config.M}, T={config.T}, {config.policy.value}"
    emit_overlay_plot(curves, base / f"overlay_{config.plot_file}", title=title)
    return curve


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    overrides = {key: value for key, value in vars(args).items() if key not in ('config', 'sweep_mu_bottom')}
    if args.sweep_mu_bottom and overrides['mu_bottom'] is None and overrides['means'] is None:
        overrides['mu_bottom'] = args.sweep_mu_bottom[0]

    try:
        config = load_experiment_config(args.config, overrides)
    except ConfigurationError as e:
        logger.error(f"❌ {e}")
        return EXIT_CONFIG_ERROR
    except OSError as e:
        logger.error(f"❌ Cannot read config: {e}")
        return EXIT_IO_ERROR

    try:
        if args.sweep_mu_bottom:
            curve = _run_sweep(config, args.sweep_mu_bottom)
        else:
            curve = _run_and_report(config)
    except ConfigurationError as e:
        logger.error(f"❌ {e}")
        return EXIT_CONFIG_ERROR
    except OSError as e:
        logger.error(f"❌ Output failed: {e}")
        return EXIT_IO_ERROR

    final = curve.mean[-1] if len(curve) else 0.0
    logger.info(f"Final mean regret {final:.2f} over {curve.runs} runs; outputs in {config.output_path}")
    return EXIT_OK
