#!/usr/bin/env python3
"""
Tests for experiment config loading and the command line:
1. Config files, overrides and environment defaults
2. Exit codes for success, configuration errors and I/O errors
3. Sweeps over the worst-arm mean
"""
import pytest

from config.settings import ConfigurationError, simulation_config
from harness import PolicyKind, load_experiment_config
from harness.cli import EXIT_CONFIG_ERROR, EXIT_IO_ERROR, EXIT_OK, main


def _write(path, text):
    path.write_text(text)
    return path


def test_load_config_file(tmp_path):
    path = _write(tmp_path / "exp.env", "K=4\nM=2\nT=1000\nmeans=0.9, 0.5,0.3,0.1\npolicy=oracle\nruns=3\n")
    config = load_experiment_config(path)
    assert (config.K, config.M, config.T, config.runs) == (4, 2, 1000, 3)
    assert config.means == (0.9, 0.5, 0.3, 0.1)
    assert config.policy == PolicyKind.ORACLE


def test_overrides_win_over_file(tmp_path):
    path = _write(tmp_path / "exp.env", "K=5\nM=2\nT=1000\nmu_top=1.0\nmu_bottom=0.01\nruns=3\n")
    config = load_experiment_config(path, {'runs': 7, 'M': 3, 'policy': 'uniform', 'T': None})
    assert config.runs == 7 and config.M == 3
    assert config.T == 1000, "None overrides are ignored"
    assert config.policy == PolicyKind.UNIFORM


def test_file_wins_over_environment_defaults(tmp_path, monkeypatch):
    monkeypatch.setitem(simulation_config, 'runs', 9)
    monkeypatch.setitem(simulation_config, 'checkpoints', 40)
    path = _write(tmp_path / "exp.env", "K=3\nM=1\nT=100\nmeans=0.5,0.4,0.1\ncheckpoints=25\n")
    config = load_experiment_config(path)
    assert config.runs == 9, "Unset keys fall back to MMAB_* defaults"
    assert config.checkpoints == 25


def test_means_alone_sets_K():
    config = load_experiment_config(None, {'M': 1, 'T': 10, 'means': [0.3, 0.2, 0.1]})
    assert config.K == 3


def test_bad_config_values(tmp_path):
    path = _write(tmp_path / "exp.env", "K=five\nM=1\nT=10\nmu_top=1\nmu_bottom=0\ncolour=blue\npolicy=greedy\n")
    with pytest.raises(ConfigurationError) as info:
        load_experiment_config(path)
    message = str(info.value)
    assert "colour" in message and "policy" in message and "K has an invalid value" in message


def test_missing_config_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_experiment_config(tmp_path / "missing.env")
    assert main(['--config', str(tmp_path / "missing.env")]) == EXIT_IO_ERROR


def test_cli_config_error_exit_code(tmp_path):
    code = main(['--K', '3', '--M', '3', '--T', '100', '--mu-top', '1', '--mu-bottom', '0',
                 '--out', str(tmp_path / "out")])
    assert code == EXIT_CONFIG_ERROR
    assert not (tmp_path / "out").exists()


def test_cli_success_writes_all_outputs(tmp_path):
    out = tmp_path / "out"
    path = _write(tmp_path / "exp.env", "K=4\nM=2\nT=2000\nmu_top=0.9\nmu_bottom=0.1\n")
    code = main(['--config', str(path), '--policy', 'oracle', '--runs', '2', '--workers', '1',
                 '--checkpoints', '10', '--out', str(out)])
    assert code == EXIT_OK
    for name in ("runs.csv", "aggregate.csv", "regret.png", "metadata.json"):
        assert (out / name).is_file(), f"{name} missing"
    assert len((out / "aggregate.csv").read_text().strip().splitlines()) == 11


def test_cli_io_error_exit_code(tmp_path):
    blocker = _write(tmp_path / "blocker", "file, not directory")
    code = main(['--K', '3', '--M', '1', '--T', '50', '--means', '0.9,0.5,0.1', '--policy', 'oracle',
                 '--runs', '1', '--workers', '1', '--out', str(blocker)])
    assert code == EXIT_IO_ERROR


def test_cli_mu_bottom_sweep(tmp_path):
    out = tmp_path / "sweep"
    code = main(['--K', '4', '--M', '2', '--T', '1000', '--mu-top', '0.9', '--policy', 'oracle', '--runs', '2',
                 '--workers', '1', '--checkpoints', '10', '--out', str(out), '--sweep-mu-bottom', '0.1,0.01'])
    assert code == EXIT_OK
    for point in ("mu_bottom_0.1", "mu_bottom_0.01"):
        assert (out / point / "aggregate.csv").is_file(), f"{point} outputs missing"
    assert (out / "overlay_regret.png").is_file()


def test_cli_sweep_needs_linear_profile(tmp_path):
    code = main(['--K', '3', '--M', '1', '--T', '50', '--means', '0.9,0.5,0.1', '--policy', 'oracle',
                 '--runs', '1', '--workers', '1', '--out', str(tmp_path / "out"), '--sweep-mu-bottom', '0.1'])
    assert code == EXIT_CONFIG_ERROR
