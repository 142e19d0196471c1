"""
Experiment config files

Flat KEY=value text in the same format as .env files, read with
python-dotenv. Keys are ExperimentConfig field names; explicit means are a
comma-separated list under `means`. Command-line overrides win over the
file, the file wins over MMAB_* environment defaults.
"""
import logging
from dataclasses import fields
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

from dotenv import dotenv_values

from config.settings import ConfigurationError
from .core.data_types import ExperimentConfig, PolicyKind

logger = logging.getLogger(__name__)

INT_KEYS = ('K', 'M', 'T', 'runs', 'master_seed', 'checkpoints', 'workers')
FLOAT_KEYS = ('mu_top', 'mu_bottom')
TEXT_KEYS = ('output_path', 'executor', 'plot_file')
KNOWN_KEYS = {f.name for f in fields(ExperimentConfig)}


def _parse_value(key: str, raw: Any, errors: list) -> Any:
    if raw is None or isinstance(raw, PolicyKind):
        return raw
    if not isinstance(raw, str):
        # Overrides from argparse are already typed
        return tuple(float(mu) for mu in raw) if key == 'means' else raw
    text = raw.strip()
    try:
        if key in INT_KEYS:
            return int(text)
        if key in FLOAT_KEYS:
            return float(text)
        if key == 'means':
            return tuple(float(part) for part in text.split(',') if part.strip())
        if key == 'policy':
            return PolicyKind(text.lower())
        if key == 'executor':
            return text.lower()
        return text
    except ValueError:
        if key == 'policy':
            errors.append(f"policy must be one of {[p.value for p in PolicyKind]}, got '{text}'")
        else:
            errors.append(f"{key} has an invalid value '{text}'")
        return None


def read_config_file(path) -> Dict[str, Optional[str]]:
    """Raw key-value pairs of a config file; a missing file is an I/O error"""
    config_path = Path(path)
    if not config_path.is_file():
        raise FileNotFoundError(f"Config file not found: {config_path}")
    values = dict(dotenv_values(config_path))
    logger.info(f"📄 Loaded {len(values)} keys from {config_path}")
    return values


def load_experiment_config(path=None, overrides: Optional[Mapping[str, Any]] = None) -> ExperimentConfig:
    """
    Build and validate an ExperimentConfig

    Args:
        path: optional config file
        overrides: values that win over the file (None entries are ignored)

    Raises:
        ConfigurationError: unknown keys, unparsable or invalid values
        FileNotFoundError: path given but missing
    """
    errors = []
    merged: Dict[str, Any] = {}
    if path is not None:
        merged.update(read_config_file(path))
    for key, value in (overrides or {}).items():
        if value is not None:
            merged[key] = value

    unknown = sorted(set(merged) - KNOWN_KEYS)
    if unknown:
        errors.append(f"unknown keys {unknown}")

    parsed = {}
    for key, raw in merged.items():
        if key in KNOWN_KEYS:
            value = _parse_value(key, raw, errors)
            if value is not None:
                parsed[key] = value

    for key in ('K', 'M', 'T'):
        if key not in parsed:
            errors.append(f"{key} is required")
    if 'means' in parsed and 'K' not in parsed:
        parsed['K'] = len(parsed['means'])
        errors = [err for err in errors if err != "K is required"]

    if errors:
        raise ConfigurationError("Experiment configuration invalid:\n" +
                                 "\n".join(f"  - {err}" for err in errors))
    return ExperimentConfig(**parsed).validate()
