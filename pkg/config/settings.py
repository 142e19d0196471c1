import os
import logging
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

# Load environment variables from .env file
load_dotenv()

class ConfigurationError(Exception):
    """Raised when configuration is invalid or incomplete"""
    pass

EXECUTOR_KINDS = ("thread", "process")


def _env_int(name: str, default: int, errors: list) -> int:
    raw = os.getenv(name, str(default)).strip()
    try:
        return int(raw)
    except ValueError:
        errors.append(f"{name} must be a valid integer, got '{raw}'")
        return default


def validate_simulation_config():
    """Validate MMAB_* environment defaults and return the simulation config dict"""
    errors = []
    warnings = []

    runs = _env_int("MMAB_RUNS", 20, errors)
    if runs < 1:
        errors.append(f"MMAB_RUNS must be >= 1, got {runs}")
    elif runs < 2:
        warnings.append("MMAB_RUNS=1 - confidence intervals will not be available")

    checkpoints = _env_int("MMAB_CHECKPOINTS", 500, errors)
    if checkpoints < 2:
        errors.append(f"MMAB_CHECKPOINTS must be >= 2, got {checkpoints}")

    workers = _env_int("MMAB_WORKERS", os.cpu_count() or 1, errors)
    if workers < 1:
        errors.append(f"MMAB_WORKERS must be >= 1, got {workers}")

    executor = os.getenv("MMAB_EXECUTOR", "thread").strip().lower()
    if executor not in EXECUTOR_KINDS:
        errors.append(f"MMAB_EXECUTOR must be one of {EXECUTOR_KINDS}, got '{executor}'")

    chunk = _env_int("MMAB_REWARD_CHUNK", 4096, errors)
    if chunk < 1:
        errors.append(f"MMAB_REWARD_CHUNK must be >= 1, got {chunk}")

    master_seed = _env_int("MMAB_SEED", 0, errors)

    # Log results
    if errors:
        error_msg = "Simulation configuration validation failed:\n" + "\n".join(f"  - {err}" for err in errors)
        logger.error(error_msg)
        raise ConfigurationError(error_msg)

    if warnings:
        warning_msg = "Simulation configuration warnings:\n" + "\n".join(f"  - {warn}" for warn in warnings)
        logger.warning(warning_msg)

    return {
        "runs": runs,
        "checkpoints": checkpoints,
        "workers": workers,
        "executor": executor,
        "reward_chunk": chunk,
        "master_seed": master_seed,
    }

# Validate configuration on import
try:
    simulation_config = validate_simulation_config()
except ConfigurationError as e:
    logger.error(f"Simulation defaults invalid: {e}")
    logger.info("Falling back to built-in simulation defaults")
    simulation_config = {
        "runs": 20,
        "checkpoints": 500,
        "workers": os.cpu_count() or 1,
        "executor": "thread",
        "reward_chunk": 4096,
        "master_seed": 0,
    }

# Logging configuration for the simulate entry point
logging_config = {
    "level": os.getenv("MMAB_LOG_LEVEL", "INFO").strip().upper(),
    "log_to_file": os.getenv("MMAB_LOG_TO_FILE", "False").lower() == "true",
    "log_dir": os.getenv("MMAB_LOG_DIR", "logs"),
}

# Output defaults for experiment artifacts
output_config = {
    "output_path": os.getenv("MMAB_OUTPUT_PATH", "results"),
    "plot_file": os.getenv("MMAB_PLOT_FILE", "regret.png"),
}
