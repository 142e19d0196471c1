#!/usr/bin/env python3
import sys
import logging
from pathlib import Path

# Add project root to Python path
PROJECT_ROOT = Path(__file__).parent
sys.path.insert(0, str(PROJECT_ROOT))

from config.settings import logging_config  # noqa: E402
from harness.cli import main as cli_main  # noqa: E402


def setup_logging():
    """Setup logging from MMAB_LOG_* settings"""
    log_level = getattr(logging, logging_config['level'], logging.INFO)

    handlers = [logging.StreamHandler(sys.stdout)]

    # Add file handler if enabled
    if logging_config['log_to_file']:
        log_dir = PROJECT_ROOT / logging_config['log_dir']
        log_dir.mkdir(exist_ok=True)
        file_handler = logging.FileHandler(log_dir / 'simulate.log')
        file_handler.setFormatter(logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        ))
        handlers.append(file_handler)

    logging.basicConfig(
        level=log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers
    )
    # Reduce noisy third-party loggers
    logging.getLogger('matplotlib').setLevel(logging.WARNING)
    logging.getLogger('PIL').setLevel(logging.WARNING)


def main():
    """Main entry point"""
    setup_logging()

    logger = logging.getLogger(__name__)
    logger.info("Multi-player bandit simulation starting...")

    try:
        code = cli_main(sys.argv[1:])
    except KeyboardInterrupt:
        logger.info("Simulation interrupted by user")
        code = 130
    except Exception as e:
        logger.error(f"Simulation failed: {e}", exc_info=True)
        code = 1
    sys.exit(code)


if __name__ == '__main__':
    main()
