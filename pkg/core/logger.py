import logging
import sys
from typing import Optional

from core.config import get_settings

def setup_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    logger = logging.getLogger(name)
    logger.setLevel(level or get_settings().logging.level)

    if not logger.handlers:
        # stdout carries command output; diagnostics go to stderr
        handler = logging.StreamHandler(sys.stderr)
        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    return logger

def set_level(level: str) -> None:
    """Change the level of the shared logger at runtime"""
    logger.setLevel(level.upper())

logger = setup_logger("la2")
