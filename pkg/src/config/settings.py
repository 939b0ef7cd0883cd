"""
Environment-driven settings

Values come from the process environment, optionally seeded from a .env file
at the repository root. CLI flags and sweep config files override them.
"""

import os
import logging
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

load_dotenv()

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


@dataclass(frozen=True)
class Settings:
    """Process-wide defaults"""

    log_level: str = "INFO"
    workers: int = 1
    max_attempts: int = 20
    tolerance: float = 0.05
    progress: bool = True


def _env_bool(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() not in ("0", "false", "no", "off", "")


def get_settings() -> Settings:
    """
    Read settings from the environment

    Returns:
        Settings with LINTAGLAB_* overrides applied
    """
    return Settings(
        log_level=os.getenv("LINTAGLAB_LOG_LEVEL", "INFO").upper(),
        workers=int(os.getenv("LINTAGLAB_WORKERS", 1)),
        max_attempts=int(os.getenv("LINTAGLAB_MAX_ATTEMPTS", 20)),
        tolerance=float(os.getenv("LINTAGLAB_TOLERANCE", 0.05)),
        progress=_env_bool("LINTAGLAB_PROGRESS", True),
    )


def setup_logging(level: Optional[str] = None):
    """
    Configure root logging for entry points

    Args:
        level: Level name; defaults to LINTAGLAB_LOG_LEVEL
    """
    level_name = (level or get_settings().log_level).upper()
    logging.basicConfig(
        level=getattr(logging, level_name, logging.INFO),
        format=LOG_FORMAT
    )
