"""
Engine Configuration
Settings read from the environment, with .env support
"""
import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

logger = logging.getLogger(__name__)


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={raw!r}, using {default}")
        return default


@dataclass(frozen=True)
class Settings:
    version: str
    log_level: str
    cache_dir: Optional[str]
    max_reduction_steps: int
    batch_workers: int
    root_closure_limit: int


def load_settings() -> Settings:
    return Settings(
        version=os.getenv("RATSURF_VERSION", "0.1.0"),
        log_level=os.getenv("RATSURF_LOG_LEVEL", "WARNING").upper(),
        cache_dir=os.getenv("RATSURF_CACHE_DIR") or None,
        max_reduction_steps=_int_env("RATSURF_MAX_REDUCTION_STEPS", 10000),
        batch_workers=max(1, _int_env("RATSURF_BATCH_WORKERS", 4)),
        root_closure_limit=_int_env("RATSURF_ROOT_CLOSURE_LIMIT", 5000),
    )


settings = load_settings()
