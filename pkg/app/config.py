"""
Configuration module for the Grundy toolkit.
Loads environment variables (optionally from a .env file) and exposes the
size caps of the exact solvers and oracles.
"""

import logging
import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

from app.errors import ConfigError

# Load environment variables from .env file
load_dotenv()


class Limits(BaseModel):
    """Size caps for the exponential-time procedures."""

    model_config = ConfigDict(frozen=True)

    max_exact_n: int = Field(12, ge=1, description="grundy_number_exact vertex cap")
    max_orderings_n: int = Field(9, ge=1, description="ordering oracle vertex cap")
    max_colorings_n: int = Field(6, ge=1, description="coloring oracle vertex cap")
    max_eds_edges: int = Field(24, ge=1, description="exact EDS / min maximal matching edge cap")
    max_mis_n: int = Field(24, ge=1, description="independent set oracle vertex cap")
    max_brute_n: int = Field(10, ge=1, description="brute-force extended clique / chromatic cap")
    max_enum_n: int = Field(7, ge=1, description="exhaustive enumeration cap")
    gen_retries: int = Field(100000, ge=1, description="rejection sampling retries")
    workers: int = Field(1, ge=1, description="default worker count for verify")


_ENV_KEYS = {
    "max_exact_n": "GRUNDY_MAX_EXACT_N",
    "max_orderings_n": "GRUNDY_MAX_ORDERINGS_N",
    "max_colorings_n": "GRUNDY_MAX_COLORINGS_N",
    "max_eds_edges": "GRUNDY_MAX_EDS_EDGES",
    "max_mis_n": "GRUNDY_MAX_MIS_N",
    "max_brute_n": "GRUNDY_MAX_BRUTE_N",
    "max_enum_n": "GRUNDY_MAX_ENUM_N",
    "gen_retries": "GRUNDY_GEN_RETRIES",
    "workers": "GRUNDY_WORKERS",
}

_limits: Optional[Limits] = None


def _read_int(key: str) -> Optional[int]:
    raw = os.getenv(key)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigError(f"{key} must be at least 1, got {value}")
    return value


def get_limits() -> Limits:
    """Get or create the limits singleton from the environment."""
    global _limits
    if _limits is None:
        overrides = {}
        for field, key in _ENV_KEYS.items():
            value = _read_int(key)
            if value is not None:
                overrides[field] = value
        _limits = Limits(**overrides)
    return _limits


def reset_limits() -> None:
    """Forget the cached limits so the next get_limits() re-reads the environment."""
    global _limits
    _limits = None


def resolve_limit(explicit: Optional[int], field: str) -> int:
    """An explicit per-call limit wins over the configured one."""
    if explicit is not None:
        return explicit
    return getattr(get_limits(), field)


def configure_logging(verbosity: int = 0) -> None:
    """
    Install a stream handler on the `app` logger.

    The base level comes from GRUNDY_LOG_LEVEL (default WARNING); each
    verbosity step lowers it (1 -> INFO, 2 -> DEBUG).
    """
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        name = os.getenv("GRUNDY_LOG_LEVEL", "WARNING").upper()
        level = logging.getLevelName(name)
        if not isinstance(level, int):
            raise ConfigError(f"GRUNDY_LOG_LEVEL: unknown level {name!r}")

    logger = logging.getLogger("app")
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter("%(levelname)s %(message)s"))
        logger.addHandler(handler)
    logger.setLevel(level)
