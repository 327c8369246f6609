"""
sptlab settings.

Values come from SPTLAB_* environment variables, optionally seeded from a
.env file next to sptlab.py and then from the working directory (existing
environment variables win, as with python-dotenv's default).
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import List, Mapping, Optional

logger = logging.getLogger(__name__)

ENV_PREFIX = "SPTLAB_"
ORACLE_COST_WARNING_BOUND = 50
_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
_TRUTHY = ("1", "true", "yes", "on")


class ConfigError(ValueError):
    """Raised for a malformed or out-of-range setting."""


def load_env_files(*paths: Path) -> List[Path]:
    """Load .env files with python-dotenv and return the ones loaded.

    Missing files are skipped. Without python-dotenv nothing is loaded and the
    process environment is used as is.
    """
    candidates = list(paths) or [Path(__file__).resolve().parent.parent / ".env",
                                 Path.cwd() / ".env"]
    present = [path for path in candidates if path.is_file()]
    try:
        from dotenv import load_dotenv
    except ImportError:
        if present:
            logger.warning(f"python-dotenv is not installed; ignoring {', '.join(map(str, present))}")
        return []

    for path in present:
        load_dotenv(path, override=False)
        logger.debug(f"Loaded settings from {path}")
    return present


def _int_setting(env: Mapping[str, str], name: str, default: int, minimum: int) -> int:
    raw = env.get(ENV_PREFIX + name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        raise ConfigError(f"{ENV_PREFIX}{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigError(f"{ENV_PREFIX}{name} must be at least {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class LabConfig:
    oracle_bound: int = 40
    identity_order: int = 60
    moment_order: int = 200
    congruence_order: int = 490
    pair_bound: int = 25
    pair_order: int = 80
    log_level: str = "INFO"
    no_color: bool = False

    def __post_init__(self):
        if self.log_level not in _LOG_LEVELS:
            raise ConfigError(f"log level must be one of {', '.join(_LOG_LEVELS)}, got {self.log_level!r}")
        for name in ("oracle_bound", "identity_order", "moment_order",
                     "congruence_order", "pair_bound", "pair_order"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be non-negative")

    @classmethod
    def from_env(cls, env: Optional[Mapping[str, str]] = None,
                 load_dotenv_files: bool = True) -> "LabConfig":
        if env is None:
            if load_dotenv_files:
                load_env_files()
            env = os.environ
        config = cls(
            oracle_bound=_int_setting(env, "ORACLE_BOUND", cls.oracle_bound, 0),
            identity_order=_int_setting(env, "IDENTITY_ORDER", cls.identity_order, 2),
            moment_order=_int_setting(env, "MOMENT_ORDER", cls.moment_order, 1),
            congruence_order=_int_setting(env, "CONGRUENCE_ORDER", cls.congruence_order, 1),
            pair_bound=_int_setting(env, "PAIR_BOUND", cls.pair_bound, 1),
            pair_order=_int_setting(env, "PAIR_ORDER", cls.pair_order, 1),
            log_level=env.get(ENV_PREFIX + "LOG_LEVEL", cls.log_level).strip().upper(),
            no_color=env.get(ENV_PREFIX + "NO_COLOR", "").strip().lower() in _TRUTHY,
        )
        config.warn_if_costly()
        return config

    def warn_if_costly(self) -> None:
        if self.oracle_bound > ORACLE_COST_WARNING_BOUND:
            logger.warning(
                f"Oracle bound {self.oracle_bound} exceeds {ORACLE_COST_WARNING_BOUND}; "
                "partition enumeration grows like p(n) and may take minutes"
            )

    def with_overrides(self, **overrides) -> "LabConfig":
        """Copy with the given fields replaced; None values are ignored."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        updated = replace(self, **changes) if changes else self
        if "oracle_bound" in changes:
            updated.warn_if_costly()
        return updated
