"""
Runtime settings read from environment variables.
"""
import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional

from src.errors import ConfigError

DEFAULT_ORACLE_MAX_BLOCKS = 16

_TRUE = {'1', 'true', 'yes', 'on'}
_FALSE = {'0', 'false', 'no', 'off'}


@dataclass(frozen=True)
class Settings:
    """
    Settings for logging, metrics and verification cost limits.

    Attributes:
        log_level: Root log level name
        log_json: Whether log lines are JSON
        oracle_max_blocks: Largest b1 for which the characteristic polynomial oracle runs
        metrics_file: Prometheus textfile written after each command, if set
    """
    log_level: str = 'WARNING'
    log_json: bool = True
    oracle_max_blocks: int = DEFAULT_ORACLE_MAX_BLOCKS
    metrics_file: Optional[str] = None

    def __post_init__(self) -> None:
        if self.oracle_max_blocks < 0:
            raise ConfigError(f"oracle_max_blocks must be non-negative, got {self.oracle_max_blocks}")

    def with_overrides(self, **overrides) -> 'Settings':
        """Return a copy with every override that is not None applied."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def _parse_bool(name: str, raw: str) -> bool:
    value = raw.strip().lower()
    if value in _TRUE:
        return True
    if value in _FALSE:
        return False
    raise ConfigError(f"{name} must be a boolean, got '{raw}'")


def _parse_int(name: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got '{raw}'") from None


def get_settings(environ: Optional[Mapping[str, str]] = None) -> Settings:
    """
    Read settings from the environment.

    Environment variables:
        LOG_LEVEL: Root log level (default: WARNING)
        DESIGN_SPECTRA_LOG_JSON: JSON log lines (default: true)
        DESIGN_SPECTRA_ORACLE_MAX_BLOCKS: Oracle size gate (default: 16)
        DESIGN_SPECTRA_METRICS_FILE: Prometheus textfile path (default: unset)

    Args:
        environ: Mapping to read instead of os.environ

    Returns:
        Settings instance

    Raises:
        ConfigError: If a value cannot be parsed
    """
    env = os.environ if environ is None else environ
    return Settings(
        log_level=env.get('LOG_LEVEL', 'WARNING').upper(),
        log_json=_parse_bool('DESIGN_SPECTRA_LOG_JSON', env.get('DESIGN_SPECTRA_LOG_JSON', 'true')),
        oracle_max_blocks=_parse_int(
            'DESIGN_SPECTRA_ORACLE_MAX_BLOCKS',
            env.get('DESIGN_SPECTRA_ORACLE_MAX_BLOCKS', str(DEFAULT_ORACLE_MAX_BLOCKS))
        ),
        metrics_file=env.get('DESIGN_SPECTRA_METRICS_FILE') or None
    )
