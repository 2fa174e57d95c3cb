"""
Engine Configuration for Ellisflux
Handles environment-specific precision, horizon and level settings
"""

import os
import logging
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Optional

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

ENV_PREFIX = "ELLISFLUX_"

PROFILES: Dict[str, Dict[str, Any]] = {
    'development': {
        'precision': 32,
        'levels': 8,
        'horizon': 256,
        'coset_bound': 5,
        'seed': 0,
        'transcendentals': 4,
        'log_level': 'DEBUG',
    },
    'ci': {
        'precision': 32,
        'levels': 8,
        'horizon': 256,
        'coset_bound': 5,
        'seed': 0,
        'transcendentals': 4,
        'log_level': 'INFO',
    },
    'production': {
        'precision': 32,
        'levels': 8,
        'horizon': 256,
        'coset_bound': 5,
        'seed': 0,
        'transcendentals': 4,
        'log_level': 'WARNING',
    },
}


@dataclass(frozen=True)
class EngineConfig:
    """Environment-aware engine configuration

    precision is N (comparison depth), horizon is H (leading-term search
    bound), levels is L (infinite levels of the realization field).
    """

    precision: int = 32
    levels: int = 8
    horizon: int = 256
    coset_bound: int = 5
    seed: int = 0
    transcendentals: int = 4
    log_level: str = 'WARNING'
    environment: str = 'production'

    def __post_init__(self):
        for name in ('precision', 'levels', 'horizon', 'transcendentals'):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if self.coset_bound < 0:
            raise ValueError(f"coset_bound must be non-negative, got {self.coset_bound}")

    @classmethod
    def from_environment(cls, environment: Optional[str] = None) -> "EngineConfig":
        """Build a config from the named profile, then environment overrides"""
        load_dotenv()
        environment = environment or os.getenv(f'{ENV_PREFIX}ENV', 'production')
        settings = dict(PROFILES.get(environment, PROFILES['production']))

        # Override with environment variables if present
        for key, default in settings.items():
            raw = os.getenv(f'{ENV_PREFIX}{key.upper()}')
            if raw is None:
                continue
            settings[key] = raw if isinstance(default, str) else int(raw)

        logger.debug(f"Engine config for '{environment}': {settings}")
        return cls(environment=environment, **settings)

    def with_overrides(self, **overrides: Any) -> "EngineConfig":
        """Return a copy with the non-None overrides applied (CLI flags)"""
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        applied = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **applied) if applied else self

    def echo(self) -> Dict[str, int]:
        """Configuration echo carried by reports"""
        return {
            'precision': self.precision,
            'levels': self.levels,
            'horizon': self.horizon,
            'coset_bound': self.coset_bound,
            'seed': self.seed,
        }


def get_engine_config(environment: Optional[str] = None, **overrides: Any) -> EngineConfig:
    """Get engine configuration for current environment"""
    return EngineConfig.from_environment(environment).with_overrides(**overrides)
