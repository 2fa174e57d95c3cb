"""Engine configuration"""

from .engine import EngineConfig, get_engine_config

__all__ = ["EngineConfig", "get_engine_config"]
