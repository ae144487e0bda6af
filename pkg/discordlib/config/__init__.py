from ._dynamics_config import DynamicsConfig
from ._log_config import LogConfig
from ._numeric_config import NumericConfig
from ._optimizer_config import OptimizerConfig
from .base import BaseConfig
from .manager import ConfigManager
from .registry import config_class

__all__ = [
    "BaseConfig",
    "ConfigManager",
    "DynamicsConfig",
    "LogConfig",
    "NumericConfig",
    "OptimizerConfig",
    "config_class",
]
