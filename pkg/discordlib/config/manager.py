# SPDX-License-Identifier: MIT
"""Process-wide access to the typed configuration sections."""

import os
from pathlib import Path
from typing import Any, TypeVar

from discordlib import constants as constant
from discordlib.config import utils as config_util
from discordlib.config._dynamics_config import DynamicsConfig
from discordlib.config._log_config import LogConfig
from discordlib.config._numeric_config import NumericConfig
from discordlib.config._optimizer_config import OptimizerConfig
from discordlib.config.base import BaseConfig
from discordlib.config.loader import ConfigLoader
from discordlib.config.registry import ConfigRegistry

C = TypeVar("C", bound=BaseConfig)


class ConfigManager:
    """Loads the YAML sections once and hands out their typed instances."""

    _sources: list[Path] = []
    _config_instances: dict[str, BaseConfig] = {}
    _initialized: bool = False

    @staticmethod
    def initialize_global_config(
        env: str | None = None,
        config_file: str | None = None,
        custom_configs: dict[str, Any] | None = None,
    ) -> None:
        """
        Initialize global configuration.

        Args:
            env: Environment overlay name (dev, test, ...)
            config_file: Custom config file path
            custom_configs: Configuration data merged over the loaded files
        """
        if ConfigManager._initialized:
            return

        if env is None:
            env = os.getenv(constant.ENV, "dev")

        if config_file is None:
            config_file = os.getenv(constant.CONFIG_FILE, None)

        config_loader = ConfigLoader(env, config_file)
        config_dict = config_loader.load_config()

        if custom_configs:
            config_dict = config_util.deep_merge_dict(config_dict, custom_configs)

        ConfigManager._config_instances = ConfigManager._build_sections(config_dict)
        ConfigManager._sources = config_loader.sources
        ConfigManager._initialized = True

    @staticmethod
    def _build_sections(config_dict: dict[str, Any]) -> dict[str, BaseConfig]:
        """Build every registered section; unknown sections are an error."""
        unknown = sorted(set(config_dict) - set(ConfigRegistry.sections()))
        if unknown:
            raise ValueError(f"Unknown config sections {unknown}")

        instances: dict[str, BaseConfig] = {}
        for section in ConfigRegistry.sections():
            try:
                instances[section] = ConfigRegistry.build(section, config_dict.get(section))
            except Exception as e:
                raise ValueError(f"Failed to initialize {section} config: {e}") from e
        return instances

    @staticmethod
    def reset() -> None:
        """Drop loaded configuration so the next access initializes again."""
        ConfigManager._sources = []
        ConfigManager._config_instances = {}
        ConfigManager._initialized = False

    @staticmethod
    def get_config_instance(config_name: str) -> BaseConfig | None:
        """
        Get a specific configuration instance, initializing defaults on first use.

        Args:
            config_name: Name of the configuration to retrieve

        Returns:
            BaseConfig: The configuration instance or None if not found
        """
        if not ConfigManager._initialized:
            ConfigManager.initialize_global_config()
        return ConfigManager._config_instances.get(config_name)

    @staticmethod
    def _get_typed(config_name: str, expected: type[C]) -> C:
        instance = ConfigManager.get_config_instance(config_name)
        if not isinstance(instance, expected):
            raise RuntimeError(
                f"{expected.__name__} configuration not properly initialized"
            )
        return instance

    @staticmethod
    def get_log_config() -> LogConfig:
        """
        Get the log configuration.

        Returns:
            LogConfig: The log configuration object
        """
        return ConfigManager._get_typed("log", LogConfig)

    @staticmethod
    def get_numeric_config() -> NumericConfig:
        """
        Get the numeric configuration.

        Returns:
            NumericConfig: Tolerances and eigensolver settings
        """
        return ConfigManager._get_typed("numeric", NumericConfig)

    @staticmethod
    def get_optimizer_config() -> OptimizerConfig:
        """
        Get the optimizer configuration.

        Returns:
            OptimizerConfig: Grid and simplex settings
        """
        return ConfigManager._get_typed("optimizer", OptimizerConfig)

    @staticmethod
    def get_dynamics_config() -> DynamicsConfig:
        """
        Get the dynamics configuration.

        Returns:
            DynamicsConfig: Grid, tolerances and worker settings
        """
        return ConfigManager._get_typed("dynamics", DynamicsConfig)

    @staticmethod
    def is_initialized() -> bool:
        """
        Check if the configuration manager is initialized.

        Returns:
            bool: True if initialized, False otherwise
        """
        return ConfigManager._initialized

    @staticmethod
    def get_sources() -> list[Path]:
        """
        Get the YAML files the configuration was read from.

        Returns:
            Paths of the base file and the overlay, when present
        """
        return list(ConfigManager._sources)
