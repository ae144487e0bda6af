# SPDX-License-Identifier: MIT
"""Registry of the YAML sections and the dataclasses built from them."""

import dataclasses
from collections.abc import Callable
from typing import Any, TypeVar

from discordlib.config.base import BaseConfig
from discordlib.exception import ArgumentErrorCode, ArgumentException

C = TypeVar("C", bound=type[BaseConfig])


class ConfigRegistry:
    """Maps section names to their dataclass configuration types."""

    _sections: dict[str, type[BaseConfig]] = {}

    @classmethod
    def register(cls, section: str, config_type: type[BaseConfig]) -> None:
        """
        Register ``config_type`` as the parser of ``section``.

        Raises:
            ValueError: If the section is taken or the type is not a
                ``BaseConfig`` dataclass.
        """
        if section in cls._sections:
            raise ValueError(f"config section '{section}' is already registered")
        if not (isinstance(config_type, type) and issubclass(config_type, BaseConfig)):
            raise ValueError(f"{config_type!r} does not inherit from BaseConfig")
        if not dataclasses.is_dataclass(config_type):
            raise ValueError(f"{config_type.__name__} must be a dataclass")
        cls._sections[section] = config_type

    @classmethod
    def sections(cls) -> list[str]:
        """Registered section names in registration order."""
        return list(cls._sections)

    @classmethod
    def build(cls, section: str, data: Any) -> BaseConfig:
        """
        Build the configuration of ``section`` from its YAML mapping.

        Missing keys keep their dataclass defaults.

        Raises:
            ArgumentException: INVALID_SETTING when the section is unknown,
                is not a mapping or names fields the dataclass lacks.
        """
        config_type = cls._sections.get(section)
        if config_type is None:
            raise ArgumentException(
                ArgumentErrorCode.INVALID_SETTING, f"unknown config section '{section}'"
            )
        if data is None:
            data = {}
        if not isinstance(data, dict):
            raise ArgumentException(
                ArgumentErrorCode.INVALID_SETTING,
                f"section '{section}' must be a mapping, got {type(data).__name__}",
            )
        known = {f.name for f in dataclasses.fields(config_type) if f.init}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ArgumentException(
                ArgumentErrorCode.INVALID_SETTING,
                f"section '{section}' has unknown keys {unknown}",
                details=unknown,
            )
        return config_type(**data)


def config_class(section: str) -> Callable[[C], C]:
    """
    Register the decorated dataclass as the parser of a YAML section.

    Apply it on top of ``@dataclass``::

        @config_class("optimizer")
        @dataclass(frozen=True)
        class OptimizerConfig(BaseConfig):
            ...
    """

    def register(config_type: C) -> C:
        ConfigRegistry.register(section, config_type)
        return config_type

    return register
