# SPDX-License-Identifier: MIT
"""Configuration module util"""

import os
from typing import Any


def deep_merge_dict(
    base_dict: dict[str, Any], override_dict: dict[str, Any] | None
) -> dict[str, Any]:
    """
    Merge two dictionaries recursively.
    """
    if override_dict is None:
        return base_dict

    for key, value in override_dict.items():
        if (
            isinstance(value, dict)
            and key in base_dict
            and isinstance(base_dict[key], dict)
        ):
            base_dict[key] = deep_merge_dict(base_dict[key], value)
        else:
            base_dict[key] = value
    return base_dict


def env_positive_int(name: str) -> int | None:
    """Read a positive integer from the environment, ignoring malformed values."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        return None
    return value if value > 0 else None
