# SPDX-License-Identifier: MIT
"""Common constant"""

import os
from typing import Any

# Default constant values
_DEFAULT_CONSTANTS: dict[str, Any] = {
    "RESOURCE_DIR": os.path.join(os.path.dirname(os.path.abspath(__file__)), "resource"),
    "ENV": "DISCORDLIB_ENV",
    "CONFIG_FILE": "DISCORDLIB_CONFIG_FILE",
    "CONFIG_FILE_NAME": "config.yml",
    "THREADS_ENV": "DISCORD_DYN_THREADS",
    "DIM_QUBIT": 2,
    "DIM_QUTRIT": 3,
    "GAMMA_FLOOR": 1e-9,
    "FLOAT_FORMAT": "%.12g",
    "TRAJECTORY_COLUMNS": (
        "gamma_t",
        "negativity",
        "mutual_info",
        "classical",
        "discord",
        "theta_opt",
        "phi_opt",
    ),
    "SWEEP_COLUMNS": (
        "p",
        "sudden_death_time",
        "discord_class",
        "asymptotic_discord",
    ),
}

RESOURCE_DIR: str = _DEFAULT_CONSTANTS["RESOURCE_DIR"]
ENV: str = _DEFAULT_CONSTANTS["ENV"]
CONFIG_FILE: str = _DEFAULT_CONSTANTS["CONFIG_FILE"]
CONFIG_FILE_NAME: str = _DEFAULT_CONSTANTS["CONFIG_FILE_NAME"]
THREADS_ENV: str = _DEFAULT_CONSTANTS["THREADS_ENV"]
DIM_QUBIT: int = _DEFAULT_CONSTANTS["DIM_QUBIT"]
DIM_QUTRIT: int = _DEFAULT_CONSTANTS["DIM_QUTRIT"]
GAMMA_FLOOR: float = _DEFAULT_CONSTANTS["GAMMA_FLOOR"]
FLOAT_FORMAT: str = _DEFAULT_CONSTANTS["FLOAT_FORMAT"]
TRAJECTORY_COLUMNS: tuple[str, ...] = _DEFAULT_CONSTANTS["TRAJECTORY_COLUMNS"]
SWEEP_COLUMNS: tuple[str, ...] = _DEFAULT_CONSTANTS["SWEEP_COLUMNS"]
