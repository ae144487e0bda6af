# SPDX-License-Identifier: MIT
"""Quantum correlations of qubit-qutrit states under local qutrit dephasing."""

from .config import ConfigManager as ConfigManager
from .correlations import discord as discord
from .correlations import mutual_information as mutual_information
from .correlations import negativity as negativity
from .dynamics import TrajectoryConfig as TrajectoryConfig
from .dynamics import run_trajectory as run_trajectory
from .dynamics import sweep_p as sweep_p
from .states import DensityMatrix as DensityMatrix
from .states import family_state as family_state

__all__ = [
    "ConfigManager",
    "DensityMatrix",
    "TrajectoryConfig",
    "discord",
    "family_state",
    "mutual_information",
    "negativity",
    "run_trajectory",
    "sweep_p",
]
