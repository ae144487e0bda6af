# SPDX-License-Identifier: MIT
"""Measurement optimizer configuration."""

from dataclasses import dataclass

from discordlib.config.base import BaseConfig
from discordlib.config.registry import config_class
from discordlib.exception import ArgumentErrorCode, ArgumentException


@config_class("optimizer")
@dataclass(frozen=True)
class OptimizerConfig(BaseConfig):
    """
    Settings of the conditional-entropy minimisation over (theta, phi).

    A coarse grid seeds a Nelder-Mead refinement started from the best cell.

    Attributes:
        coarse_grid_theta: Number of theta samples on [0, pi].
        coarse_grid_phi: Number of phi samples on [0, 2 pi].
        refine_iterations: Maximum simplex iterations.
        refine_tolerance: Absolute objective tolerance of the simplex.
    """

    coarse_grid_theta: int = 61
    coarse_grid_phi: int = 121
    refine_iterations: int = 200
    refine_tolerance: float = 1e-10

    def __post_init__(self) -> None:
        if self.coarse_grid_theta < 2 or self.coarse_grid_phi < 2:
            raise ArgumentException(
                ArgumentErrorCode.INVALID_SETTING,
                f"optimizer grid counts must be >= 2, got "
                f"{self.coarse_grid_theta}x{self.coarse_grid_phi}",
            )
        if self.refine_iterations < 0:
            raise ArgumentException(
                ArgumentErrorCode.INVALID_SETTING,
                "refine_iterations must be non-negative",
            )
        if not self.refine_tolerance > 0:
            raise ArgumentException(
                ArgumentErrorCode.INVALID_SETTING,
                "refine_tolerance must be positive",
            )
