# SPDX-License-Identifier: MIT
"""Trajectory and phenomenon-detection configuration."""

import os
from dataclasses import dataclass, field

from discordlib import constants as constant
from discordlib.config import utils as config_util
from discordlib.config.base import BaseConfig
from discordlib.config.registry import config_class


@config_class("dynamics")
@dataclass(frozen=True)
class DynamicsConfig(BaseConfig):
    """
    Dynamics configuration.

    Attributes:
        grid_start: First Gamma*t grid point.
        grid_stop: Last Gamma*t grid point.
        grid_step: Gamma*t grid spacing.
        death_tol: Negativity at or below this value counts as zero.
        flat_tol: Largest discord deviation from D(0) that counts as flat.
        min_frozen_points: Grid points a flat prefix needs for frozen-then-decay.
        gamma_floor: Lower bound of the coherence factor on long grids.
        spot_check_tol: Agreement required between the operator-sum and the
            closed-form evolution at the spot-checked grid points.
        monotone_tol: Slack of the non-increasing negativity check.
        workers: Requested worker threads; capped by DISCORD_DYN_THREADS.
    """

    grid_start: float = 0.0
    grid_stop: float = 10.0
    grid_step: float = 0.05
    death_tol: float = 1e-9
    flat_tol: float = 1e-3
    min_frozen_points: int = 3
    gamma_floor: float = constant.GAMMA_FLOOR
    spot_check_tol: float = 1e-12
    monotone_tol: float = 1e-9
    workers: int = field(default_factory=lambda: os.cpu_count() or 1)

    def __post_init__(self) -> None:
        if self.grid_step <= 0:
            raise ValueError("grid_step must be positive")
        if self.grid_stop < self.grid_start:
            raise ValueError("grid_stop must not precede grid_start")
        if self.death_tol <= 0 or self.flat_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.min_frozen_points < 2:
            raise ValueError("min_frozen_points must be at least 2")
        if not 0 < self.gamma_floor < 1:
            raise ValueError("gamma_floor must lie in (0, 1)")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")

    @property
    def effective_workers(self) -> int:
        """Worker count after applying the DISCORD_DYN_THREADS cap."""
        cap = config_util.env_positive_int(constant.THREADS_ENV)
        return min(self.workers, cap) if cap else self.workers
