# SPDX-License-Identifier: MIT
"""
Trajectories over the dimensionless time Gamma*t and phenomenon detection.

A trajectory evolves an initial qubit-qutrit state under qutrit dephasing on a
Gamma*t grid and computes a full correlation report at every point. The
summaries derived from it are:

- the sudden-death time of the negativity;
- the shape of the discord curve: invariant, frozen-then-decay or decaying.
"""

import dataclasses
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
import pandas as pd

from discordlib import channels, correlations, linalg
from discordlib import constants as constant
from discordlib.config import (
    ConfigManager,
    DynamicsConfig,
    NumericConfig,
    OptimizerConfig,
)
from discordlib.enums import DiscordClassEnum
from discordlib.exception import (
    ArgumentErrorCode,
    ArgumentException,
    NumericalErrorCode,
    NumericalException,
)
from discordlib.logging import logger
from discordlib.schema import (
    PhenomenonSummary,
    SweepRow,
    TrajectoryDocument,
    TrajectoryPoint,
)
from discordlib.states import (
    SEPARABLE_P,
    DensityMatrix,
    check_family_parameter,
    family_state,
)


def make_grid(start: float, stop: float, step: float) -> tuple[float, ...]:
    """
    Grid ``start, start + step, ...`` up to ``stop``.

    ``stop`` is included when ``step`` divides the span; otherwise the grid
    ends at the last point below it. Points are rounded to 12 decimals.

    Raises:
        ArgumentException: INVALID_GRID.
    """
    if not step > 0 or stop < start or not all(map(math.isfinite, (start, stop, step))):
        raise ArgumentException(
            ArgumentErrorCode.INVALID_GRID,
            f"invalid grid {start}:{stop}:{step}",
            details={"start": start, "stop": stop, "step": step},
        )
    span = (stop - start) / step
    count = round(span)
    if abs(count - span) > 1e-9:
        count = math.floor(span)
    points = np.round(start + step * np.arange(count + 1), 12)
    return tuple(float(x) for x in points)


def negativity_closed_form(p: float, gamma: float) -> float:
    """
    Negativity of the dephased family state from its partial-transpose blocks.

    ``max(0, (1-2p) gamma - p) + max(0, p gamma - (1-2p))``; at most one term
    is non-zero.
    """
    q = 1.0 - 2.0 * p
    return max(0.0, q * gamma - p) + max(0.0, p * gamma - q)


def death_time_closed_form(p: float) -> float | None:
    """
    Gamma*t at which the family negativity reaches zero.

    ``2 ln((1-2p)/p)`` below ``p = 1/3``, ``2 ln(p/(1-2p))`` above it and 0 at
    it. ``None`` at ``p = 0`` and ``p = 0.5`` where entanglement only decays
    asymptotically.
    """
    p = check_family_parameter(p)
    q = 1.0 - 2.0 * p
    if p == 0.0 or q == 0.0:
        return None
    if math.isclose(p, SEPARABLE_P, rel_tol=0.0, abs_tol=1e-15):
        return 0.0
    return max(0.0, 2.0 * math.log(q / p if p < SEPARABLE_P else p / q))


@dataclass(frozen=True)
class TrajectoryConfig:
    """
    Inputs of one trajectory.

    Attributes:
        gamma_t: Strictly ascending Gamma*t grid starting at 0.
        p: Family parameter; used when ``initial_state`` is absent.
        optimizer: Measurement optimizer settings.
        initial_state: Any qubit-qutrit state to evolve instead of the family.
    """

    gamma_t: tuple[float, ...]
    p: float | None = None
    optimizer: OptimizerConfig = field(
        default_factory=ConfigManager.get_optimizer_config
    )
    initial_state: DensityMatrix | None = None

    def __post_init__(self) -> None:
        grid = tuple(float(x) for x in self.gamma_t)
        if not grid:
            raise ArgumentException(ArgumentErrorCode.INVALID_GRID, "grid is empty")
        if grid[0] != 0.0:
            raise ArgumentException(
                ArgumentErrorCode.INVALID_GRID,
                f"grid must start at 0, got {grid[0]}",
                details=grid[0],
            )
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ArgumentException(
                ArgumentErrorCode.INVALID_GRID, "grid must be strictly ascending"
            )
        object.__setattr__(self, "gamma_t", grid)
        if self.p is not None:
            object.__setattr__(self, "p", check_family_parameter(self.p))
        elif self.initial_state is None:
            raise ArgumentException(
                ArgumentErrorCode.INVALID_SETTING,
                "either p or an initial state is required",
            )

    def initial(self) -> DensityMatrix:
        if self.initial_state is not None:
            return self.initial_state
        return family_state(self.p)


@dataclass(frozen=True)
class Trajectory:
    """Correlation reports in grid order, one per Gamma*t point."""

    config: TrajectoryConfig
    points: tuple[TrajectoryPoint, ...]

    def __post_init__(self) -> None:
        if len(self.points) != len(self.config.gamma_t):
            raise NumericalException(
                NumericalErrorCode.INVARIANT_VIOLATION,
                f"{len(self.points)} reports for {len(self.config.gamma_t)} grid points",
            )

    @property
    def gamma_t(self) -> np.ndarray:
        return np.array(self.config.gamma_t)

    @property
    def negativity(self) -> np.ndarray:
        return np.array([pt.report.negativity for pt in self.points])

    @property
    def mutual_information(self) -> np.ndarray:
        return np.array([pt.report.mutual_information for pt in self.points])

    @property
    def discord(self) -> np.ndarray:
        return np.array([pt.report.discord for pt in self.points])

    def to_frame(self) -> pd.DataFrame:
        """Table with the trajectory CSV columns."""
        rows = [
            (
                pt.gamma_t,
                pt.report.negativity,
                pt.report.mutual_information,
                pt.report.classical,
                pt.report.discord,
                pt.report.optimal_setting.theta,
                pt.report.optimal_setting.phi,
            )
            for pt in self.points
        ]
        return pd.DataFrame(rows, columns=list(constant.TRAJECTORY_COLUMNS))

    def to_document(self) -> TrajectoryDocument:
        return TrajectoryDocument(
            p=self.config.p if self.config.initial_state is None else None,
            gamma_t=list(self.config.gamma_t),
            optimizer=dataclasses.asdict(self.config.optimizer),
            points=list(self.points),
        )


def _spot_check(
    rho0: DensityMatrix,
    gamma_t: tuple[float, ...],
    dyn: DynamicsConfig,
    num: NumericConfig,
) -> float:
    """Largest operator-sum vs closed-form deviation at first, middle and last points."""
    worst = 0.0
    for i in sorted({0, len(gamma_t) // 2, len(gamma_t) - 1}):
        gamma = channels.coherence_factor(gamma_t[i], dyn.gamma_floor)
        lifted = channels.lift_to_composite(channels.dephasing_channel(gamma), rho0.idx)
        via_kraus = channels.apply(lifted, rho0, num)
        closed = channels.evolve_closed_form(rho0, gamma)
        residual = linalg.max_abs(via_kraus.matrix - closed.matrix)
        if residual > dyn.spot_check_tol:
            raise NumericalException(
                NumericalErrorCode.PATH_MISMATCH,
                f"operator-sum and closed-form states differ by {residual:.3e} "
                f"at Gamma*t = {gamma_t[i]}",
                details={"gamma_t": gamma_t[i], "residual": residual},
            )
        worst = max(worst, residual)
    return worst


def run_trajectory(
    cfg: TrajectoryConfig,
    dyn: DynamicsConfig | None = None,
    num: NumericConfig | None = None,
) -> Trajectory:
    """
    Evolve the initial state along the grid and report correlations at each point.

    Grid points are independent and are spread over
    ``DynamicsConfig.effective_workers`` threads; results keep grid order.

    Raises:
        NumericalException: PATH_MISMATCH if the spot check fails,
            INVARIANT_VIOLATION if negativity increases along the grid,
            and errors of the correlation functionals.
    """
    dyn = dyn or ConfigManager.get_dynamics_config()
    num = num or ConfigManager.get_numeric_config()
    rho0 = cfg.initial()
    started = time.perf_counter()
    logger.info(
        f"trajectory p={cfg.p} over {len(cfg.gamma_t)} points "
        f"[{cfg.gamma_t[0]}, {cfg.gamma_t[-1]}], {dyn.effective_workers} workers"
    )

    residual = _spot_check(rho0, cfg.gamma_t, dyn, num)
    logger.debug(f"spot check residual {residual:.3e}")

    def evaluate(gamma_t: float) -> TrajectoryPoint:
        gamma = channels.coherence_factor(gamma_t, dyn.gamma_floor)
        rho = channels.evolve_closed_form(rho0, gamma)
        return TrajectoryPoint(
            gamma_t=gamma_t,
            report=correlations.discord(rho, cfg.optimizer, num),
        )

    workers = dyn.effective_workers
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            points = tuple(pool.map(evaluate, cfg.gamma_t))
    else:
        points = tuple(map(evaluate, cfg.gamma_t))

    trajectory = Trajectory(cfg, points)
    rises = np.diff(trajectory.negativity)
    if rises.size and float(rises.max()) > dyn.monotone_tol:
        k = int(np.argmax(rises))
        raise NumericalException(
            NumericalErrorCode.INVARIANT_VIOLATION,
            f"negativity increases by {rises[k]:.3e} after Gamma*t = {cfg.gamma_t[k]}",
            details={"gamma_t": cfg.gamma_t[k], "increase": float(rises[k])},
        )

    logger.info(f"trajectory finished in {time.perf_counter() - started:.2f}s")
    return trajectory


def detect_sudden_death(tr: Trajectory, death_tol: float | None = None) -> float | None:
    """
    First grid Gamma*t from which the negativity stays at or below ``death_tol``.

    ``None`` when the last grid point is still entangled.
    """
    if death_tol is None:
        death_tol = ConfigManager.get_dynamics_config().death_tol
    alive = np.flatnonzero(tr.negativity > death_tol)
    if alive.size == 0:
        return tr.config.gamma_t[0]
    last = int(alive[-1])
    if last == len(tr.points) - 1:
        return None
    return tr.config.gamma_t[last + 1]


def classify_discord(
    tr: Trajectory,
    flat_tol: float | None = None,
    min_frozen_points: int | None = None,
    death_tol: float | None = None,
) -> PhenomenonSummary:
    """
    Classify the discord curve of a trajectory.

    - invariant: every point within ``flat_tol`` of D(0);
    - frozen-then-decay: a flat prefix of at least ``min_frozen_points``
      points, a later departure and a final discord above ``flat_tol``;
    - decaying: anything else.
    """
    dyn = ConfigManager.get_dynamics_config()
    flat_tol = dyn.flat_tol if flat_tol is None else flat_tol
    min_frozen_points = (
        dyn.min_frozen_points if min_frozen_points is None else min_frozen_points
    )
    d = tr.discord
    grid = tr.config.gamma_t
    deviation = np.abs(d - d[0])
    departed = np.flatnonzero(deviation > flat_tol)
    frozen_until = None

    if departed.size == 0:
        kind = DiscordClassEnum.INVARIANT
        frozen_until = grid[-1]
    else:
        first = int(departed[0])
        if first >= min_frozen_points and d[-1] > flat_tol:
            kind = DiscordClassEnum.FROZEN_THEN_DECAY
            frozen_until = grid[first - 1]
        else:
            kind = DiscordClassEnum.DECAYING

    return PhenomenonSummary(
        sudden_death_time=detect_sudden_death(tr, death_tol),
        discord_class=kind,
        frozen_until=frozen_until,
        asymptotic_discord=float(d[-1]),
    )


def summarize(
    tr: Trajectory,
    dyn: DynamicsConfig | None = None,
    num: NumericConfig | None = None,
) -> PhenomenonSummary:
    """:func:`classify_discord` plus the discord of the exact t -> infinity state."""
    dyn = dyn or ConfigManager.get_dynamics_config()
    summary = classify_discord(tr, dyn.flat_tol, dyn.min_frozen_points, dyn.death_tol)
    limit = channels.evolve_asymptotic(tr.config.initial())
    exact = correlations.discord(limit, tr.config.optimizer, num).discord
    logger.info(
        f"p={tr.config.p}: death at {summary.sudden_death_time}, "
        f"discord {summary.discord_class}, asymptote {summary.asymptotic_discord:.6g}"
    )
    return summary.model_copy(update={"exact_asymptotic_discord": exact})


def sweep_p(
    p_values: list[float],
    grid: tuple[float, ...] | list[float],
    opt: OptimizerConfig | None = None,
    dyn: DynamicsConfig | None = None,
) -> list[SweepRow]:
    """
    One phenomenon summary per family parameter, in input order.

    Every ``p`` is validated before any trajectory runs.

    Raises:
        ArgumentException: INVALID_MANIFEST for an empty list,
            PARAMETER_OUT_OF_RANGE for a ``p`` outside [0, 0.5].
    """
    if not p_values:
        raise ArgumentException(
            ArgumentErrorCode.INVALID_MANIFEST, "p list must not be empty"
        )
    checked = [check_family_parameter(p) for p in p_values]
    opt = opt or ConfigManager.get_optimizer_config()
    rows = []
    for p in checked:
        tr = run_trajectory(TrajectoryConfig(tuple(grid), p=p, optimizer=opt), dyn)
        rows.append(SweepRow(p=p, summary=summarize(tr, dyn)))
    return rows


def sweep_frame(rows: list[SweepRow]) -> pd.DataFrame:
    """Table with the sweep CSV columns; absent death times are empty cells."""
    return pd.DataFrame(
        [
            (
                row.p,
                row.summary.sudden_death_time,
                str(row.summary.discord_class),
                row.summary.asymptotic_discord,
            )
            for row in rows
        ],
        columns=list(constant.SWEEP_COLUMNS),
    )
