# SPDX-License-Identifier: MIT
"""Common schema with data validation.

JSON documents use the camelCase field names of the published formats
(``mutualInformation``, ``optimalSetting``, ...); Python code uses the
snake_case attributes.
"""

import math

from pydantic import BaseModel, ConfigDict, Field, field_validator
from pydantic.alias_generators import to_camel

from discordlib.enums import CommandEnum, DiscordClassEnum, OutputFormatEnum


class CamelModel(BaseModel):
    """Immutable model serialised with camelCase aliases."""

    model_config = ConfigDict(
        frozen=True,
        alias_generator=to_camel,
        populate_by_name=True,
    )


class StatePayload(CamelModel):
    """JSON form of a bipartite density matrix.

    Attributes:
        dim_a: Dimension of subsystem A (the qubit).
        dim_b: Dimension of subsystem B (the qutrit).
        re: Real parts, row-major nested lists.
        im: Imaginary parts, row-major nested lists.
    """

    dim_a: int = Field(alias="dimA", gt=0)
    dim_b: int = Field(alias="dimB", gt=0)
    re: list[list[float]]
    im: list[list[float]]


class MeasurementSetting(CamelModel):
    """Bloch angles of the qubit projector pair.

    Attributes:
        theta: Polar angle in [0, pi).
        phi: Azimuthal angle in [0, 2 pi).
    """

    theta: float
    phi: float

    @field_validator("theta")
    @classmethod
    def _theta_range(cls, value: float) -> float:
        if not 0.0 <= value < math.pi:
            raise ValueError(f"theta must lie in [0, pi), got {value}")
        return value

    @field_validator("phi")
    @classmethod
    def _phi_range(cls, value: float) -> float:
        if not 0.0 <= value < 2.0 * math.pi:
            raise ValueError(f"phi must lie in [0, 2 pi), got {value}")
        return value

    @classmethod
    def normalized(cls, theta: float, phi: float) -> "MeasurementSetting":
        """Fold arbitrary angles into the canonical ranges.

        ``(theta, phi) -> (2 pi - theta, phi + pi)`` reflects ``theta`` into
        [0, pi] and keeps the Bloch vector. The south pole is identified with
        the north pole, which swaps the two projectors.
        """
        two_pi = 2.0 * math.pi
        theta = math.fmod(theta, two_pi)
        if theta < 0.0:
            theta += two_pi
        if theta > math.pi:
            theta = two_pi - theta
            phi += math.pi
        if theta >= math.pi:
            theta, phi = 0.0, 0.0
        phi = math.fmod(phi, two_pi)
        if phi < 0.0:
            phi += two_pi
        if phi >= two_pi:
            phi = 0.0
        return cls(theta=theta, phi=phi)


class CorrelationReport(CamelModel):
    """Correlation quantities of one state.

    Attributes:
        negativity: Twice the absolute sum of negative partial-transpose
            eigenvalues.
        mutual_information: Total correlations in bits.
        classical: Classical correlation in bits (measurement on the qubit).
        discord: ``mutual_information - classical`` in bits.
        optimal_setting: Measurement minimising the conditional entropy.
        optimizer_evals: Objective evaluations spent by the optimizer.
    """

    negativity: float
    mutual_information: float
    classical: float
    discord: float
    optimal_setting: MeasurementSetting
    optimizer_evals: int


class TrajectoryPoint(CamelModel):
    """One grid point of a trajectory."""

    gamma_t: float
    report: CorrelationReport


class TrajectoryDocument(CamelModel):
    """JSON form of a trajectory."""

    p: float | None
    gamma_t: list[float]
    optimizer: dict[str, float | int]
    points: list[TrajectoryPoint]


class PhenomenonSummary(CamelModel):
    """Sudden death and discord shape of one trajectory.

    Attributes:
        sudden_death_time: First grid Gamma*t from which negativity stays zero.
        discord_class: Invariant, frozen-then-decay or decaying.
        frozen_until: Last grid Gamma*t of the initial flat discord prefix.
        asymptotic_discord: Discord at the last grid point.
        exact_asymptotic_discord: Discord of the exact t -> infinity state.
    """

    sudden_death_time: float | None = None
    discord_class: DiscordClassEnum
    frozen_until: float | None = None
    asymptotic_discord: float
    exact_asymptotic_discord: float | None = None


class SweepRow(CamelModel):
    """One row of a parameter sweep."""

    p: float
    summary: PhenomenonSummary


class VerificationResult(CamelModel):
    """Outcome of one verification suite."""

    suite: str
    passed: bool
    metric: float
    threshold: float
    detail: str = ""


class RunManifest(CamelModel):
    """Validated command line request.

    Attributes:
        command: Subcommand to run.
        p: Family parameter of a trajectory.
        p_values: Family parameters of a sweep.
        grid_start: First Gamma*t point; phenomenon detection needs 0.
        grid_stop: Last Gamma*t point.
        grid_step: Gamma*t spacing.
        optimizer: Optimizer fields overridden on the command line.
        output_path: Target file of trajectory and sweep tables.
        format: Table format.
        inject_fault: Name of a corrupted channel for ``verify``.
        seed: Seed of the ``verify`` fixtures.
    """

    command: CommandEnum
    p: float | None = None
    p_values: list[float] | None = None
    grid_start: float = 0.0
    grid_stop: float = 10.0
    grid_step: float = 0.05
    optimizer: dict[str, float | int] = Field(default_factory=dict)
    output_path: str | None = None
    format: OutputFormatEnum = OutputFormatEnum.CSV
    inject_fault: str | None = None
    seed: int | None = None
