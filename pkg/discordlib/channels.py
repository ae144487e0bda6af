# SPDX-License-Identifier: MIT
"""
Kraus channels and the local qutrit dephasing dynamics.

The qutrit dephasing channel has the Kraus operators

    M1 = diag(1, gamma, gamma),  M2 = diag(0, omega, 0),  M3 = diag(0, 0, omega)

with ``gamma = exp(-Gamma t / 2)`` and ``omega = sqrt(1 - gamma**2)``; the
ground state dephases from both excited levels at the same rate. Acting on the
qutrit of a qubit-qutrit state it multiplies every coherence between qutrit
levels 0 and {1, 2} by ``gamma`` and every coherence between levels 1 and 2 by
``gamma**2``, leaving populations alone. :func:`evolve_closed_form` applies
that pattern directly and serves as an independent check of
:func:`apply` with the lifted operators.
"""

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from discordlib import constants as constant
from discordlib import linalg
from discordlib.config import ConfigManager, NumericConfig
from discordlib.exception import (
    ArgumentErrorCode,
    ArgumentException,
    NumericalErrorCode,
    NumericalException,
)
from discordlib.linalg import QUBIT_QUTRIT, BipartiteIndex, ComplexMatrix
from discordlib.states import DensityMatrix, validate


@dataclass(frozen=True)
class KrausChannel:
    """Ordered Kraus operators acting on a ``dim``-dimensional space."""

    operators: tuple[ComplexMatrix, ...]
    dim: int

    def __post_init__(self) -> None:
        if not self.operators:
            raise ArgumentException(
                ArgumentErrorCode.DIMENSION_MISMATCH,
                "a channel needs at least one Kraus operator",
            )
        frozen = []
        for op in self.operators:
            m = np.array(op, dtype=np.complex128, copy=True)
            if m.shape != (self.dim, self.dim):
                raise ArgumentException(
                    ArgumentErrorCode.DIMENSION_MISMATCH,
                    f"Kraus operator of shape {m.shape} on a {self.dim}-dimensional space",
                )
            m.flags.writeable = False
            frozen.append(m)
        object.__setattr__(self, "operators", tuple(frozen))

    @classmethod
    def of(cls, operators: list[npt.ArrayLike]) -> "KrausChannel":
        ops = [linalg.as_matrix(op) for op in operators]
        if not ops:
            raise ArgumentException(
                ArgumentErrorCode.DIMENSION_MISMATCH,
                "a channel needs at least one Kraus operator",
            )
        return cls(tuple(ops), ops[0].shape[0])

    def stacked(self) -> ComplexMatrix:
        return np.stack(self.operators)


@dataclass(frozen=True)
class DephasingParams:
    """
    Coherence factor of the qutrit dephasing channel.

    Attributes:
        gamma: ``exp(-decay_rate * time / 2)``, floored at ``GAMMA_FLOOR``.
        omega: ``sqrt(1 - gamma**2)``.
        decay_rate: Gamma, in inverse time units.
        time: Elapsed time.
    """

    gamma: float
    omega: float
    decay_rate: float
    time: float

    @property
    def gamma_t(self) -> float:
        return self.decay_rate * self.time

    @classmethod
    def from_rate(
        cls, decay_rate: float, time: float, floor: float = constant.GAMMA_FLOOR
    ) -> "DephasingParams":
        if decay_rate < 0 or time < 0:
            raise ArgumentException(
                ArgumentErrorCode.NEGATIVE_PARAMETER,
                f"decay rate and time must be non-negative, got {decay_rate} and {time}",
                details={"decay_rate": decay_rate, "time": time},
            )
        gamma = coherence_factor(decay_rate * time, floor)
        return cls(gamma, math.sqrt(1.0 - gamma * gamma), decay_rate, time)

    @classmethod
    def from_gamma_t(
        cls, gamma_t: float, floor: float = constant.GAMMA_FLOOR
    ) -> "DephasingParams":
        """Parameters in dimensionless time, taking ``Gamma = 1``."""
        return cls.from_rate(1.0, gamma_t, floor)


def coherence_factor(gamma_t: float, floor: float = constant.GAMMA_FLOOR) -> float:
    """``max(exp(-gamma_t / 2), floor)``."""
    if gamma_t < 0:
        raise ArgumentException(
            ArgumentErrorCode.NEGATIVE_PARAMETER,
            f"Gamma*t must be non-negative, got {gamma_t}",
            details=gamma_t,
        )
    return max(math.exp(-0.5 * gamma_t), floor)


def dephasing_channel(gamma: float) -> KrausChannel:
    """Dephasing Kraus set for a given coherence factor ``gamma``."""
    omega = math.sqrt(max(0.0, 1.0 - gamma * gamma))
    return KrausChannel(
        (
            np.diag([1.0, gamma, gamma]).astype(np.complex128),
            np.diag([0.0, omega, 0.0]).astype(np.complex128),
            np.diag([0.0, 0.0, omega]).astype(np.complex128),
        ),
        constant.DIM_QUTRIT,
    )


def qutrit_dephasing(decay_rate: float, time: float) -> KrausChannel:
    """
    Kraus operators of the qutrit dephasing channel after ``time``.

    Raises:
        ArgumentException: NEGATIVE_PARAMETER.
    """
    params = DephasingParams.from_rate(decay_rate, time)
    return dephasing_channel(params.gamma)


def dephasing_from_gamma_t(gamma_t: float) -> KrausChannel:
    """Qutrit dephasing channel in dimensionless time ``Gamma*t``."""
    return dephasing_channel(coherence_factor(gamma_t))


def identity_channel(dim: int) -> KrausChannel:
    return KrausChannel((np.eye(dim, dtype=np.complex128),), dim)


def lift_to_composite(
    channel: KrausChannel, idx: BipartiteIndex = QUBIT_QUTRIT
) -> KrausChannel:
    """Operators ``I_A (x) K`` acting on the composite space."""
    if channel.dim != idx.dim_b:
        raise ArgumentException(
            ArgumentErrorCode.DIMENSION_MISMATCH,
            f"channel on dimension {channel.dim} cannot act on subsystem B of "
            f"dimension {idx.dim_b}",
        )
    eye_a = np.eye(idx.dim_a, dtype=np.complex128)
    return KrausChannel(
        tuple(linalg.tensor_product(eye_a, op) for op in channel.operators), idx.dim
    )


def completeness_residual(channel: KrausChannel) -> float:
    """``max|sum_i K_i^H K_i - I|``."""
    ops = channel.stacked()
    total = np.einsum("kji,kjl->il", ops.conj(), ops)
    return linalg.max_abs(total - np.eye(channel.dim))


def apply(
    channel: KrausChannel,
    rho: DensityMatrix,
    cfg: NumericConfig | None = None,
) -> DensityMatrix:
    """
    Operator-sum map ``rho -> sum_i K_i rho K_i^H``.

    Raises:
        ArgumentException: DIMENSION_MISMATCH.
        NumericalException: COMPLETENESS_VIOLATION when the residual exceeds
            ``NumericConfig.completeness_tol``; validation errors of the result.
    """
    cfg = cfg or ConfigManager.get_numeric_config()
    if channel.dim != rho.dim:
        raise ArgumentException(
            ArgumentErrorCode.DIMENSION_MISMATCH,
            f"channel on dimension {channel.dim} applied to a {rho.dim}-dimensional state",
        )
    residual = completeness_residual(channel)
    if residual > cfg.completeness_tol:
        raise NumericalException(
            NumericalErrorCode.COMPLETENESS_VIOLATION,
            f"completeness residual {residual:.3e} exceeds {cfg.completeness_tol:.1e}",
            details=residual,
        )
    return validate(operator_sum(channel, rho.matrix), rho.idx, cfg)


def operator_sum(channel: KrausChannel, matrices: npt.ArrayLike) -> ComplexMatrix:
    """
    ``sum_i K_i M K_i^H`` for one matrix or a ``(batch, n, n)`` stack.

    No completeness or validity checks; see :func:`apply`.
    """
    ops = channel.stacked()
    m = np.asarray(matrices, dtype=np.complex128)
    if m.shape[-2:] != (channel.dim, channel.dim):
        raise ArgumentException(
            ArgumentErrorCode.DIMENSION_MISMATCH,
            f"channel on dimension {channel.dim} applied to shape {m.shape}",
        )
    return np.einsum("kij,...jl,kml->...im", ops, m, ops.conj())


def damping_pattern(gamma: float, idx: BipartiteIndex = QUBIT_QUTRIT) -> npt.NDArray[np.float64]:
    """Entry-wise multiplier of the evolved composite matrix."""
    if idx.dim_b != constant.DIM_QUTRIT:
        raise ArgumentException(
            ArgumentErrorCode.DIMENSION_MISMATCH,
            f"qutrit dephasing needs dim_b = 3, got {idx.dim_b}",
        )
    g2 = gamma * gamma
    qutrit = np.array(
        [
            [1.0, gamma, gamma],
            [gamma, 1.0, g2],
            [gamma, g2, 1.0],
        ]
    )
    return np.kron(np.ones((idx.dim_a, idx.dim_a)), qutrit)


def evolve_closed_form(rho0: DensityMatrix, gamma: float) -> DensityMatrix:
    """
    Evolved state obtained by damping the coherences of ``rho0`` directly.

    Raises:
        ArgumentException: PARAMETER_OUT_OF_RANGE unless ``0 < gamma <= 1``;
            DIMENSION_MISMATCH unless ``rho0`` is a qubit-qutrit state.
    """
    if not 0.0 < gamma <= 1.0:
        raise ArgumentException(
            ArgumentErrorCode.PARAMETER_OUT_OF_RANGE,
            f"gamma must lie in (0, 1], got {gamma}",
            details=gamma,
        )
    # Schur product with a unit-diagonal PSD pattern keeps the state valid.
    return DensityMatrix(rho0.matrix * damping_pattern(gamma, rho0.idx), rho0.idx)


def evolve_asymptotic(rho0: DensityMatrix) -> DensityMatrix:
    """The ``t -> infinity`` limit: all qutrit coherences removed."""
    return DensityMatrix(rho0.matrix * damping_pattern(0.0, rho0.idx), rho0.idx)
