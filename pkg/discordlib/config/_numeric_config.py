# SPDX-License-Identifier: MIT
"""Numerical tolerances and eigensolver settings."""

from dataclasses import dataclass

from discordlib.config.base import BaseConfig
from discordlib.config.registry import config_class
from discordlib.enums import EigenBackendEnum


@config_class("numeric")
@dataclass(frozen=True)
class NumericConfig(BaseConfig):
    """
    Numerical settings shared by the linear algebra, state and channel modules.

    Attributes:
        eigen_backend: ``jacobi`` (cyclic complex Jacobi) or ``lapack``.
        max_sweeps: Jacobi sweep budget before NO_CONVERGENCE.
        offdiag_tol: Jacobi stops once every off-diagonal modulus is below
            ``offdiag_tol * max(1, max|M|)``.
        hermitian_tol: Largest accepted ``max|M - M^H|`` for eigensolver input.
        clamp_tol: Eigenvalues in ``[-clamp_tol, 0]`` are clamped to zero
            before taking logarithms.
        state_tol: Hermiticity and trace tolerance of a density matrix.
        positivity_tol: Smallest accepted eigenvalue of a density matrix is
            ``-positivity_tol``.
        zero_probability: Measurement outcomes with probability at or below
            this value contribute nothing to the conditional entropy.
        completeness_tol: Largest accepted Kraus completeness residual.
        batch_chunk: Number of matrices diagonalised per vectorised batch.
    """

    eigen_backend: EigenBackendEnum = EigenBackendEnum.JACOBI
    max_sweeps: int = 100
    offdiag_tol: float = 1e-12
    hermitian_tol: float = 1e-10
    clamp_tol: float = 1e-10
    state_tol: float = 1e-12
    positivity_tol: float = 1e-10
    zero_probability: float = 1e-12
    completeness_tol: float = 1e-12
    batch_chunk: int = 65536

    def __post_init__(self) -> None:
        object.__setattr__(self, "eigen_backend", EigenBackendEnum(self.eigen_backend))
        if self.max_sweeps < 1:
            raise ValueError("max_sweeps must be at least 1")
        if self.batch_chunk < 1:
            raise ValueError("batch_chunk must be at least 1")
        for name in (
            "offdiag_tol",
            "hermitian_tol",
            "clamp_tol",
            "state_tol",
            "positivity_tol",
            "zero_probability",
            "completeness_tol",
        ):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
