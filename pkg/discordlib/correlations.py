# SPDX-License-Identifier: MIT
"""
Correlation functionals of qubit-qutrit states.

- negativity: ``sum_i |eta_i| - eta_i`` over the partial-transpose spectrum;
- mutual information: ``S(A) + S(B) - S(AB)``;
- classical correlation: ``S(B) - min sum_k p_k S(rho_k^B)`` over projective
  qubit measurements ``Pi_{1,2} = (I +- n.sigma)/2``;
- discord: mutual information minus classical correlation.

All entropies are in bits. The minimisation over the Bloch angles evaluates a
coarse (theta, phi) grid in one vectorised pass and refines the best cell with
a Nelder-Mead simplex.
"""

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy.optimize import minimize

from discordlib import linalg
from discordlib.config import ConfigManager, NumericConfig, OptimizerConfig
from discordlib.enums import SubsystemEnum
from discordlib.exception import ArgumentErrorCode, ArgumentException
from discordlib.linalg import ComplexMatrix, RealVector
from discordlib.logging import logger
from discordlib.schema import CorrelationReport, MeasurementSetting
from discordlib.states import DensityMatrix

PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

# Multiples of 2**-48 below 2**5 add and subtract exactly in binary64.
_SNAP_EXPONENT = 48


def _snap(value: float) -> float:
    return math.ldexp(round(math.ldexp(value, _SNAP_EXPONENT)), -_SNAP_EXPONENT)


@dataclass(frozen=True)
class ConditionalMinimum:
    """Result of the conditional-entropy minimisation.

    Attributes:
        value: Minimum of ``sum_k p_k S(rho_k^B)`` in bits.
        setting: Minimising measurement.
        evaluations: Objective evaluations, grid plus simplex.
        grid_value: Best value on the coarse grid alone.
    """

    value: float
    setting: MeasurementSetting
    evaluations: int
    grid_value: float


def negativity(
    rho: DensityMatrix,
    on: SubsystemEnum | str = SubsystemEnum.A,
    cfg: NumericConfig | None = None,
) -> float:
    """
    Negativity from the partial transpose on ``on`` (the qubit by default).

    The value does not depend on the transposed side.
    """
    transposed = linalg.partial_transpose(rho.matrix, rho.idx, on)
    eta = linalg.hermitian_eigen(transposed, cfg=cfg).eigenvalues
    return max(float(np.sum(np.abs(eta) - eta)), 0.0)


def mutual_information(rho: DensityMatrix, cfg: NumericConfig | None = None) -> float:
    """``S(rho_A) + S(rho_B) - S(rho_AB)`` in bits, clipped at zero."""
    s_a = linalg.von_neumann_entropy(rho.reduced(SubsystemEnum.A), cfg=cfg)
    s_b = linalg.von_neumann_entropy(rho.reduced(SubsystemEnum.B), cfg=cfg)
    s_ab = linalg.von_neumann_entropy(rho.matrix, cfg=cfg)
    return max(s_a + s_b - s_ab, 0.0)


def _projector_stack(
    thetas: RealVector, phis: RealVector
) -> tuple[ComplexMatrix, ComplexMatrix]:
    nx = np.sin(thetas) * np.cos(phis)
    ny = np.sin(thetas) * np.sin(phis)
    nz = np.cos(thetas)
    n_sigma = (
        nx[:, None, None] * PAULI_X
        + ny[:, None, None] * PAULI_Y
        + nz[:, None, None] * PAULI_Z
    )
    eye = np.eye(2, dtype=np.complex128)
    return 0.5 * (eye + n_sigma), 0.5 * (eye - n_sigma)


def projectors(setting: MeasurementSetting) -> tuple[ComplexMatrix, ComplexMatrix]:
    """The pair ``(I + n.sigma)/2, (I - n.sigma)/2`` for ``n(theta, phi)``."""
    pi_1, pi_2 = _projector_stack(
        np.array([setting.theta]), np.array([setting.phi])
    )
    return pi_1[0], pi_2[0]


def _require_qubit_side(rho: DensityMatrix) -> None:
    if rho.idx.dim_a != 2:
        raise ArgumentException(
            ArgumentErrorCode.DIMENSION_MISMATCH,
            f"measurements act on a qubit, subsystem A has dimension {rho.idx.dim_a}",
        )


def _conditional_entropies(
    rho: DensityMatrix,
    thetas: npt.ArrayLike,
    phis: npt.ArrayLike,
    cfg: NumericConfig,
) -> RealVector:
    """``sum_k p_k S(rho_k^B)`` for each (theta, phi) pair, vectorised."""
    thetas = np.asarray(thetas, dtype=np.float64).reshape(-1)
    phis = np.asarray(phis, dtype=np.float64).reshape(-1)
    idx = rho.idx
    r = rho.matrix.reshape(idx.dim_a, idx.dim_b, idx.dim_a, idx.dim_b)
    out = np.zeros(thetas.shape[0], dtype=np.float64)

    for start in range(0, thetas.shape[0], cfg.batch_chunk):
        stop = start + cfg.batch_chunk
        for pi in _projector_stack(thetas[start:stop], phis[start:stop]):
            # Tr_A((Pi x I) rho), left unnormalised
            cond = np.einsum("bik,kjil->bjl", pi, r)
            probs = np.real(np.trace(cond, axis1=1, axis2=2))
            live = probs > cfg.zero_probability
            if not np.any(live):
                continue
            mu = linalg.hermitian_eigvalsh_batch(cond[live], cfg=cfg)
            # p S(rho/p) = -sum mu log2 mu + p log2 p
            p_live = probs[live]
            contribution = linalg.entropy_from_eigenvalues(mu, cfg.clamp_tol)
            contribution = contribution + p_live * np.log2(p_live)
            chunk = out[start:stop]
            chunk[live] += contribution
    return np.maximum(out, 0.0)


def measured_conditional_entropy(
    rho: DensityMatrix,
    setting: MeasurementSetting,
    cfg: NumericConfig | None = None,
) -> float:
    """
    ``sum_k p_k S(rho_k^B)`` after measuring the qubit with ``setting``.

    Outcomes with ``p_k <= NumericConfig.zero_probability`` contribute zero.
    """
    cfg = cfg or ConfigManager.get_numeric_config()
    _require_qubit_side(rho)
    return float(_conditional_entropies(rho, [setting.theta], [setting.phi], cfg)[0])


def conditional_entropy_grid(
    rho: DensityMatrix,
    n_theta: int,
    n_phi: int,
    cfg: NumericConfig | None = None,
) -> tuple[RealVector, RealVector, RealVector]:
    """
    Conditional entropy on the ``n_theta x n_phi`` grid over [0, pi] x [0, 2 pi].

    Returns:
        ``(thetas, phis, values)`` with ``values[i, j]`` at ``(thetas[i], phis[j])``.
    """
    cfg = cfg or ConfigManager.get_numeric_config()
    _require_qubit_side(rho)
    thetas = np.linspace(0.0, math.pi, n_theta)
    phis = np.linspace(0.0, 2.0 * math.pi, n_phi)
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    values = _conditional_entropies(rho, tt.ravel(), pp.ravel(), cfg)
    return thetas, phis, values.reshape(n_theta, n_phi)


def minimize_conditional_entropy(
    rho: DensityMatrix,
    opt: OptimizerConfig | None = None,
    cfg: NumericConfig | None = None,
) -> ConditionalMinimum:
    """
    Minimise the measured conditional entropy over the Bloch sphere.

    The best coarse-grid cell seeds a Nelder-Mead simplex whose initial edges
    are one grid step long. The refined point is kept only if it improves on
    the grid minimum.
    """
    opt = opt or ConfigManager.get_optimizer_config()
    cfg = cfg or ConfigManager.get_numeric_config()
    thetas, phis, values = conditional_entropy_grid(
        rho, opt.coarse_grid_theta, opt.coarse_grid_phi, cfg
    )
    i, j = np.unravel_index(int(np.argmin(values)), values.shape)
    grid_value = float(values[i, j])
    best_theta, best_phi = float(thetas[i]), float(phis[j])
    best_value = grid_value
    evaluations = values.size

    if opt.refine_iterations > 0:
        d_theta = thetas[1] - thetas[0]
        d_phi = phis[1] - phis[0]
        simplex = np.array(
            [
                [best_theta, best_phi],
                [best_theta + d_theta, best_phi],
                [best_theta, best_phi + d_phi],
            ]
        )

        def objective(x: RealVector) -> float:
            return float(_conditional_entropies(rho, [x[0]], [x[1]], cfg)[0])

        result = minimize(
            objective,
            simplex[0],
            method="Nelder-Mead",
            options={
                "maxiter": opt.refine_iterations,
                "fatol": opt.refine_tolerance,
                "xatol": 1e-10,
                "initial_simplex": simplex,
            },
        )
        evaluations += int(result.nfev)
        if float(result.fun) < best_value:
            best_value = float(result.fun)
            best_theta, best_phi = float(result.x[0]), float(result.x[1])
        else:
            logger.debug(
                f"simplex did not improve on grid minimum {grid_value:.12g}"
            )

    return ConditionalMinimum(
        value=best_value,
        setting=MeasurementSetting.normalized(best_theta, best_phi),
        evaluations=evaluations,
        grid_value=grid_value,
    )


def classical_correlation(
    rho: DensityMatrix,
    opt: OptimizerConfig | None = None,
    cfg: NumericConfig | None = None,
) -> tuple[float, MeasurementSetting]:
    """``S(rho_B)`` minus the minimal measured conditional entropy, with its setting."""
    s_b = linalg.von_neumann_entropy(rho.reduced(SubsystemEnum.B), cfg=cfg)
    minimum = minimize_conditional_entropy(rho, opt, cfg)
    return s_b - minimum.value, minimum.setting


def discord(
    rho: DensityMatrix,
    opt: OptimizerConfig | None = None,
    cfg: NumericConfig | None = None,
) -> CorrelationReport:
    """
    Full correlation report; discord is reported as ``I - C``.

    Mutual information and classical correlation are snapped to a binary grid
    of spacing ``2**-48`` so that ``classical + discord == mutual_information``
    holds exactly.
    """
    cfg = cfg or ConfigManager.get_numeric_config()
    s_a = linalg.von_neumann_entropy(rho.reduced(SubsystemEnum.A), cfg=cfg)
    s_b = linalg.von_neumann_entropy(rho.reduced(SubsystemEnum.B), cfg=cfg)
    s_ab = linalg.von_neumann_entropy(rho.matrix, cfg=cfg)
    minimum = minimize_conditional_entropy(rho, opt, cfg)

    mutual = _snap(max(s_a + s_b - s_ab, 0.0))
    classical = _snap(s_b - minimum.value)
    quantum = mutual - classical
    if quantum < -1e-6:
        logger.warning(
            f"discord {quantum:.3e} below optimizer slack; "
            f"I={mutual:.12g} C={classical:.12g}"
        )

    return CorrelationReport(
        negativity=negativity(rho, cfg=cfg),
        mutual_information=mutual,
        classical=classical,
        discord=quantum,
        optimal_setting=minimum.setting,
        optimizer_evals=minimum.evaluations,
    )
