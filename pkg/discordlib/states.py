# SPDX-License-Identifier: MIT
"""
Constructors and validators of qubit-qutrit density matrices.

The main family is the one-parameter mixture

    rho(p) = p/2 (|00><00| + |01><01| + |11><11| + |12><12|
                  + |01><11| + |11><01| + |00><12| + |12><00|)
           + (1-2p)/2 (|02><02| + |10><10| + |02><10| + |10><02|),

valid for p in [0, 0.5] and separable only at p = 1/3.
"""

import json
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from discordlib import linalg
from discordlib.config import ConfigManager, NumericConfig
from discordlib.enums import SubsystemEnum
from discordlib.exception import (
    ArgumentErrorCode,
    ArgumentException,
    NumericalErrorCode,
    NumericalException,
)
from discordlib.linalg import QUBIT_QUTRIT, BipartiteIndex, ComplexMatrix
from discordlib.schema import StatePayload

P_MIN = 0.0
P_MAX = 0.5
SEPARABLE_P = 1.0 / 3.0


@dataclass(frozen=True)
class DensityMatrix:
    """
    Validated bipartite state; build it with :func:`validate` or a constructor.

    The stored matrix is a read-only copy.
    """

    matrix: ComplexMatrix
    idx: BipartiteIndex = QUBIT_QUTRIT

    def __post_init__(self) -> None:
        frozen = np.array(self.matrix, dtype=np.complex128, copy=True)
        frozen.flags.writeable = False
        object.__setattr__(self, "matrix", frozen)

    @property
    def dim(self) -> int:
        return self.idx.dim

    def reduced(self, keep: SubsystemEnum | str) -> ComplexMatrix:
        return linalg.partial_trace(self.matrix, self.idx, keep)

    def to_payload(self) -> StatePayload:
        return StatePayload(
            dim_a=self.idx.dim_a,
            dim_b=self.idx.dim_b,
            re=self.matrix.real.tolist(),
            im=self.matrix.imag.tolist(),
        )

    def to_json(self) -> str:
        return self.to_payload().model_dump_json(by_alias=True)

    @classmethod
    def from_payload(cls, payload: StatePayload | dict) -> "DensityMatrix":
        """Validate a JSON payload ``{dimA, dimB, re, im}`` into a state."""
        if not isinstance(payload, StatePayload):
            payload = StatePayload.model_validate(payload)
        re = np.asarray(payload.re, dtype=np.float64)
        im = np.asarray(payload.im, dtype=np.float64)
        if re.shape != im.shape:
            raise ArgumentException(
                ArgumentErrorCode.DIMENSION_MISMATCH,
                f"real part {re.shape} and imaginary part {im.shape} differ",
            )
        return validate(re + 1j * im, BipartiteIndex(payload.dim_a, payload.dim_b))

    @classmethod
    def from_json(cls, text: str) -> "DensityMatrix":
        return cls.from_payload(json.loads(text))


def validate(
    matrix: npt.ArrayLike,
    idx: BipartiteIndex = QUBIT_QUTRIT,
    cfg: NumericConfig | None = None,
) -> DensityMatrix:
    """
    Check Hermiticity, unit trace and positivity of ``matrix``.

    Hermiticity and trace use ``NumericConfig.state_tol``; the smallest
    eigenvalue must be at least ``-NumericConfig.positivity_tol``.

    Raises:
        ArgumentException: DIMENSION_MISMATCH.
        NumericalException: NON_HERMITIAN, TRACE_NOT_ONE or NOT_POSITIVE.
    """
    cfg = cfg or ConfigManager.get_numeric_config()
    m = linalg.as_matrix(matrix)
    idx.check(m)

    residual = linalg.hermiticity_residual(m)
    if residual > cfg.state_tol:
        raise NumericalException(
            NumericalErrorCode.NON_HERMITIAN,
            f"state is not Hermitian: max|rho - rho^H| = {residual:.3e}",
            details=residual,
        )
    trace = float(np.trace(m).real)
    if abs(trace - 1.0) > cfg.state_tol:
        raise NumericalException(
            NumericalErrorCode.TRACE_NOT_ONE,
            f"state trace is {trace:.15g}",
            details=trace,
        )
    smallest = float(linalg.hermitian_eigen(m, cfg=cfg).eigenvalues[0])
    if smallest < -cfg.positivity_tol:
        raise NumericalException(
            NumericalErrorCode.NOT_POSITIVE,
            f"state has eigenvalue {smallest:.3e}",
            details=smallest,
        )
    return DensityMatrix(m, idx)


def check_family_parameter(p: float) -> float:
    """Return ``p`` if it lies in [0, 0.5], otherwise raise PARAMETER_OUT_OF_RANGE."""
    if not P_MIN <= p <= P_MAX:
        raise ArgumentException(
            ArgumentErrorCode.PARAMETER_OUT_OF_RANGE,
            f"p must lie in [0, 0.5], got {p}",
            details=p,
        )
    return float(p)


def family_state(p: float) -> DensityMatrix:
    """
    The one-parameter qubit-qutrit family.

    Basis order ``|00>, |01>, |02>, |10>, |11>, |12>``.
    """
    p = check_family_parameter(p)
    a = p / 2.0
    b = (1.0 - 2.0 * p) / 2.0
    rho = np.diag([a, a, b, b, a, a]).astype(np.complex128)
    rho[1, 4] = rho[4, 1] = a
    rho[0, 5] = rho[5, 0] = a
    rho[2, 3] = rho[3, 2] = b
    return validate(rho, QUBIT_QUTRIT)


def maximally_mixed(idx: BipartiteIndex = QUBIT_QUTRIT) -> DensityMatrix:
    return DensityMatrix(np.eye(idx.dim, dtype=np.complex128) / idx.dim, idx)


def _as_local_state(state: DensityMatrix | npt.ArrayLike, cfg: NumericConfig) -> ComplexMatrix:
    if isinstance(state, DensityMatrix):
        return state.matrix
    m = linalg.as_matrix(state)
    if m.shape[0] != m.shape[1]:
        raise ArgumentException(
            ArgumentErrorCode.DIMENSION_MISMATCH,
            f"local state must be square, got {m.shape}",
        )
    return validate(m, BipartiteIndex(m.shape[0], 1), cfg).matrix


def product_state(
    rho_a: DensityMatrix | npt.ArrayLike,
    rho_b: DensityMatrix | npt.ArrayLike,
    idx: BipartiteIndex = QUBIT_QUTRIT,
    cfg: NumericConfig | None = None,
) -> DensityMatrix:
    """``rho_a (x) rho_b``; each factor is validated on its own."""
    cfg = cfg or ConfigManager.get_numeric_config()
    a = _as_local_state(rho_a, cfg)
    b = _as_local_state(rho_b, cfg)
    if a.shape[0] != idx.dim_a or b.shape[0] != idx.dim_b:
        raise ArgumentException(
            ArgumentErrorCode.DIMENSION_MISMATCH,
            f"factors {a.shape} and {b.shape} do not match "
            f"{idx.dim_a}x{idx.dim_b} subsystems",
        )
    return validate(linalg.tensor_product(a, b), idx, cfg)


def pure_state(
    vector: npt.ArrayLike, idx: BipartiteIndex = QUBIT_QUTRIT
) -> DensityMatrix:
    """``|psi><psi|`` of the normalised ``vector``."""
    psi = np.asarray(vector, dtype=np.complex128).reshape(-1)
    if psi.shape[0] != idx.dim:
        raise ArgumentException(
            ArgumentErrorCode.DIMENSION_MISMATCH,
            f"ket of length {psi.shape[0]} does not match dimension {idx.dim}",
        )
    norm = np.linalg.norm(psi)
    if norm == 0.0:
        raise ArgumentException(
            ArgumentErrorCode.PARAMETER_OUT_OF_RANGE, "ket must be non-zero"
        )
    psi = psi / norm
    return validate(np.outer(psi, psi.conj()), idx)


def basis_ket(i: int, j: int, idx: BipartiteIndex = QUBIT_QUTRIT) -> ComplexMatrix:
    ket = np.zeros(idx.dim, dtype=np.complex128)
    ket[idx.composite(i, j)] = 1.0
    return ket


def embedded_bell_state(idx: BipartiteIndex = QUBIT_QUTRIT) -> DensityMatrix:
    """``(|00> + |11>)/sqrt(2)`` inside the 2x3 space."""
    return pure_state(basis_ket(0, 0, idx) + basis_ket(1, 1, idx), idx)


def classically_correlated_state(idx: BipartiteIndex = QUBIT_QUTRIT) -> DensityMatrix:
    """``(|00><00| + |11><11|)/2``."""
    rho = np.zeros((idx.dim, idx.dim), dtype=np.complex128)
    rho[idx.composite(0, 0), idx.composite(0, 0)] = 0.5
    rho[idx.composite(1, 1), idx.composite(1, 1)] = 0.5
    return validate(rho, idx)


def random_state(
    rng: np.random.Generator,
    idx: BipartiteIndex = QUBIT_QUTRIT,
    rank: int | None = None,
) -> DensityMatrix:
    """
    Random full-support (or given-rank) state ``G G^H / Tr(G G^H)``.

    Used as a fixture by the verification suites and tests.
    """
    rank = idx.dim if rank is None else rank
    g = rng.normal(size=(idx.dim, rank)) + 1j * rng.normal(size=(idx.dim, rank))
    rho = g @ g.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return validate(rho / np.trace(rho).real, idx)


def random_local_state(rng: np.random.Generator, dim: int) -> ComplexMatrix:
    """Random single-system state, the factor of a random product state."""
    return random_state(rng, BipartiteIndex(dim, 1)).matrix
