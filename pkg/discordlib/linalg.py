# SPDX-License-Identifier: MIT
"""
Dense complex matrix primitives for bipartite qubit-qutrit states.

Matrices are ``numpy`` ``complex128`` arrays in row-major order. The composite
index of the product basis ``|ij>`` is ``k = i * dim_b + j`` (qubit index
major), so ``|00>, |01>, |02>, |10>, |11>, |12>`` map to ``k = 0..5``.

The default Hermitian eigensolver is a cyclic complex Jacobi iteration,
vectorised over stacks of matrices so the optimizer can diagonalise thousands
of 3x3 conditional states per call. ``NumericConfig.eigen_backend = "lapack"``
switches to ``numpy.linalg.eigh``.
"""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from discordlib import constants as constant
from discordlib.config import ConfigManager, NumericConfig
from discordlib.enums import EigenBackendEnum, SubsystemEnum
from discordlib.exception import (
    ArgumentErrorCode,
    ArgumentException,
    NumericalErrorCode,
    NumericalException,
)
from discordlib.logging import logger

ComplexMatrix = npt.NDArray[np.complex128]
RealVector = npt.NDArray[np.float64]


@dataclass(frozen=True)
class BipartiteIndex:
    """Subsystem dimensions and the composite index convention ``k = i*dim_b + j``."""

    dim_a: int = constant.DIM_QUBIT
    dim_b: int = constant.DIM_QUTRIT

    def __post_init__(self) -> None:
        if self.dim_a < 1 or self.dim_b < 1:
            raise ArgumentException(
                ArgumentErrorCode.DIMENSION_MISMATCH,
                f"subsystem dimensions must be positive, got {self.dim_a}x{self.dim_b}",
            )

    @property
    def dim(self) -> int:
        return self.dim_a * self.dim_b

    def composite(self, i: int, j: int) -> int:
        """Composite index of the product basis vector ``|ij>``."""
        return i * self.dim_b + j

    def split(self, k: int) -> tuple[int, int]:
        """Inverse of :meth:`composite`."""
        return divmod(k, self.dim_b)

    def check(self, matrix: ComplexMatrix) -> None:
        """Raise DIMENSION_MISMATCH unless ``matrix`` is ``dim x dim``."""
        if matrix.shape != (self.dim, self.dim):
            raise ArgumentException(
                ArgumentErrorCode.DIMENSION_MISMATCH,
                f"expected a {self.dim}x{self.dim} matrix for "
                f"{self.dim_a}x{self.dim_b} subsystems, got {matrix.shape}",
            )


QUBIT_QUTRIT = BipartiteIndex()


@dataclass(frozen=True)
class HermitianSpectrum:
    """
    Eigen-decomposition ``M = V diag(eigenvalues) V^H``.

    Attributes:
        eigenvalues: Real eigenvalues in ascending order.
        eigenvectors: Columns are the orthonormal eigenvectors.
        sweeps: Jacobi sweeps used (0 for the lapack backend).
    """

    eigenvalues: RealVector
    eigenvectors: ComplexMatrix
    sweeps: int = 0

    def reconstruct(self) -> ComplexMatrix:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def as_matrix(data: npt.ArrayLike) -> ComplexMatrix:
    """Coerce ``data`` into a 2-D complex matrix."""
    matrix = np.asarray(data, dtype=np.complex128)
    if matrix.ndim != 2:
        raise ArgumentException(
            ArgumentErrorCode.DIMENSION_MISMATCH,
            f"expected a 2-D matrix, got an array of shape {matrix.shape}",
        )
    return matrix


def dagger(matrix: ComplexMatrix) -> ComplexMatrix:
    """Conjugate transpose, also over stacks of matrices."""
    return np.conj(np.swapaxes(matrix, -1, -2))


def max_abs(matrix: npt.ArrayLike) -> float:
    """Entry-wise max norm."""
    values = np.abs(np.asarray(matrix))
    return float(values.max()) if values.size else 0.0


def hermiticity_residual(matrix: ComplexMatrix) -> float:
    """``max|M - M^H|``."""
    return max_abs(matrix - dagger(matrix))


def _require_square(matrix: ComplexMatrix) -> None:
    if matrix.ndim < 2 or matrix.shape[-1] != matrix.shape[-2]:
        raise ArgumentException(
            ArgumentErrorCode.DIMENSION_MISMATCH,
            f"expected square matrices, got shape {matrix.shape}",
        )


def _require_hermitian(stack: ComplexMatrix, tol: float) -> None:
    residual = hermiticity_residual(stack)
    if residual > tol:
        raise NumericalException(
            NumericalErrorCode.NON_HERMITIAN,
            f"max|M - M^H| = {residual:.3e} exceeds {tol:.1e}",
            details=residual,
        )


def _rotate(
    a: ComplexMatrix, v: ComplexMatrix | None, p: int, q: int
) -> None:
    """Apply one complex Jacobi rotation in the (p, q) plane to every matrix of ``a``."""
    apq = a[:, p, q]
    mag = np.abs(apq)
    active = mag > 0.0
    safe = np.where(active, mag, 1.0)
    phase = np.where(active, apq / safe, 1.0)

    # A phase on column q makes a_pq real; the real Jacobi angle then zeroes it.
    tau = (a[:, q, q].real - a[:, p, p].real) / (2.0 * safe)
    t = np.where(tau >= 0.0, 1.0, -1.0) / (np.abs(tau) + np.hypot(1.0, tau))
    t = np.where(active, t, 0.0)
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c

    c_col = c[:, None]
    s_col = s[:, None]
    ph_col = phase[:, None]
    ph_conj = np.conj(ph_col)

    col_p = a[:, :, p].copy()
    col_q = a[:, :, q].copy()
    a[:, :, p] = c_col * col_p - s_col * ph_conj * col_q
    a[:, :, q] = s_col * col_p + c_col * ph_conj * col_q

    row_p = a[:, p, :].copy()
    row_q = a[:, q, :].copy()
    a[:, p, :] = c_col * row_p - s_col * ph_col * row_q
    a[:, q, :] = s_col * row_p + c_col * ph_col * row_q

    a[:, p, q] = 0.0
    a[:, q, p] = 0.0
    a[:, p, p] = a[:, p, p].real
    a[:, q, q] = a[:, q, q].real

    if v is not None:
        vec_p = v[:, :, p].copy()
        vec_q = v[:, :, q].copy()
        v[:, :, p] = c_col * vec_p - s_col * ph_conj * vec_q
        v[:, :, q] = s_col * vec_p + c_col * ph_conj * vec_q


def _jacobi(
    stack: ComplexMatrix,
    with_vectors: bool,
    max_sweeps: int,
    offdiag_tol: float,
) -> tuple[RealVector, ComplexMatrix | None, int]:
    a = np.array(stack, dtype=np.complex128, copy=True)
    a = 0.5 * (a + dagger(a))
    batch, n, _ = a.shape
    v = None
    if with_vectors:
        v = np.broadcast_to(np.eye(n, dtype=np.complex128), a.shape).copy()
    if batch == 0:
        return np.zeros((0, n)), v, 0

    scale = np.maximum(1.0, np.abs(a).max(axis=(1, 2)))
    off_mask = ~np.eye(n, dtype=bool)
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]

    sweeps = 0
    while True:
        if n > 1:
            off = np.abs(a[:, off_mask]).max(axis=1) / scale
        else:
            off = np.zeros(batch)
        if np.all(off <= offdiag_tol):
            break
        if sweeps >= max_sweeps:
            worst = float(off.max())
            raise NumericalException(
                NumericalErrorCode.NO_CONVERGENCE,
                f"Jacobi iteration exceeded {max_sweeps} sweeps "
                f"(relative off-diagonal {worst:.3e})",
                details=worst,
            )
        for p, q in pairs:
            _rotate(a, v, p, q)
        sweeps += 1

    eigenvalues = np.real(np.diagonal(a, axis1=1, axis2=2)).copy()
    order = np.argsort(eigenvalues, axis=1, kind="stable")
    eigenvalues = np.take_along_axis(eigenvalues, order, axis=1)
    if v is not None:
        v = np.take_along_axis(v, order[:, None, :], axis=2)
    return eigenvalues, v, sweeps


def hermitian_eigen(
    matrix: npt.ArrayLike,
    tol: float | None = None,
    cfg: NumericConfig | None = None,
) -> HermitianSpectrum:
    """
    Eigen-decomposition of a Hermitian matrix.

    Args:
        matrix: Square Hermitian matrix.
        tol: Accepted ``max|M - M^H|``; defaults to ``NumericConfig.hermitian_tol``.
        cfg: Numeric configuration; defaults to the global one.

    Returns:
        Ascending eigenvalues with orthonormal eigenvectors.

    Raises:
        ArgumentException: DIMENSION_MISMATCH for non-square input.
        NumericalException: NON_HERMITIAN, or NO_CONVERGENCE when the sweep
            budget is exhausted.
    """
    cfg = cfg or ConfigManager.get_numeric_config()
    m = as_matrix(matrix)
    _require_square(m)
    _require_hermitian(m, cfg.hermitian_tol if tol is None else tol)

    if cfg.eigen_backend == EigenBackendEnum.LAPACK:
        values, vectors = np.linalg.eigh(0.5 * (m + dagger(m)))
        return HermitianSpectrum(values, vectors, 0)

    values, vectors, sweeps = _jacobi(
        m[None, :, :], True, cfg.max_sweeps, cfg.offdiag_tol
    )
    logger.debug(f"jacobi converged in {sweeps} sweeps for a {m.shape[0]}x{m.shape[0]} matrix")
    return HermitianSpectrum(values[0], vectors[0], sweeps)


def hermitian_eigvalsh_batch(
    stack: npt.ArrayLike,
    tol: float | None = None,
    cfg: NumericConfig | None = None,
) -> RealVector:
    """
    Ascending eigenvalues of every matrix in a ``(batch, n, n)`` Hermitian stack.

    Large stacks are processed in chunks of ``NumericConfig.batch_chunk``.
    """
    cfg = cfg or ConfigManager.get_numeric_config()
    matrices = np.asarray(stack, dtype=np.complex128)
    if matrices.ndim != 3:
        raise ArgumentException(
            ArgumentErrorCode.DIMENSION_MISMATCH,
            f"expected a (batch, n, n) stack, got shape {matrices.shape}",
        )
    _require_square(matrices)
    _require_hermitian(matrices, cfg.hermitian_tol if tol is None else tol)

    out = np.empty(matrices.shape[:2], dtype=np.float64)
    for start in range(0, matrices.shape[0], cfg.batch_chunk):
        chunk = matrices[start : start + cfg.batch_chunk]
        if cfg.eigen_backend == EigenBackendEnum.LAPACK:
            out[start : start + len(chunk)] = np.linalg.eigvalsh(
                0.5 * (chunk + dagger(chunk))
            )
        else:
            values, _, _ = _jacobi(chunk, False, cfg.max_sweeps, cfg.offdiag_tol)
            out[start : start + len(chunk)] = values
    return out


def _selector(value: SubsystemEnum | str) -> SubsystemEnum:
    try:
        return SubsystemEnum(value)
    except ValueError as e:
        raise ArgumentException(
            ArgumentErrorCode.DIMENSION_MISMATCH,
            f"unknown subsystem selector {value!r}; use 'A' or 'B'",
        ) from e


def partial_trace(
    rho: npt.ArrayLike,
    idx: BipartiteIndex = QUBIT_QUTRIT,
    keep: SubsystemEnum | str = SubsystemEnum.A,
) -> ComplexMatrix:
    """
    Reduced matrix of one subsystem.

    Args:
        rho: ``(dim_a*dim_b)``-square matrix.
        idx: Subsystem dimensions.
        keep: The subsystem that survives the trace.

    Returns:
        ``dim_a x dim_a`` for ``keep=A``, ``dim_b x dim_b`` for ``keep=B``.
    """
    m = as_matrix(rho)
    idx.check(m)
    r = m.reshape(idx.dim_a, idx.dim_b, idx.dim_a, idx.dim_b)
    if _selector(keep) == SubsystemEnum.A:
        return np.einsum("ijkj->ik", r)
    return np.einsum("ijil->jl", r)


def partial_transpose(
    rho: npt.ArrayLike,
    idx: BipartiteIndex = QUBIT_QUTRIT,
    on: SubsystemEnum | str = SubsystemEnum.A,
) -> ComplexMatrix:
    """
    Transpose the indices of one subsystem.

    For ``on=A``: ``out[(i j), (i' j')] = rho[(i' j), (i j')]``.
    """
    m = as_matrix(rho)
    idx.check(m)
    r = m.reshape(idx.dim_a, idx.dim_b, idx.dim_a, idx.dim_b)
    if _selector(on) == SubsystemEnum.A:
        r = r.transpose(2, 1, 0, 3)
    else:
        r = r.transpose(0, 3, 2, 1)
    return np.ascontiguousarray(r).reshape(idx.dim, idx.dim)


def entropy_from_eigenvalues(values: npt.ArrayLike, clamp_tol: float) -> RealVector:
    """
    ``-sum(lambda * log2(lambda))`` over the last axis with ``0 log 0 = 0``.

    Eigenvalues in ``[-clamp_tol, 0]`` are treated as zero.

    Raises:
        NumericalException: NEGATIVE_EIGENVALUE below ``-clamp_tol``.
    """
    lam = np.asarray(values, dtype=np.float64)
    if lam.size and lam.min() < -clamp_tol:
        worst = float(lam.min())
        raise NumericalException(
            NumericalErrorCode.NEGATIVE_EIGENVALUE,
            f"eigenvalue {worst:.3e} is below -{clamp_tol:.1e}",
            details=worst,
        )
    positive = lam > 0.0
    safe = np.where(positive, lam, 1.0)
    return np.where(positive, -safe * np.log2(safe), 0.0).sum(axis=-1)


def von_neumann_entropy(
    rho: npt.ArrayLike,
    clamp_tol: float | None = None,
    cfg: NumericConfig | None = None,
) -> float:
    """
    Von Neumann entropy in bits.

    Args:
        rho: Hermitian unit-trace matrix.
        clamp_tol: Eigenvalue clamp; defaults to ``NumericConfig.clamp_tol``.
        cfg: Numeric configuration; defaults to the global one.

    Raises:
        NumericalException: TRACE_NOT_ONE, NON_HERMITIAN or NEGATIVE_EIGENVALUE.
    """
    cfg = cfg or ConfigManager.get_numeric_config()
    clamp_tol = cfg.clamp_tol if clamp_tol is None else clamp_tol
    m = as_matrix(rho)
    trace = complex(np.trace(m))
    if abs(trace - 1.0) > 1e-10:
        raise NumericalException(
            NumericalErrorCode.TRACE_NOT_ONE,
            f"entropy needs unit trace, got {trace.real:.12g}",
            details=trace.real,
        )
    spectrum = hermitian_eigen(m, cfg=cfg)
    return max(float(entropy_from_eigenvalues(spectrum.eigenvalues, clamp_tol)), 0.0)


def tensor_product(a: npt.ArrayLike, b: npt.ArrayLike) -> ComplexMatrix:
    """Kronecker product ``(A x B)[(i j), (k l)] = A[i, k] * B[j, l]``."""
    return np.kron(as_matrix(a), as_matrix(b))
