import math

import numpy as np
import pytest

from discordlib import linalg
from discordlib.config import NumericConfig
from discordlib.enums import EigenBackendEnum
from discordlib.exception import (
    ArgumentErrorCode,
    ArgumentException,
    NumericalErrorCode,
    NumericalException,
)
from discordlib.linalg import QUBIT_QUTRIT, BipartiteIndex


def random_hermitian(rng, n):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return 0.5 * (g + g.conj().T)


class TestBipartiteIndex:
    """Test the composite index convention"""

    def test_composite_is_qubit_major(self):
        """Test k = 3i + j for the 2x3 space"""
        assert [QUBIT_QUTRIT.composite(i, j) for i in range(2) for j in range(3)] == [
            0, 1, 2, 3, 4, 5,
        ]
        assert QUBIT_QUTRIT.split(4) == (1, 1)

    def test_check_rejects_wrong_shape(self):
        """Test a 4x4 matrix is not a 2x3 state"""
        with pytest.raises(ArgumentException) as exc:
            QUBIT_QUTRIT.check(np.eye(4))
        assert exc.value.code == ArgumentErrorCode.DIMENSION_MISMATCH

    def test_non_positive_dimension(self):
        """Test zero dimensions are rejected"""
        with pytest.raises(ArgumentException):
            BipartiteIndex(0, 3)


class TestHermitianEigen:
    """Test the Jacobi eigensolver"""

    @pytest.mark.parametrize("n", [1, 2, 3, 6])
    def test_reconstruction_and_orthonormality(self, rng, n):
        """Test V diag(w) V^H reproduces the input and V is unitary"""
        m = random_hermitian(rng, n)

        spectrum = linalg.hermitian_eigen(m)

        v = spectrum.eigenvectors
        assert linalg.max_abs(spectrum.reconstruct() - m) < 1e-12
        assert linalg.max_abs(v.conj().T @ v - np.eye(n)) < 1e-12
        assert np.all(np.diff(spectrum.eigenvalues) >= 0)

    @pytest.mark.parametrize("n", [2, 3, 6])
    def test_random_matrices(self, rng, n):
        """Test residual, orthonormality and trace over 1000 random matrices"""
        worst = 0.0
        for _ in range(1000):
            m = random_hermitian(rng, n)
            spectrum = linalg.hermitian_eigen(m)
            v = spectrum.eigenvectors
            worst = max(
                worst,
                linalg.max_abs(spectrum.reconstruct() - m),
                linalg.max_abs(v.conj().T @ v - np.eye(n)),
                abs(spectrum.eigenvalues.sum() - np.trace(m).real),
            )

        assert worst <= 1e-10

    def test_identity_and_pauli_x(self):
        """Test the spectra of I6 and sigma_x"""
        np.testing.assert_allclose(linalg.hermitian_eigen(np.eye(6)).eigenvalues, np.ones(6))
        np.testing.assert_allclose(
            linalg.hermitian_eigen(np.array([[0.0, 1.0], [1.0, 0.0]])).eigenvalues,
            [-1.0, 1.0],
            atol=1e-15,
        )

    def test_matches_lapack(self, rng):
        """Test Jacobi and lapack eigenvalues agree"""
        m = random_hermitian(rng, 6)

        jacobi = linalg.hermitian_eigen(m).eigenvalues
        lapack = linalg.hermitian_eigen(
            m, cfg=NumericConfig(eigen_backend=EigenBackendEnum.LAPACK)
        ).eigenvalues

        np.testing.assert_allclose(jacobi, lapack, atol=1e-12)

    def test_diagonal_input_needs_no_sweep(self):
        """Test an already diagonal matrix converges immediately"""
        spectrum = linalg.hermitian_eigen(np.diag([3.0, -1.0, 2.0]))

        assert spectrum.sweeps == 0
        np.testing.assert_allclose(spectrum.eigenvalues, [-1.0, 2.0, 3.0])

    def test_non_hermitian_input(self):
        """Test a non-Hermitian matrix is rejected"""
        with pytest.raises(NumericalException) as exc:
            linalg.hermitian_eigen(np.array([[1.0, 1.0], [0.0, 1.0]]))
        assert exc.value.code == NumericalErrorCode.NON_HERMITIAN

    def test_non_square_input(self):
        """Test a rectangular matrix is rejected"""
        with pytest.raises(ArgumentException):
            linalg.hermitian_eigen(np.ones((2, 3)))

    def test_sweep_budget_exhausted(self, rng):
        """Test NO_CONVERGENCE when the sweep budget is too small"""
        cfg = NumericConfig(max_sweeps=1, offdiag_tol=1e-15)

        with pytest.raises(NumericalException) as exc:
            linalg.hermitian_eigen(random_hermitian(rng, 6), cfg=cfg)
        assert exc.value.code == NumericalErrorCode.NO_CONVERGENCE

    def test_batch_matches_single(self, rng):
        """Test the batched eigenvalues equal per-matrix results"""
        stack = np.stack([random_hermitian(rng, 3) for _ in range(10)])

        batch = linalg.hermitian_eigvalsh_batch(stack, cfg=NumericConfig(batch_chunk=3))

        for m, values in zip(stack, batch):
            np.testing.assert_allclose(
                values, linalg.hermitian_eigen(m).eigenvalues, atol=1e-13
            )

    def test_batch_requires_stack(self):
        """Test a single matrix is not a stack"""
        with pytest.raises(ArgumentException):
            linalg.hermitian_eigvalsh_batch(np.eye(3))


class TestPartialOperations:
    """Test partial trace and partial transpose"""

    def test_partial_trace_of_product(self, rng):
        """Test the reduced states of a product are its factors"""
        a = np.array([[0.7, 0.1j], [-0.1j, 0.3]])
        b = np.diag([0.5, 0.3, 0.2]).astype(complex)
        rho = linalg.tensor_product(a, b)

        np.testing.assert_allclose(linalg.partial_trace(rho, keep="A"), a, atol=1e-15)
        np.testing.assert_allclose(linalg.partial_trace(rho, keep="B"), b, atol=1e-15)

    def test_partial_transpose_element(self):
        """Test the partial transpose moves |00><11| to |10><01|"""
        rho = np.zeros((6, 6), dtype=complex)
        rho[QUBIT_QUTRIT.composite(0, 0), QUBIT_QUTRIT.composite(1, 1)] = 1.0

        out = linalg.partial_transpose(rho, on="A")

        assert out[QUBIT_QUTRIT.composite(1, 0), QUBIT_QUTRIT.composite(0, 1)] == 1.0
        assert np.count_nonzero(out) == 1

    def test_partial_transpose_twice_is_identity(self, rng):
        """Test transposing the same side twice restores the matrix"""
        rho = random_hermitian(rng, 6)

        for side in ("A", "B"):
            twice = linalg.partial_transpose(linalg.partial_transpose(rho, on=side), on=side)
            np.testing.assert_array_equal(twice, rho)

    def test_maximally_mixed_marginals(self):
        """Test I6/6 reduces to I2/2 and I3/3"""
        rho = np.eye(6) / 6

        np.testing.assert_allclose(linalg.partial_trace(rho, keep="A"), np.eye(2) / 2, atol=1e-16)
        np.testing.assert_allclose(linalg.partial_trace(rho, keep="B"), np.eye(3) / 3, atol=1e-16)

    @pytest.mark.parametrize("side", ["A", "B"])
    def test_partial_transpose_preserves_trace_and_norm(self, rng, side):
        """Test trace, Hermiticity and Frobenius norm survive the partial transpose"""
        for _ in range(20):
            rho = random_hermitian(rng, 6)

            out = linalg.partial_transpose(rho, on=side)

            assert np.trace(out) == pytest.approx(np.trace(rho), abs=1e-14)
            assert linalg.hermiticity_residual(out) <= 1e-15
            assert np.linalg.norm(out) == pytest.approx(np.linalg.norm(rho), rel=1e-14)

    def test_unknown_selector(self):
        """Test an unknown subsystem selector"""
        with pytest.raises(ArgumentException):
            linalg.partial_trace(np.eye(6) / 6, keep="C")


class TestTensorProduct:
    """Test the Kronecker product"""

    def test_associative(self, rng):
        """Test (A x B) x C = A x (B x C) on random triples"""
        for _ in range(20):
            a, b, c = (random_hermitian(rng, n) for n in (2, 3, 2))

            left = linalg.tensor_product(linalg.tensor_product(a, b), c)
            right = linalg.tensor_product(a, linalg.tensor_product(b, c))

            assert linalg.max_abs(left - right) <= 1e-12

    def test_trace_is_multiplicative(self, rng):
        """Test Tr(A x B) = Tr A Tr B"""
        a, b = random_hermitian(rng, 2), random_hermitian(rng, 3)

        product = linalg.tensor_product(a, b)

        assert np.trace(product) == pytest.approx(np.trace(a) * np.trace(b), abs=1e-12)

    def test_identity_with_diagonal(self):
        """Test I2 x diag(1, g, g) = diag(1, g, g, 1, g, g)"""
        g = 0.3

        product = linalg.tensor_product(np.eye(2), np.diag([1.0, g, g]))

        np.testing.assert_array_equal(product, np.diag([1.0, g, g, 1.0, g, g]))
        np.testing.assert_array_equal(linalg.tensor_product(np.eye(2), np.eye(3)), np.eye(6))


class TestEntropy:
    """Test the von Neumann entropy"""

    @pytest.mark.parametrize("d", [2, 3, 6])
    def test_maximally_mixed(self, d):
        """Test S(I/d) = log2 d"""
        assert linalg.von_neumann_entropy(np.eye(d) / d) == pytest.approx(math.log2(d), abs=1e-12)

    def test_pure_state(self):
        """Test a pure state has zero entropy"""
        psi = np.array([1.0, 1.0j, 0.0]) / math.sqrt(2)

        assert linalg.von_neumann_entropy(np.outer(psi, psi.conj())) == pytest.approx(0.0, abs=1e-12)

    def test_binary_uniform(self):
        """Test diag(1/2, 1/2, 0, 0, 0, 0) carries one bit"""
        assert linalg.von_neumann_entropy(np.diag([0.5, 0.5, 0, 0, 0, 0])) == pytest.approx(1.0, abs=1e-12)

    def test_unitary_invariance(self, rng):
        """Test S(U rho U^H) = S(rho) for random unitaries"""
        for _ in range(20):
            g = random_hermitian(rng, 6)
            rho = g @ g + 0.1 * np.eye(6)
            rho = rho / np.trace(rho).real
            u = linalg.hermitian_eigen(random_hermitian(rng, 6)).eigenvectors

            rotated = u @ rho @ u.conj().T

            assert abs(
                linalg.von_neumann_entropy(rotated) - linalg.von_neumann_entropy(rho)
            ) <= 1e-9

    def test_small_negative_eigenvalues_are_clamped(self):
        """Test eigenvalues just below zero count as zero"""
        assert linalg.entropy_from_eigenvalues([-1e-12, 0.5, 0.5], 1e-10) == pytest.approx(1.0)

    def test_negative_eigenvalue(self):
        """Test eigenvalues below the clamp raise"""
        with pytest.raises(NumericalException) as exc:
            linalg.entropy_from_eigenvalues([-1e-3, 0.5, 0.5], 1e-10)
        assert exc.value.code == NumericalErrorCode.NEGATIVE_EIGENVALUE

    def test_trace_not_one(self):
        """Test a non-normalised matrix is rejected"""
        with pytest.raises(NumericalException) as exc:
            linalg.von_neumann_entropy(np.eye(2))
        assert exc.value.code == NumericalErrorCode.TRACE_NOT_ONE

    def test_vectorised_over_rows(self):
        """Test the kernel works over the last axis of a stack"""
        values = linalg.entropy_from_eigenvalues([[0.5, 0.5], [1.0, 0.0]], 1e-10)

        np.testing.assert_allclose(values, [1.0, 0.0])
