import math

import numpy as np
import pytest

from discordlib import channels, correlations, linalg, states
from discordlib.config import OptimizerConfig
from discordlib.exception import ArgumentErrorCode, ArgumentException
from discordlib.linalg import BipartiteIndex
from discordlib.schema import MeasurementSetting


def shannon(probabilities):
    return -sum(x * math.log2(x) for x in probabilities if x > 0)


def bloch(theta, phi):
    return np.array(
        [math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)]
    )


def random_product(rng):
    return states.product_state(
        states.random_local_state(rng, 2), states.random_local_state(rng, 3)
    )


class TestProjectors:
    """Test the Bloch-sphere projector pair"""

    def test_north_pole(self):
        """Test theta = 0 gives the computational basis"""
        pi_1, pi_2 = correlations.projectors(MeasurementSetting(theta=0.0, phi=0.0))

        np.testing.assert_allclose(pi_1, [[1, 0], [0, 0]], atol=1e-16)
        np.testing.assert_allclose(pi_2, [[0, 0], [0, 1]], atol=1e-16)

    def test_equator(self):
        """Test theta = pi/2, phi = 0 gives the |+> projector"""
        pi_1, _ = correlations.projectors(MeasurementSetting(theta=math.pi / 2, phi=0.0))

        np.testing.assert_allclose(pi_1, 0.5 * np.ones((2, 2)), atol=1e-15)

    @pytest.mark.parametrize("theta,phi", [(0.3, 1.1), (1.2, 4.0), (2.9, 6.2)])
    def test_rank_one_idempotent_pair(self, theta, phi):
        """Test each projector is rank one and idempotent and the pair sums to I"""
        pi_1, pi_2 = correlations.projectors(MeasurementSetting(theta=theta, phi=phi))

        for pi in (pi_1, pi_2):
            assert np.abs(pi @ pi - pi).max() <= 1e-14
            assert np.linalg.matrix_rank(pi) == 1
        np.testing.assert_allclose(pi_1 + pi_2, np.eye(2), atol=1e-15)


class TestMeasurementSetting:
    """Test the angle ranges of a measurement setting"""

    def test_out_of_range(self):
        """Test theta = pi is outside the half-open range"""
        with pytest.raises(ValueError):
            MeasurementSetting(theta=math.pi, phi=0.0)

    @pytest.mark.parametrize("theta,phi", [(-0.4, 1.0), (4.0, 0.5), (0.2, -1.0), (math.pi, 0.0)])
    def test_normalized_is_in_range(self, theta, phi):
        """Test folding arbitrary angles keeps the projector pair"""
        folded = MeasurementSetting.normalized(theta, phi)

        assert 0.0 <= folded.theta < math.pi
        assert 0.0 <= folded.phi < 2 * math.pi
        n = np.array([math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)])
        m = np.array([
            math.sin(folded.theta) * math.cos(folded.phi),
            math.sin(folded.theta) * math.sin(folded.phi),
            math.cos(folded.theta),
        ])
        assert min(np.abs(n - m).max(), np.abs(n + m).max()) < 1e-12

    @pytest.mark.parametrize("theta,phi", [(-0.4, 1.0), (4.0, 0.5), (0.2, -1.0), (1.0, 7.0)])
    def test_fold_keeps_bloch_vector(self, theta, phi):
        """Test folding away from the poles keeps the same Bloch vector"""
        folded = MeasurementSetting.normalized(theta, phi)

        np.testing.assert_allclose(bloch(folded.theta, folded.phi), bloch(theta, phi), atol=1e-12)

    def test_south_pole_swaps_projectors(self):
        """Test theta = pi folds to the north pole with the pair swapped"""
        folded = MeasurementSetting.normalized(math.pi, 0.3)
        pi_1, pi_2 = correlations.projectors(folded)

        assert (folded.theta, folded.phi) == (0.0, 0.0)
        np.testing.assert_allclose(pi_2, np.diag([0.0, 1.0]), atol=1e-16)
        np.testing.assert_allclose(pi_1, np.diag([1.0, 0.0]), atol=1e-16)


class TestNegativity:
    """Test the negativity"""

    def test_maximally_mixed(self):
        """Test I/6 is PPT"""
        assert correlations.negativity(states.maximally_mixed()) == pytest.approx(0.0, abs=1e-12)

    def test_separable_point(self):
        """Test the family is separable at p = 1/3"""
        assert correlations.negativity(states.family_state(1 / 3)) <= 1e-9

    def test_embedded_bell_state(self):
        """Test N = 1 for the maximally entangled two-qubit sector"""
        assert correlations.negativity(states.embedded_bell_state()) == pytest.approx(1.0, abs=1e-10)

    @pytest.mark.parametrize("p,gamma", [(0.15, 1.0), (0.15, 0.5), (0.1, 0.2), (0.4, 1.0), (0.45, 0.9)])
    def test_closed_form(self, p, gamma):
        """Test the block-spectrum closed form of the dephased family"""
        rho = channels.evolve_closed_form(states.family_state(p), gamma)
        q = 1 - 2 * p
        expected = max(0.0, q * gamma - p) + max(0.0, p * gamma - q)

        assert correlations.negativity(rho) == pytest.approx(expected, abs=1e-10)

    def test_at_time_zero(self):
        """Test N = 1 - 3p before any dephasing"""
        assert correlations.negativity(states.family_state(0.15)) == pytest.approx(0.55, abs=1e-12)

    def test_side_independent(self, rng):
        """Test transposing the qutrit gives the same value"""
        rho = states.random_state(rng)

        assert correlations.negativity(rho, "A") == pytest.approx(
            correlations.negativity(rho, "B"), abs=1e-12
        )


class TestMutualInformation:
    """Test the quantum mutual information"""

    def test_product_state(self, rng):
        """Test product states carry no correlations"""
        assert correlations.mutual_information(random_product(rng)) == pytest.approx(0.0, abs=1e-9)

    def test_embedded_bell_state(self):
        """Test I = 2 bits"""
        assert correlations.mutual_information(states.embedded_bell_state()) == pytest.approx(2.0, abs=1e-10)

    def test_family_state_from_block_spectra(self):
        """Test I(0) of the family against its analytic spectra"""
        p = 0.23
        q = 1 - 2 * p
        s_a = shannon([(1 - p) / 2, (1 + p) / 2])
        s_b = shannon([0.5 - p / 2, p, 0.5 - p / 2])
        s_ab = shannon([p, p, q])
        expected = s_a + s_b - s_ab

        assert correlations.mutual_information(states.family_state(p)) == pytest.approx(expected, abs=1e-10)


class TestConditionalEntropy:
    """Test the measured conditional entropy"""

    def test_product_state(self, rng):
        """Test a measurement on A leaves S(B) unchanged"""
        rho = random_product(rng)
        s_b = linalg.von_neumann_entropy(rho.reduced("B"))

        for theta, phi in [(0.0, 0.0), (1.0, 2.0), (2.5, 5.0)]:
            value = correlations.measured_conditional_entropy(
                rho, MeasurementSetting(theta=theta, phi=phi)
            )
            assert value == pytest.approx(s_b, abs=1e-10)

    def test_classically_correlated_state(self):
        """Test 0 bits in the z basis and 1 bit on the equator"""
        rho = states.classically_correlated_state()

        z = correlations.measured_conditional_entropy(rho, MeasurementSetting(theta=0.0, phi=0.0))
        x = correlations.measured_conditional_entropy(rho, MeasurementSetting(theta=math.pi / 2, phi=0.0))

        assert z == pytest.approx(0.0, abs=1e-12)
        assert x == pytest.approx(1.0, abs=1e-12)

    def test_bounds_on_grid(self, rng):
        """Test 0 <= sum p_k S(rho_k) <= log2 3 everywhere"""
        for rho in (states.random_state(rng), states.family_state(0.15), states.embedded_bell_state()):
            _, _, values = correlations.conditional_entropy_grid(rho, 13, 25)
            assert values.min() >= 0.0
            assert values.max() <= math.log2(3) + 1e-12

    def test_qubit_required(self):
        """Test measurements need a qubit on side A"""
        rho = states.maximally_mixed(BipartiteIndex(3, 2))

        with pytest.raises(ArgumentException) as exc:
            correlations.measured_conditional_entropy(rho, MeasurementSetting(theta=0.0, phi=0.0))
        assert exc.value.code == ArgumentErrorCode.DIMENSION_MISMATCH


class TestMinimization:
    """Test the grid plus simplex minimiser"""

    @pytest.mark.parametrize("p", [0.15, 0.23])
    def test_refinement_never_worse_than_grid(self, p):
        """Test the refined minimum does not exceed the grid minimum"""
        rho = channels.evolve_closed_form(states.family_state(p), 0.5)

        minimum = correlations.minimize_conditional_entropy(rho)

        assert minimum.value <= minimum.grid_value + 1e-12
        assert minimum.evaluations > 61 * 121

    def test_grid_only(self, rng):
        """Test refine_iterations = 0 returns the grid minimum"""
        opt = OptimizerConfig(coarse_grid_theta=11, coarse_grid_phi=21, refine_iterations=0)

        minimum = correlations.minimize_conditional_entropy(states.random_state(rng), opt)

        assert minimum.value == minimum.grid_value
        assert minimum.evaluations == 11 * 21

    def test_random_state_refines_off_grid(self, rng):
        """Test the simplex improves a coarse grid on a generic state"""
        rho = states.random_state(rng)
        coarse = OptimizerConfig(coarse_grid_theta=5, coarse_grid_phi=9)

        refined = correlations.minimize_conditional_entropy(rho, coarse)

        assert refined.value < refined.grid_value
        assert refined.evaluations > 5 * 9


class TestDiscord:
    """Test classical correlation and discord"""

    def test_product_states(self, rng):
        """Test product states have no classical correlation or discord"""
        for _ in range(5):
            report = correlations.discord(random_product(rng))
            assert abs(report.classical) <= 1e-6
            assert abs(report.discord) <= 1e-6

    def test_maximally_mixed(self):
        """Test I/6 has zero discord"""
        report = correlations.discord(states.maximally_mixed())

        assert abs(report.discord) <= 1e-6
        assert report.negativity == pytest.approx(0.0, abs=1e-12)

    def test_classically_correlated_state(self):
        """Test C = 1 bit reached in the z basis"""
        classical, setting = correlations.classical_correlation(states.classically_correlated_state())

        assert classical == pytest.approx(1.0, abs=1e-9)
        assert min(setting.theta, math.pi - setting.theta) < 1e-3

    @pytest.mark.parametrize("p", [0.1, 0.15, 0.23, 0.3])
    def test_decomposition_is_exact(self, p):
        """Test classical + discord == mutual information bit for bit"""
        report = correlations.discord(states.family_state(p))

        assert report.classical + report.discord == report.mutual_information
        assert report.discord >= -1e-6

    def test_invariant_discord(self):
        """Test discord of p = 0.23 is unchanged by dephasing"""
        rho0 = states.family_state(0.23)
        values = [
            correlations.discord(channels.evolve_closed_form(rho0, gamma)).discord
            for gamma in (1.0, 0.5, 0.1)
        ]

        assert values[0] > 0.01
        assert max(values) - min(values) <= 1e-4

    def test_report_json_aliases(self):
        """Test the report serialises with camelCase names"""
        report = correlations.discord(states.family_state(0.15))

        dumped = report.model_dump(by_alias=True)

        assert {"mutualInformation", "optimalSetting", "optimizerEvals"} <= set(dumped)


@pytest.mark.slow
class TestBruteForceOracle:
    """Test the production optimizer against a 721 x 1441 grid"""

    @pytest.mark.parametrize("p", [0.15, 0.23])
    @pytest.mark.parametrize("gamma", [1.0, 0.5, 0.1])
    def test_matches_fine_grid(self, p, gamma):
        """Test the minimum agrees with brute force within 1e-4"""
        rho = channels.evolve_closed_form(states.family_state(p), gamma)

        _, _, fine = correlations.conditional_entropy_grid(rho, 721, 1441)
        minimum = correlations.minimize_conditional_entropy(rho)

        assert abs(minimum.value - fine.min()) <= 1e-4
