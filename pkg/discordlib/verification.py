# SPDX-License-Identifier: MIT
"""
Self-verification suites run by ``discordlib verify``.

Every suite evaluates one metric on fixed seeds and compares it to a
threshold. A suite that raises a library error is reported as failed with the
error message instead of aborting the run.
"""

import math
from collections.abc import Callable

import numpy as np
import pandas as pd

from discordlib import channels, correlations, linalg, states
from discordlib.channels import KrausChannel
from discordlib.config import ConfigManager, NumericConfig, OptimizerConfig
from discordlib.dynamics import make_grid, negativity_closed_form
from discordlib.enums import SubsystemEnum
from discordlib.exception import BaseException
from discordlib.linalg import QUBIT_QUTRIT
from discordlib.logging import logger
from discordlib.schema import VerificationResult

DEFAULT_SEED = 20110101

ChannelFactory = Callable[[float], KrausChannel]


def corrupted_dephasing(gamma_t: float) -> KrausChannel:
    """Dephasing Kraus set with ``omega`` doubled; violates completeness for t > 0."""
    gamma = channels.coherence_factor(gamma_t)
    omega = 2.0 * math.sqrt(1.0 - gamma * gamma)
    return KrausChannel.of(
        [
            np.diag([1.0, gamma, gamma]),
            np.diag([0.0, omega, 0.0]),
            np.diag([0.0, 0.0, omega]),
        ]
    )


FAULTS: dict[str, ChannelFactory] = {"omega-doubled": corrupted_dephasing}


def _result(suite: str, metric: float, threshold: float, detail: str = "") -> VerificationResult:
    return VerificationResult(
        suite=suite,
        passed=bool(metric <= threshold),
        metric=float(metric),
        threshold=threshold,
        detail=detail,
    )


def _family_negativities(p: float, gammas: np.ndarray, cfg: NumericConfig) -> np.ndarray:
    rho0 = states.family_state(p)
    transposed = np.stack(
        [
            linalg.partial_transpose(rho0.matrix * channels.damping_pattern(g), QUBIT_QUTRIT)
            for g in gammas
        ]
    )
    eta = linalg.hermitian_eigvalsh_batch(transposed, cfg=cfg)
    return np.maximum(np.sum(np.abs(eta) - eta, axis=1), 0.0)


class _Suites:
    """Suite bodies sharing the fixtures of one verification run."""

    def __init__(
        self,
        factory: ChannelFactory,
        seed: int,
        opt: OptimizerConfig,
        cfg: NumericConfig,
    ):
        self.factory = factory
        self.opt = opt
        self.cfg = cfg
        self.rng = np.random.default_rng(seed)
        self.samples = np.linspace(0.0, 10.0, 20)
        self.grid = np.array(make_grid(0.0, 10.0, 0.05))
        self.random_states = np.stack(
            [states.random_state(self.rng).matrix for _ in range(100)]
        )

    def completeness(self) -> VerificationResult:
        worst = 0.0
        for gt in self.samples:
            channel = self.factory(float(gt))
            worst = max(
                worst,
                channels.completeness_residual(channel),
                channels.completeness_residual(channels.lift_to_composite(channel)),
            )
        return _result(
            "kraus-completeness", worst, 1e-14, f"max completeness residual {worst:.3e}"
        )

    def dual_path(self) -> VerificationResult:
        worst = 0.0
        for gt in self.samples:
            lifted = channels.lift_to_composite(self.factory(float(gt)))
            via_kraus = channels.operator_sum(lifted, self.random_states)
            gamma = channels.coherence_factor(float(gt))
            closed = self.random_states * channels.damping_pattern(gamma)
            worst = max(worst, linalg.max_abs(via_kraus - closed))
        return _result(
            "operator-sum-vs-closed-form",
            worst,
            1e-12,
            f"max residual {worst:.3e} over 100 states x 20 times",
        )

    def populations(self) -> VerificationResult:
        before = np.diagonal(self.random_states, axis1=1, axis2=2)
        worst = 0.0
        for gt in self.samples:
            lifted = channels.lift_to_composite(self.factory(float(gt)))
            after = np.diagonal(
                channels.operator_sum(lifted, self.random_states), axis1=1, axis2=2
            )
            worst = max(worst, linalg.max_abs(after - before))
        return _result("population-invariance", worst, 1e-14)

    def closed_form_negativity(self) -> VerificationResult:
        gammas = np.array([channels.coherence_factor(g) for g in self.grid])
        worst = 0.0
        for p in (0.10, 0.15, 0.23, 0.30):
            numeric = _family_negativities(p, gammas, self.cfg)
            exact = np.array([negativity_closed_form(p, g) for g in gammas])
            worst = max(worst, linalg.max_abs(numeric - exact))
        return _result(
            "closed-form-negativity",
            worst,
            1e-9,
            f"p in (0.10, 0.15, 0.23, 0.30) over {len(gammas)} grid points",
        )

    def separability(self) -> VerificationResult:
        gammas = np.array([channels.coherence_factor(g) for g in self.grid])
        worst = float(_family_negativities(states.SEPARABLE_P, gammas, self.cfg).max())
        return _result("separable-point", worst, 1e-9, "p = 1/3")

    def eigensolver(self) -> VerificationResult:
        worst_residual = 0.0
        worst_orthonormality = 0.0
        for _ in range(50):
            g = self.rng.normal(size=(6, 6)) + 1j * self.rng.normal(size=(6, 6))
            m = 0.5 * (g + g.conj().T)
            spectrum = linalg.hermitian_eigen(m, cfg=self.cfg)
            v = spectrum.eigenvectors
            worst_residual = max(worst_residual, linalg.max_abs(spectrum.reconstruct() - m))
            worst_orthonormality = max(
                worst_orthonormality, linalg.max_abs(v.conj().T @ v - np.eye(6))
            )
        worst = max(worst_residual, worst_orthonormality)
        return _result(
            "eigensolver",
            worst,
            1e-10,
            f"reconstruction {worst_residual:.3e}, orthonormality {worst_orthonormality:.3e}",
        )

    def product_states(self) -> VerificationResult:
        worst = 0.0
        for _ in range(20):
            rho = states.product_state(
                states.random_local_state(self.rng, 2),
                states.random_local_state(self.rng, 3),
                cfg=self.cfg,
            )
            report = correlations.discord(rho, self.opt, self.cfg)
            worst = max(worst, abs(report.discord), report.mutual_information)
        return _result("product-states", worst, 1e-6, "max of |D| and I over 20 states")

    def maximally_mixed(self) -> VerificationResult:
        report = correlations.discord(states.maximally_mixed(), self.opt, self.cfg)
        return _result("maximally-mixed", abs(report.discord), 1e-6)

    def decomposition(self) -> VerificationResult:
        worst = 0.0
        for p in (0.15, 0.23):
            report = correlations.discord(states.family_state(p), self.opt, self.cfg)
            gap = report.classical + report.discord - report.mutual_information
            worst = max(worst, abs(gap))
        return _result("classical-plus-discord", worst, 0.0, "C + D - I, bit exact")

    def bell_negativity(self) -> VerificationResult:
        value = correlations.negativity(
            states.embedded_bell_state(), SubsystemEnum.A, self.cfg
        )
        return _result("embedded-bell-negativity", abs(value - 1.0), 1e-10, f"N = {value:.15g}")

    def all(self) -> dict[str, Callable[[], VerificationResult]]:
        return {
            "kraus-completeness": self.completeness,
            "operator-sum-vs-closed-form": self.dual_path,
            "population-invariance": self.populations,
            "closed-form-negativity": self.closed_form_negativity,
            "separable-point": self.separability,
            "eigensolver": self.eigensolver,
            "product-states": self.product_states,
            "maximally-mixed": self.maximally_mixed,
            "classical-plus-discord": self.decomposition,
            "embedded-bell-negativity": self.bell_negativity,
        }


def run_verification(
    channel_factory: ChannelFactory = channels.dephasing_from_gamma_t,
    seed: int = DEFAULT_SEED,
    opt: OptimizerConfig | None = None,
    cfg: NumericConfig | None = None,
) -> list[VerificationResult]:
    """
    Run every suite and return one result per suite, in a fixed order.

    Args:
        channel_factory: Builds the qutrit Kraus set for a Gamma*t; replace it
            to check that a broken channel is caught.
        seed: Seed of the random fixtures.
        opt: Optimizer settings of the correlation suites.
        cfg: Numeric configuration.
    """
    opt = opt or ConfigManager.get_optimizer_config()
    cfg = cfg or ConfigManager.get_numeric_config()
    suites = _Suites(channel_factory, seed, opt, cfg)
    results = []
    for name, suite in suites.all().items():
        try:
            result = suite()
        except BaseException as e:
            metric = e.details if isinstance(e.details, float) else math.inf
            result = VerificationResult(
                suite=name, passed=False, metric=metric, threshold=0.0, detail=e.message
            )
        logger.info(
            f"verify {result.suite}: {'pass' if result.passed else 'FAIL'} "
            f"metric={result.metric:.3e}"
        )
        results.append(result)
    return results


def format_table(results: list[VerificationResult]) -> str:
    """Fixed-width pass/fail table."""
    frame = pd.DataFrame(
        [
            {
                "suite": r.suite,
                "status": "PASS" if r.passed else "FAIL",
                "metric": f"{r.metric:.3e}",
                "threshold": f"{r.threshold:.1e}",
                "detail": r.detail,
            }
            for r in results
        ]
    )
    return frame.to_string(index=False)
