"""Randomised cross-checks of the closed forms against the linear-system oracle."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PolarizerError
from .oracle import oracle_scatter
from .params import ModelParams, ProbeEnergy
from .scattering import amplitudes4

ORACLE_RTOL = 1e-10
FLUX_TOL = 1e-10


def draw_params(rng: np.random.Generator, base: ModelParams, *, lossless: bool,
                max_decay: float = 5.0) -> tuple[ModelParams, ProbeEnergy]:
    """One random parameter set around ``base`` (level energies are kept)."""
    g1, g2 = rng.uniform(0.0, 50.0, 2)
    rabi = rng.uniform(0.0, 100.0)
    drive = rng.uniform(-50.0, 50.0)
    delta = rng.uniform(-100.0, 100.0)
    decays = np.zeros(3) if lossless else rng.uniform(0.0, max_decay, 3)
    params = base.replace(big_gamma1=g1, big_gamma2=g2, rabi=rabi, delta_drive=drive,
                          gamma2=decays[0], gamma3=decays[1], gamma4=decays[2])
    return params, ProbeEnergy.from_detuning(params, delta)


@dataclass
class VerificationReport:
    draws: int
    seed: int
    max_flux_dev: float = 0.0
    max_t_dev: float = 0.0
    max_r_dev: float = 0.0
    max_oracle_jump_dev: float = 0.0
    failures: int = 0
    first_failure: str = ""

    @property
    def passed(self) -> bool:
        return (self.failures == 0 and self.max_flux_dev <= FLUX_TOL
                and self.max_t_dev <= ORACLE_RTOL and self.max_r_dev <= ORACLE_RTOL)


def rel_dev(a: complex, b: complex) -> float:
    """|a - b| relative to max(1, |a|); amplitudes are bounded by one."""
    return abs(a - b) / max(1.0, abs(a))


def run_verification(draws: int, seed: int, base: ModelParams | None = None) -> VerificationReport:
    """``draws`` lossless sets (flux + oracle) followed by ``draws`` dissipative sets (oracle)."""
    base = base or ModelParams()
    rng = np.random.default_rng(seed)
    report = VerificationReport(draws, seed)
    for i in range(2 * draws):
        lossless = i < draws
        params, probe = draw_params(rng, base, lossless=lossless)
        try:
            closed = amplitudes4(params, probe)
            oracle = oracle_scatter(params, probe)
        except PolarizerError as exc:
            report.failures += 1
            report.first_failure = report.first_failure or f"draw {i} (seed {seed}): {exc}"
            continue
        if lossless:
            report.max_flux_dev = max(report.max_flux_dev, abs(closed.transmit + closed.reflect - 1.0))
        report.max_t_dev = max(report.max_t_dev, rel_dev(closed.t, oracle.t))
        report.max_r_dev = max(report.max_r_dev, rel_dev(closed.r, oracle.r))
        report.max_oracle_jump_dev = max(report.max_oracle_jump_dev, abs(oracle.r - (oracle.t - 1.0)))
    return report
