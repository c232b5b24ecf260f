"""Single-photon Malus's law: analytic probabilities and photon-by-photon sampling.

An incident photon cos(alpha)|L> + sin(alpha)|R> couples to |1>-|2> in the L
channel and to |1>-|3> in the R channel. Because the two channels address
disjoint transitions, sampling the channel first and then the scattering
outcome reproduces the detection statistics.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import InsufficientSamples
from .params import ModelParams, ProbeEnergy
from .scattering import ChannelProbs, channel_amplitudes, probabilities

CHUNK_SIZE = 1 << 16


@dataclass(frozen=True)
class PolarizationState:
    alpha: float

    def __post_init__(self):
        if not 0.0 <= self.alpha <= math.pi / 2:
            raise ValueError(f"alpha must lie in [0, pi/2], got {self.alpha!r}")

    @property
    def weight_left(self) -> float:
        return math.cos(self.alpha) ** 2

    @property
    def weight_right(self) -> float:
        return math.sin(self.alpha) ** 2


@dataclass(frozen=True)
class TrialCounts:
    n_total: int
    n_transmitted: int
    n_reflected: int
    n_lost: int
    seed: int

    def __post_init__(self):
        parts = (self.n_transmitted, self.n_reflected, self.n_lost)
        if min(parts) < 0 or sum(parts) != self.n_total:
            raise ValueError(f"inconsistent tallies {parts} for n_total={self.n_total}")


@dataclass(frozen=True)
class CIReport:
    passed: bool
    p_hat: float
    halfwidth: float
    p_expected: float
    z: float


def ideal_point() -> tuple[ModelParams, ProbeEnergy]:
    """Lossless operating point with the probe resonant on both transitions."""
    params = ModelParams(gamma2=0.0, gamma3=0.0, gamma4=0.0, rabi=50.0,
                         delta_drive=0.0, big_gamma1=10.0, big_gamma2=10.0)
    return params, ProbeEnergy(params.omega2)


def channel_probs(params: ModelParams, probe: ProbeEnergy) -> tuple[ChannelProbs, ChannelProbs]:
    left = probabilities(channel_amplitudes(params, probe, "left"))
    right = probabilities(channel_amplitudes(params, probe, "right"))
    return left, right


def malus_analytic(params: ModelParams, probe: ProbeEnergy, pol: PolarizationState) -> ChannelProbs:
    left, right = channel_probs(params, probe)
    wl, wr = pol.weight_left, pol.weight_right
    return ChannelProbs(
        transmit=wl * left.transmit + wr * right.transmit,
        reflect=wl * left.reflect + wr * right.reflect,
        loss=wl * left.loss + wr * right.loss,
    )


def _chunk_stream(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,))))


def _run_chunk(seed: int, index: int, size: int, w_left: float,
               left: ChannelProbs, right: ChannelProbs) -> tuple[int, int, int]:
    rng = _chunk_stream(seed, index)
    is_left = rng.random(size) < w_left
    u = rng.random(size)
    transmit = np.where(is_left, left.transmit, right.transmit)
    loss = np.where(is_left, left.loss, right.loss)
    n_t = int(np.count_nonzero(u < transmit))
    # loss occupies the top of the unit interval so an exact zero is never drawn
    n_l = int(np.count_nonzero(u >= 1.0 - loss))
    return n_t, size - n_t - n_l, n_l


def simulate_photons(params: ModelParams, probe: ProbeEnergy, pol: PolarizationState,
                     n: int, seed: int, *, workers: int = 1) -> TrialCounts:
    """Send ``n`` photons one at a time and tally where each one ends up.

    Photons are processed in chunks of ``CHUNK_SIZE``; chunk ``i`` draws from
    its own stream seeded by ``(seed, i)``, so the tallies depend only on
    ``(seed, n)`` and not on ``workers``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= seed < 2**64:
        raise ValueError("seed must be an unsigned 64-bit integer")
    left, right = channel_probs(params, probe)
    w_left = pol.weight_left

    sizes = [min(CHUNK_SIZE, n - start) for start in range(0, n, CHUNK_SIZE)]
    jobs = [(seed, i, size, w_left, left, right) for i, size in enumerate(sizes)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda job: _run_chunk(*job), jobs))
    else:
        results = [_run_chunk(*job) for job in jobs]

    n_t, n_r, n_l = (sum(col) for col in zip(*results))
    return TrialCounts(n, n_t, n_r, n_l, seed)


def ci_check(counts: TrialCounts, p_expected: float, z: float = 4.0) -> CIReport:
    """Binomial z-test of the transmitted fraction against ``p_expected``."""
    if counts.n_total < 100:
        raise InsufficientSamples(f"need at least 100 trials, got {counts.n_total}")
    p_hat = counts.n_transmitted / counts.n_total
    if p_expected in (0.0, 1.0):
        return CIReport(p_hat == p_expected, p_hat, 0.0, p_expected, z)
    halfwidth = z * math.sqrt(p_expected * (1.0 - p_expected) / counts.n_total)
    return CIReport(abs(p_hat - p_expected) <= halfwidth, p_hat, halfwidth, p_expected, z)
