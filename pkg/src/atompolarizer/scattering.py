"""Closed-form transmission and reflection amplitudes.

Every rational expression is evaluated in its cleared form, i.e. multiplied
through by the level-|4> detuning ``d4``, so the lossless two-photon
resonance ``d4 = 0`` stays finite. The private ``_*_terms`` helpers accept
scalars or numpy arrays and are shared by the scalar API and the sweep engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DegenerateDenominator, IndeterminateFidelity, InvalidAmplitudes
from .params import ModelParams, ProbeEnergy

EPS_DEN = 1e-12
EPS_PROB = 1e-9

Channel = Literal["full", "left", "right"]


@dataclass(frozen=True)
class ScatterAmps:
    t: complex
    r: complex

    @property
    def transmit(self) -> float:
        return abs(self.t) ** 2

    @property
    def reflect(self) -> float:
        return abs(self.r) ** 2


@dataclass(frozen=True)
class ChannelProbs:
    transmit: float
    reflect: float
    loss: float


def _detunings(p, omega):
    d2 = p.omega2 - omega - 0.5j * p.gamma2
    d3 = p.omega3 - omega - 0.5j * p.gamma3
    d4 = p.omega2 - omega + p.delta_drive - 0.5j * p.gamma4
    # With the drive off, |4> decouples and d4 cancels identically; dropping it
    # removes the spurious 0/0 at d4 = 0.
    d4 = np.where(np.asarray(p.rabi) == 0.0, 1.0 + 0j, d4)
    return d2, d3, d4


def _full_terms(p, omega):
    """Numerators of t and r, common denominator, and degeneracy scale."""
    d2, d3, d4 = _detunings(p, omega)
    g1, g2, om2 = p.big_gamma1, p.big_gamma2, p.rabi**2
    driven = d2 * d4 - om2
    num_t = d3 * driven
    num_r = 1j * g1 * d3 * d4 + 1j * g2 * driven
    # Expanded (d3 - i g2)((d2 - i g1) d4 - om2) + g1 g2 d4; the g1 g2 d4 terms
    # cancel analytically and would otherwise cancel in floating point.
    den = driven * (d3 - 1j * g2) - 1j * g1 * d3 * d4
    scale = np.maximum.reduce(
        [
            np.ones_like(np.abs(d2)),
            np.abs(d2 * d3 * d4),
            om2 * np.maximum.reduce([np.abs(d2), np.abs(d3), np.ones_like(np.abs(d2))]),
        ]
    )
    return num_t, num_r, den, scale


def _left_terms(p, omega):
    d2, _, d4 = _detunings(p, omega)
    g1, om2 = p.big_gamma1, p.rabi**2
    driven = d2 * d4 - om2
    den = (d2 - 1j * g1) * d4 - om2
    scale = np.maximum.reduce([np.ones_like(np.abs(d2)), np.abs(d2 * d4), om2 + 0 * np.abs(d2)])
    return driven, 1j * g1 * d4, den, scale


def _right_terms(p, omega):
    _, d3, _ = _detunings(p, omega)
    den = d3 - 1j * p.big_gamma2
    scale = np.maximum(1.0, np.abs(d3))
    return d3, 1j * p.big_gamma2 + 0 * d3, den, scale


_TERMS = {"full": _full_terms, "left": _left_terms, "right": _right_terms}


def channel_terms(p, omega, channel: Channel = "full"):
    """Vectorised ``(t, r, ok)`` for one coupling channel.

    ``p`` may be a :class:`ModelParams` or any object carrying the same field
    names as arrays. ``ok`` is False where the denominator is degenerate; the
    amplitudes there are NaN.
    """
    num_t, num_r, den, scale = _TERMS[channel](p, omega)
    ok = np.abs(den) >= EPS_DEN * scale
    safe = np.where(ok, den, 1.0)
    nan = complex(np.nan, np.nan)
    return np.where(ok, num_t / safe, nan), np.where(ok, num_r / safe, nan), ok


def _scalar(params: ModelParams, probe: ProbeEnergy, channel: Channel) -> ScatterAmps:
    t, r, ok = channel_terms(params, probe.omega, channel)
    if not ok:
        raise DegenerateDenominator(
            f"{channel} channel denominator vanishes at omega={probe.omega!r} for {params}"
        )
    return ScatterAmps(complex(t), complex(r))


def amplitudes4(params: ModelParams, probe: ProbeEnergy) -> ScatterAmps:
    """Transmission and reflection of the full four-level scatterer."""
    return _scalar(params, probe, "full")


def amplitude_tL(params: ModelParams, probe: ProbeEnergy) -> complex:
    """Transmission of a photon coupled only to |1>-|2> (``big_gamma2`` ignored)."""
    return _scalar(params, probe, "left").t


def amplitude_tR(params: ModelParams, probe: ProbeEnergy) -> complex:
    """Transmission of a photon coupled only to |1>-|3>."""
    return _scalar(params, probe, "right").t


def channel_amplitudes(params: ModelParams, probe: ProbeEnergy, channel: Channel) -> ScatterAmps:
    """``(t, r)`` for the full system or one polarization channel.

    For a single channel ``r = t - 1``; the channel forms are evaluated
    directly rather than by zeroing a coupling in :func:`amplitudes4`, which
    would cancel a vanishing ``d3`` or ``d2`` factor as 0/0.
    """
    return _scalar(params, probe, channel)


def _probs(t2, r2):
    """Vectorised probability bookkeeping; returns (transmit, reflect, loss, ok)."""
    total = t2 + r2
    ok = total <= 1.0 + EPS_PROB
    loss = 1.0 - total
    loss = np.where((loss < 0) & (loss > -EPS_PROB), 0.0, loss)
    return t2, r2, loss, ok


def probabilities(amps: ScatterAmps) -> ChannelProbs:
    transmit, reflect = abs(amps.t) ** 2, abs(amps.r) ** 2
    _, _, loss, ok = _probs(transmit, reflect)
    if not ok:
        raise InvalidAmplitudes(f"|t|^2 + |r|^2 = {transmit + reflect!r} exceeds 1")
    return ChannelProbs(transmit, reflect, float(loss))


def _fidelity(tl2, tr2):
    total = tl2 + tr2
    ok = total >= EPS_PROB
    return np.where(ok, tl2 / np.where(ok, total, 1.0), np.nan), ok


def fidelity(params: ModelParams, probe: ProbeEnergy) -> float:
    """Channel selectivity |t_L|^2 / (|t_L|^2 + |t_R|^2)."""
    tl2 = abs(amplitude_tL(params, probe)) ** 2
    tr2 = abs(amplitude_tR(params, probe)) ** 2
    f, ok = _fidelity(tl2, tr2)
    if not ok:
        raise IndeterminateFidelity(f"both channels blocked at omega={probe.omega!r}")
    return float(f)
