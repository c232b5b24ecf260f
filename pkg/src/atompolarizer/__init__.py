"""Single-photon scattering off a driven four-level atom in a 1D waveguide."""

from .errors import (
    DegenerateDenominator,
    IndeterminateFidelity,
    InsufficientSamples,
    InvalidAmplitudes,
    PolarizerError,
    SingularSystem,
    UnknownPreset,
)
from .params import ModelParams, ProbeEnergy
from .scattering import (
    ChannelProbs,
    ScatterAmps,
    amplitude_tL,
    amplitude_tR,
    amplitudes4,
    channel_amplitudes,
    fidelity,
    probabilities,
)
from .oracle import ComplexMatrix5, OracleSolution, assemble_system, oracle_scatter, solve_linear
from .sweep import SweepAxis, SweepRecord, preset_figure, sweep1d, sweep2d
from .malus import (
    PolarizationState,
    TrialCounts,
    ci_check,
    ideal_point,
    malus_analytic,
    simulate_photons,
)

__version__ = "0.1.0"

__all__ = [
    "ChannelProbs",
    "ComplexMatrix5",
    "DegenerateDenominator",
    "IndeterminateFidelity",
    "InsufficientSamples",
    "InvalidAmplitudes",
    "ModelParams",
    "OracleSolution",
    "PolarizationState",
    "PolarizerError",
    "ProbeEnergy",
    "ScatterAmps",
    "SingularSystem",
    "SweepAxis",
    "SweepRecord",
    "TrialCounts",
    "UnknownPreset",
    "amplitude_tL",
    "amplitude_tR",
    "amplitudes4",
    "assemble_system",
    "channel_amplitudes",
    "ci_check",
    "fidelity",
    "ideal_point",
    "malus_analytic",
    "oracle_scatter",
    "preset_figure",
    "probabilities",
    "simulate_photons",
    "solve_linear",
    "sweep1d",
    "sweep2d",
]
