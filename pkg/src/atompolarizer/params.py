"""Model parameters and probe energy, all in units of the reference decay rate."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields, replace

_RATES = ("gamma2", "gamma3", "gamma4", "big_gamma1", "big_gamma2")


@dataclass(frozen=True)
class ModelParams:
    """Atomic and waveguide parameters.

    Level |4> sits at ``omega2 + delta_drive``. Waveguide coupling rates are
    related to the dipole couplings by ``big_gamma = V**2 / v_group``.
    """

    omega2: float = 100.0
    omega3: float = 100.0
    delta_drive: float = 0.0
    rabi: float = 0.0
    gamma2: float = 1.0
    gamma3: float = 1.0
    gamma4: float = 1.0
    big_gamma1: float = 10.0
    big_gamma2: float = 10.0
    v_group: float = 1.0

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not math.isfinite(value):
                raise ValueError(f"{f.name} must be finite, got {value!r}")
        for name in _RATES:
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative, got {getattr(self, name)!r}")
        if self.rabi < 0:
            raise ValueError(f"rabi must be non-negative, got {self.rabi!r}")
        if self.v_group <= 0:
            raise ValueError(f"v_group must be positive, got {self.v_group!r}")

    @property
    def v1(self) -> float:
        return math.sqrt(self.big_gamma1 * self.v_group)

    @property
    def v2(self) -> float:
        return math.sqrt(self.big_gamma2 * self.v_group)

    @property
    def lossless(self) -> bool:
        return self.gamma2 == self.gamma3 == self.gamma4 == 0.0

    def replace(self, **changes) -> ModelParams:
        return replace(self, **changes)

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class ProbeEnergy:
    """Energy ``omega`` of the incident photon."""

    omega: float

    def __post_init__(self):
        if not math.isfinite(self.omega):
            raise ValueError(f"omega must be finite, got {self.omega!r}")

    @classmethod
    def from_detuning(cls, params: ModelParams, delta: float) -> ProbeEnergy:
        return cls(params.omega2 - delta)

    def detuning(self, params: ModelParams) -> float:
        """delta = omega2 - omega."""
        return params.omega2 - self.omega

    def wavenumber(self, params: ModelParams) -> float:
        return self.omega / params.v_group
