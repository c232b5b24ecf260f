"""Deterministic 1D/2D parameter sweeps and the figure presets.

Grids are evaluated in one vectorised pass through the scattering core, so
record order and values do not depend on any scheduling. Points where an
evaluation fails are kept as records with ``error`` set and NaN values.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field, fields
from types import SimpleNamespace
from typing import Literal

import numpy as np

from .errors import UnknownPreset
from .params import ModelParams, ProbeEnergy
from .scattering import _fidelity, _probs, channel_terms

AXIS_PARAMETERS = ("delta", "rabi", "delta_drive", "big_gamma1", "big_gamma2", "alpha")
Quantity = Literal["full", "left", "right", "malus"]
QUANTITIES = ("full", "left", "right", "malus")


@dataclass(frozen=True)
class SweepAxis:
    parameter: str
    start: float
    stop: float
    count: int

    def __post_init__(self):
        if self.parameter not in AXIS_PARAMETERS:
            raise ValueError(f"unknown axis parameter {self.parameter!r}; expected one of {AXIS_PARAMETERS}")
        if int(self.count) != self.count or self.count < 2:
            raise ValueError(f"axis count must be an integer >= 2, got {self.count!r}")
        if not (math.isfinite(self.start) and math.isfinite(self.stop)):
            raise ValueError("axis bounds must be finite")
        if self.start == self.stop:
            raise ValueError("axis start and stop must differ")

    def values(self) -> np.ndarray:
        # linspace hits both endpoints exactly
        return np.linspace(self.start, self.stop, int(self.count))


@dataclass(frozen=True)
class SweepRecord:
    axes: tuple[float, ...]
    transmit: float
    reflect: float
    loss: float
    fidelity: float
    t_re: float
    t_im: float
    r_re: float
    r_im: float
    error: str = ""

    @property
    def ok(self) -> bool:
        return not self.error


@dataclass(frozen=True)
class SweepPlan:
    """Everything needed to run a sweep; what :func:`preset_figure` returns."""

    params: ModelParams
    probe: ProbeEnergy
    axes: tuple[SweepAxis, ...]
    quantity: Quantity = "full"
    alpha: float = 0.0
    notes: str = ""
    metadata: dict = field(default_factory=dict)

    def run(self) -> list[SweepRecord]:
        if len(self.axes) == 1:
            return sweep1d(self.params, self.probe, self.axes[0], self.quantity, alpha=self.alpha)
        return sweep2d(self.params, self.probe, self.axes[0], self.axes[1], self.quantity, alpha=self.alpha)

    def __iter__(self):
        # unpacks as (params, probe, axes, quantity)
        return iter((self.params, self.probe, self.axes, self.quantity))


def _evaluate(base: ModelParams, probe: ProbeEnergy, grids: dict[str, np.ndarray],
              quantity: Quantity, alpha: float) -> list[SweepRecord]:
    if quantity not in QUANTITIES:
        raise ValueError(f"unknown quantity {quantity!r}; expected one of {QUANTITIES}")
    shape = np.broadcast_shapes(*(g.shape for g in grids.values()))
    cols = {f.name: np.broadcast_to(np.asarray(getattr(base, f.name), dtype=float), shape)
            for f in fields(ModelParams)}
    for name, g in grids.items():
        if name in cols:
            cols[name] = np.broadcast_to(g, shape)
    p = SimpleNamespace(**cols)
    if "delta" in grids:
        omega = p.omega2 - np.broadcast_to(grids["delta"], shape)
    else:
        omega = np.broadcast_to(np.asarray(probe.omega, dtype=float), shape)
    alpha_grid = np.broadcast_to(grids.get("alpha", np.asarray(alpha, dtype=float)), shape)

    invalid = np.zeros(shape, dtype=bool)
    for name in ("rabi", "big_gamma1", "big_gamma2"):
        invalid |= cols[name] < 0

    with np.errstate(all="ignore"):
        tl, rl, okl = channel_terms(p, omega, "left")
        tr, rr, okr = channel_terms(p, omega, "right")
        fid, okf = _fidelity(np.abs(tl) ** 2, np.abs(tr) ** 2)
        if quantity == "malus":
            c2, s2 = np.cos(alpha_grid) ** 2, np.sin(alpha_grid) ** 2
            tl2, rl2, lossl, okpl = _probs(np.abs(tl) ** 2, np.abs(rl) ** 2)
            tr2, rr2, lossr, okpr = _probs(np.abs(tr) ** 2, np.abs(rr) ** 2)
            transmit = c2 * tl2 + s2 * tr2
            reflect = c2 * rl2 + s2 * rr2
            loss = c2 * lossl + s2 * lossr
            okp = okpl & okpr
            ok = okl & okr
            t = r = np.full(shape, complex(np.nan, np.nan))
        else:
            if quantity == "left":
                t, r, ok = tl, rl, okl
            elif quantity == "right":
                t, r, ok = tr, rr, okr
            else:
                t, r, ok = channel_terms(p, omega, "full")
            transmit, reflect, loss, okp = _probs(np.abs(t) ** 2, np.abs(r) ** 2)

    records = []
    axis_cols = [np.broadcast_to(g, shape).ravel() for g in grids.values()]
    flat = [np.asarray(a).ravel() for a in (transmit, reflect, loss, fid, t, r, ok, okp, okf, invalid)]
    for i in range(int(np.prod(shape))):
        transmit_i, reflect_i, loss_i, fid_i, t_i, r_i, ok_i, okp_i, okf_i, bad_i = (a[i] for a in flat)
        errors = []
        if bad_i:
            errors.append("InvalidParameters")
        elif not ok_i:
            errors.append("DegenerateDenominator")
        elif not okp_i:
            errors.append("InvalidAmplitudes")
        if not okf_i:
            errors.append("IndeterminateFidelity")
        if errors and errors != ["IndeterminateFidelity"]:
            transmit_i = reflect_i = loss_i = np.nan
        records.append(SweepRecord(
            axes=tuple(float(a[i]) for a in axis_cols),
            transmit=float(transmit_i), reflect=float(reflect_i), loss=float(loss_i),
            fidelity=float(fid_i),
            t_re=float(t_i.real), t_im=float(t_i.imag), r_re=float(r_i.real), r_im=float(r_i.imag),
            error=";".join(errors),
        ))
    return records


def sweep1d(base: ModelParams, probe_base: ProbeEnergy, axis: SweepAxis,
            quantity: Quantity = "full", *, alpha: float = 0.0) -> list[SweepRecord]:
    """One record per grid point of ``axis``, in grid order.

    ``quantity`` picks the amplitudes reported: the full scatterer, a single
    polarization channel, or the polarization-weighted ``malus`` mixture at
    angle ``alpha``. The fidelity column is always filled.
    """
    return _evaluate(base, probe_base, {axis.parameter: axis.values()}, quantity, alpha)


def sweep2d(base: ModelParams, probe_base: ProbeEnergy, axis1: SweepAxis, axis2: SweepAxis,
            quantity: Quantity = "full", *, alpha: float = 0.0) -> list[SweepRecord]:
    """Row-major grid: ``axis1`` outer, ``axis2`` inner."""
    if axis1.parameter == axis2.parameter:
        raise ValueError("the two sweep axes must vary different parameters")
    g1, g2 = np.meshgrid(axis1.values(), axis2.values(), indexing="ij")
    return _evaluate(base, probe_base, {axis1.parameter: g1, axis2.parameter: g2}, quantity, alpha)


FIGURES = ("fig2a", "fig2b", "fig3a", "fig3b", "fig4a", "fig4b")

_DELTA_NARROW = SweepAxis("delta", -50.0, 50.0, 1001)
_DELTA_WIDE = SweepAxis("delta", -100.0, 100.0, 1001)


def preset_figure(name: str) -> SweepPlan:
    """Parameters and grid reproducing one of the published figures.

    All presets use degenerate levels ``omega2 == omega3`` with couplings
    ``big_gamma1 = big_gamma2 = 10``. Figure 3 is lossless; the others use
    unit decay on every excited level.
    """
    dissipative = ModelParams(gamma2=1.0, gamma3=1.0, gamma4=1.0, big_gamma1=10.0, big_gamma2=10.0)
    lossless = dissipative.replace(gamma2=0.0, gamma3=0.0, gamma4=0.0)
    resonant = ProbeEnergy(dissipative.omega2)

    if name == "fig2a":
        plan = SweepPlan(dissipative, resonant, (_DELTA_NARROW, SweepAxis("rabi", 0.0, 20.0, 101)),
                         "full", notes="transmission vs detuning and drive strength")
    elif name == "fig2b":
        plan = SweepPlan(dissipative.replace(rabi=10.0), resonant,
                         (_DELTA_NARROW, SweepAxis("delta_drive", -20.0, 20.0, 101)),
                         "full", notes="transmission vs detuning and drive detuning")
    elif name == "fig3a":
        plan = SweepPlan(lossless, resonant, (_DELTA_WIDE, SweepAxis("rabi", 0.0, 50.0, 101)),
                         "left", notes="left-circular transmission, lossless")
    elif name == "fig3b":
        plan = SweepPlan(lossless, resonant, (_DELTA_WIDE,), "right",
                         notes="right-circular transmission, lossless")
    elif name == "fig4a":
        plan = SweepPlan(dissipative, resonant, (_DELTA_NARROW, SweepAxis("rabi", 0.0, 100.0, 101)),
                         "full", notes="fidelity vs detuning and drive strength")
    elif name == "fig4b":
        plan = SweepPlan(dissipative.replace(rabi=50.0), resonant, (_DELTA_NARROW,), "full",
                         notes="fidelity vs detuning at rabi = 50")
    else:
        raise UnknownPreset(f"unknown figure {name!r}; expected one of {FIGURES}")
    plan.metadata.update(
        figure=name,
        notes=plan.notes,
        quantity=plan.quantity,
        axes=[asdict(a) for a in plan.axes],
    )
    return plan
