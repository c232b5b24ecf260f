"""Stationary-state linear system, solved independently of the closed forms.

Substituting the plane-wave ansatz into H|psi> = omega|psi> and integrating the
field equations across the delta interaction at x = 0 gives five linear
equations in (t, r, f2, f3, f4). The field at the origin is taken as the mean
of its one-sided limits: phi_R(0) = (1 + t)/2, phi_L(0) = r/2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SingularSystem
from .params import ModelParams, ProbeEnergy

PIVOT_RTOL = 1e-14


@dataclass(frozen=True)
class ComplexMatrix5:
    """Rows are equations (right jump, left jump, |2>, |3>, |4>); columns are
    unknowns (t, r, f2, f3, f4)."""

    entries: np.ndarray
    rhs: np.ndarray

    def __post_init__(self):
        if self.entries.shape != (5, 5) or self.rhs.shape != (5,):
            raise ValueError("expected a 5x5 matrix and a length-5 right-hand side")
        if not (np.all(np.isfinite(self.entries)) and np.all(np.isfinite(self.rhs))):
            raise ValueError("system has non-finite entries")


@dataclass(frozen=True)
class OracleSolution:
    t: complex
    r: complex
    f2: complex
    f3: complex
    f4: complex


def assemble_system(params: ModelParams, probe: ProbeEnergy) -> ComplexMatrix5:
    p, w = params, probe.omega
    vg, v1, v2, om = p.v_group, p.v1, p.v2, p.rabi
    m = np.zeros((5, 5), dtype=complex)
    b = np.zeros(5, dtype=complex)

    m[0] = [-1j * vg, 0, v1, v2, 0]
    b[0] = -1j * vg
    m[1] = [0, -1j * vg, v1, v2, 0]
    m[2] = [v1 / 2, v1 / 2, p.omega2 - 0.5j * p.gamma2 - w, 0, om]
    b[2] = -v1 / 2
    m[3] = [v2 / 2, v2 / 2, 0, p.omega3 - 0.5j * p.gamma3 - w, 0]
    b[3] = -v2 / 2
    m[4] = [0, 0, om, 0, p.omega2 + p.delta_drive - 0.5j * p.gamma4 - w]
    return ComplexMatrix5(m, b)


def solve_linear(system: ComplexMatrix5) -> np.ndarray:
    """Gaussian elimination with partial pivoting in complex arithmetic."""
    a = system.entries.astype(complex)
    b = system.rhs.astype(complex)
    n = len(b)
    floor = PIVOT_RTOL * np.max(np.abs(a))
    if floor == 0.0:
        raise SingularSystem("zero matrix")

    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) < floor:
            raise SingularSystem(f"pivot {abs(a[p, k]):.3e} in column {k} below {floor:.3e}")
        if p != k:
            a[[k, p]] = a[[p, k]]
            b[[k, p]] = b[[p, k]]
        lam = a[k + 1 :, k] / a[k, k]
        a[k + 1 :, k:] -= np.outer(lam, a[k, k:])
        b[k + 1 :] -= lam * b[k]

    x = np.zeros(n, dtype=complex)
    for k in range(n - 1, -1, -1):
        x[k] = (b[k] - a[k, k + 1 :] @ x[k + 1 :]) / a[k, k]
    return x


def oracle_scatter(params: ModelParams, probe: ProbeEnergy) -> OracleSolution:
    t, r, f2, f3, f4 = (complex(v) for v in solve_linear(assemble_system(params, probe)))
    return OracleSolution(t, r, f2, f3, f4)
