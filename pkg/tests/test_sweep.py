import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from atompolarizer import (
    ModelParams,
    ProbeEnergy,
    SweepAxis,
    UnknownPreset,
    amplitude_tR,
    amplitudes4,
    fidelity,
    preset_figure,
    sweep1d,
    sweep2d,
)
from atompolarizer.sweep import FIGURES
from lineshape import fwhm

LOSSLESS = dict(gamma2=0.0, gamma3=0.0, gamma4=0.0)
BASE = ModelParams()
PROBE = ProbeEnergy(BASE.omega2)


class TestSweepAxis:
    def test_endpoints_exact(self):
        v = SweepAxis("delta", -100.0, 100.0, 2001).values()
        assert v[0] == -100.0 and v[-1] == 100.0 and len(v) == 2001
        assert v[1000] == 0.0

    @pytest.mark.parametrize("kwargs", [
        dict(parameter="delta", start=0.0, stop=0.0, count=5),
        dict(parameter="delta", start=0.0, stop=1.0, count=1),
        dict(parameter="delta", start=0.0, stop=1.0, count=2.5),
        dict(parameter="omega9", start=0.0, stop=1.0, count=3),
        dict(parameter="rabi", start=0.0, stop=math.inf, count=3),
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            SweepAxis(**kwargs)


class TestSweep1d:
    def test_right_channel_single_zero(self):
        p = BASE.replace(big_gamma2=10.0, **LOSSLESS)
        recs = sweep1d(p, PROBE, SweepAxis("delta", -100.0, 100.0, 2001), "right")
        t = np.array([r.transmit for r in recs])
        assert int(np.argmin(t)) == 1000 and t[1000] == 0.0
        assert np.count_nonzero(t < 1e-6) == 1

    def test_decoupled_endpoint(self):
        p = BASE.replace(rabi=5.0)
        probe = ProbeEnergy.from_detuning(p, 3.0)
        recs = sweep1d(p, probe, SweepAxis("big_gamma1", 0.0, 20.0, 5), "full")
        assert recs[0].axes == (0.0,)
        expected = abs(amplitude_tR(p, probe)) ** 2
        assert recs[0].transmit == pytest.approx(expected, rel=1e-12)

    def test_records_match_scalar_api(self):
        p = BASE.replace(rabi=12.0, delta_drive=-4.0)
        recs = sweep1d(p, PROBE, SweepAxis("delta", -30.0, 30.0, 61), "full")
        for rec in recs:
            probe = ProbeEnergy.from_detuning(p, rec.axes[0])
            amps = amplitudes4(p, probe)
            assert rec.t_re + 1j * rec.t_im == pytest.approx(amps.t, abs=1e-15)
            assert rec.r_re + 1j * rec.r_im == pytest.approx(amps.r, abs=1e-15)
            assert rec.fidelity == pytest.approx(fidelity(p, probe), abs=1e-15)
            assert rec.transmit + rec.reflect + rec.loss == pytest.approx(1.0, abs=1e-12)

    def test_eit_window_widens_with_drive(self):
        axis = SweepAxis("delta", -100.0, 100.0, 20001)
        widths = []
        for rabi in (10.0, 20.0, 50.0):
            p = BASE.replace(rabi=rabi, big_gamma1=10.0, **LOSSLESS)
            recs = sweep1d(p, PROBE, axis, "left")
            t = np.array([r.transmit for r in recs])
            assert t[10000] == 1.0
            width = fwhm(axis.values(), t, center_index=10000)
            # lossless window: half maximum where |d^2 - rabi^2| = big_gamma1 |d|
            exact = math.sqrt(10.0**2 + 4 * rabi**2) - 10.0
            assert width == pytest.approx(exact, rel=1e-4)
            widths.append(width)
        assert widths[0] < widths[1] < widths[2]

    def test_alpha_axis_malus(self):
        p = BASE.replace(rabi=50.0, **LOSSLESS)
        recs = sweep1d(p, PROBE, SweepAxis("alpha", 0.0, math.pi / 2, 11), "malus")
        for rec in recs:
            assert rec.transmit == pytest.approx(math.cos(rec.axes[0]) ** 2, abs=1e-12)
            assert rec.loss == pytest.approx(0.0, abs=1e-12)
            assert math.isnan(rec.t_re)

    def test_singular_corner_recorded_not_raised(self):
        p = BASE.replace(big_gamma2=0.0, **LOSSLESS)
        recs = sweep1d(p, PROBE, SweepAxis("delta", -1.0, 1.0, 3), "right")
        assert recs[0].ok and recs[2].ok
        assert recs[1].error.startswith("DegenerateDenominator")
        assert math.isnan(recs[1].transmit)
        assert recs[0].transmit == pytest.approx(1.0, abs=1e-15)

    def test_indeterminate_fidelity_flagged(self):
        p = BASE.replace(rabi=0.0, **LOSSLESS)
        # both channels blocked on resonance with the drive off
        recs = sweep1d(p, PROBE, SweepAxis("delta", -1.0, 1.0, 3), "left")
        assert recs[1].error == "IndeterminateFidelity"
        assert math.isnan(recs[1].fidelity)
        assert recs[1].transmit == 0.0

    def test_negative_rate_flagged(self):
        recs = sweep1d(BASE, PROBE, SweepAxis("big_gamma1", -1.0, 1.0, 3))
        assert recs[0].error.startswith("InvalidParameters")
        assert recs[2].ok

    def test_unknown_quantity(self):
        with pytest.raises(ValueError):
            sweep1d(BASE, PROBE, SweepAxis("delta", -1.0, 1.0, 3), "both")


class TestSweep2d:
    def test_row_major(self):
        recs = sweep2d(BASE, PROBE, SweepAxis("delta", -1.0, 1.0, 2), SweepAxis("rabi", 0.0, 5.0, 2))
        assert [r.axes for r in recs] == [(-1.0, 0.0), (-1.0, 5.0), (1.0, 0.0), (1.0, 5.0)]

    @given(st.integers(2, 12), st.integers(2, 12))
    def test_grid_contract(self, n1, n2):
        a1, a2 = SweepAxis("delta", -40.0, 40.0, n1), SweepAxis("delta_drive", -5.0, 5.0, n2)
        recs = sweep2d(BASE.replace(rabi=8.0), PROBE, a1, a2)
        assert len(recs) == n1 * n2
        assert recs[0].axes == (-40.0, -5.0) and recs[-1].axes == (40.0, 5.0)
        for r in recs:
            assert 0.0 <= r.transmit <= 1.0 and 0.0 <= r.reflect <= 1.0 and r.loss >= 0.0

    def test_same_parameter_rejected(self):
        a = SweepAxis("delta", -1.0, 1.0, 3)
        with pytest.raises(ValueError):
            sweep2d(BASE, PROBE, a, a)

    def test_resonance_line_blocked(self):
        p = BASE.replace(big_gamma1=10.0, big_gamma2=10.0)
        recs = sweep2d(p, PROBE, SweepAxis("delta", -50.0, 50.0, 101), SweepAxis("rabi", 0.0, 20.0, 21))
        on_resonance = [r.transmit for r in recs if r.axes[0] == 0.0]
        assert len(on_resonance) == 21
        # undriven: |d/(d - 2i G)|^2 with d = -i/2; strong drive: approaches |t_R|^2 = 1/441
        assert on_resonance[0] == pytest.approx(0.25 / 420.25, rel=1e-12)
        assert all(a <= b for a, b in zip(on_resonance, on_resonance[1:]))
        assert on_resonance[-1] < 1 / 441

    def test_resonance_line_lossless(self):
        p = BASE.replace(big_gamma1=10.0, big_gamma2=10.0, **LOSSLESS)
        recs = sweep2d(p, PROBE, SweepAxis("delta", -50.0, 50.0, 101), SweepAxis("rabi", 1.0, 20.0, 20))
        assert all(r.transmit == 0.0 for r in recs if r.axes[0] == 0.0)

    def test_dissipative_dips_at_rabi(self):
        p = BASE.replace(big_gamma1=10.0, big_gamma2=10.0)
        recs = sweep2d(p, PROBE, SweepAxis("delta", -50.0, 50.0, 101), SweepAxis("rabi", 0.0, 20.0, 21))
        for rabi in (10.0, 20.0):
            dips = [r.transmit for r in recs if r.axes[1] == rabi and abs(r.axes[0]) == rabi]
            assert len(dips) == 2 and max(dips) < 0.01

    def test_zero_set_tracks_drive_detuning(self):
        p = BASE.replace(rabi=10.0, **LOSSLESS)
        drives = SweepAxis("delta_drive", -10.0, 10.0, 3)
        for drive in drives.values():
            root = math.sqrt(drive**2 + 400.0)
            for delta in (0.0, (-drive + root) / 2, (-drive - root) / 2):
                axis = SweepAxis("delta", delta, delta + 1.0, 2)
                rec = sweep2d(p, PROBE, drives, axis)
                hit = [r for r in rec if r.axes == (drive, delta)]
                assert hit[0].transmit <= 1e-20

    def test_deterministic(self):
        args = (BASE.replace(rabi=3.0), PROBE, SweepAxis("delta", -9.0, 9.0, 19), SweepAxis("rabi", 0.0, 9.0, 7))
        assert sweep2d(*args) == sweep2d(*args)


class TestPresets:
    def test_fig2a(self):
        params, probe, axes, quantity = preset_figure("fig2a")
        assert (params.big_gamma1, params.big_gamma2, params.delta_drive) == (10.0, 10.0, 0.0)
        assert (params.gamma2, params.gamma3, params.gamma4) == (1.0, 1.0, 1.0)
        assert params.omega2 == params.omega3
        assert [a.parameter for a in axes] == ["delta", "rabi"]
        assert quantity == "full"

    def test_fig3_lossless(self):
        for name, quantity in (("fig3a", "left"), ("fig3b", "right")):
            plan = preset_figure(name)
            assert plan.params.lossless and plan.quantity == quantity
            assert (plan.axes[0].start, plan.axes[0].stop) == (-100.0, 100.0)

    def test_fig4b_drive(self):
        plan = preset_figure("fig4b")
        assert plan.params.rabi == 50.0
        assert [a.parameter for a in plan.axes] == ["delta"]

    def test_metadata_self_describing(self):
        for name in FIGURES:
            plan = preset_figure(name)
            assert plan.metadata["figure"] == name
            assert plan.metadata["axes"][0]["count"] == 1001

    def test_unknown(self):
        with pytest.raises(UnknownPreset):
            preset_figure("fig5")

    def test_fig4b_peak_fidelity(self):
        recs = preset_figure("fig4b").run()
        center = [r for r in recs if r.axes == (0.0,)][0]
        assert center.fidelity == pytest.approx(0.9977285192191371, rel=1e-12)
