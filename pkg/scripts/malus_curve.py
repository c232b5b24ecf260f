"""Monte Carlo single-photon Malus curve at the ideal and a dissipative operating point."""

import argparse
import math

import numpy as np

from atompolarizer import ModelParams, PolarizationState, ProbeEnergy, ci_check, ideal_point
from atompolarizer import malus_analytic, simulate_photons


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=10**6)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--points", type=int, default=11)
    ap.add_argument("--dissipative", action="store_true", help="unit decay rates instead of the ideal point")
    args = ap.parse_args()

    if args.dissipative:
        params = ModelParams(rabi=50.0)
        probe = ProbeEnergy(params.omega2)
    else:
        params, probe = ideal_point()

    print("alpha,cos2,analytic_T,mc_T,mc_R,mc_lost,halfwidth,pass")
    for alpha in np.linspace(0.0, math.pi / 2, args.points):
        pol = PolarizationState(float(alpha))
        expected = malus_analytic(params, probe, pol)
        counts = simulate_photons(params, probe, pol, args.n, args.seed)
        rep = ci_check(counts, expected.transmit)
        n = counts.n_total
        print(f"{alpha:.6f},{math.cos(alpha) ** 2:.6f},{expected.transmit:.6f},"
              f"{counts.n_transmitted / n:.6f},{counts.n_reflected / n:.6f},{counts.n_lost / n:.6f},"
              f"{rep.halfwidth:.2e},{rep.passed}")


if __name__ == "__main__":
    main()
