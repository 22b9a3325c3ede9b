"""Compensated Poisson, F = x^2: the grid value of Gamma_1 is lam + lam^2 h - 2 lam h N_1.

Prints the ensemble mean of Gamma_1 per level next to 1 - h and the ratio of
the bias to one standard error.
"""
import argparse

import numpy as np

from weakdirichlet.convolution import Constant
from weakdirichlet.decompose import natural_decomposition_convolution
from weakdirichlet.grid import Subdivision
from weakdirichlet.ito import gamma_C2, square
from weakdirichlet.mc import EnsembleConfig, run_ensemble
from weakdirichlet.paths import POISSON, DriverSpec, JumpCompensator, simulate_driver


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--levels", type=int, nargs="+", default=[6, 8, 10, 12])
    ap.add_argument("--paths", type=int, default=4000)
    args = ap.parse_args()
    spec = DriverSpec(POISSON, seed=0, intensity=1.0)
    nu = JumpCompensator(1.0)
    print("level h mean se (1 - mean)/se")
    for n in args.levels:
        g = Subdivision.dyadic(1.0, n)

        def stat(i):
            d = natural_decomposition_convolution(Constant(1.0), simulate_driver(spec, g, i))
            return gamma_C2(d, square(), nu).Gamma.values[-1]

        st = run_ensemble(stat, EnsembleConfig(args.paths))
        m, se = st.at(0)
        print(f"{n} {g.mesh:.3g} {m:.8f} {se:.2g} {(1 - m) / se:.1f}")


if __name__ == "__main__":
    main()
