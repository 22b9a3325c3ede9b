"""E S^n(X, X)_1 for the fractional kernel, with the fitted log-log slope against the mesh."""
import argparse

import numpy as np

from weakdirichlet.convolution import Fractional
from weakdirichlet.grid import Subdivision, dyadic_sequence
from weakdirichlet.mc import EnsembleConfig, EnsembleStats, collect, table_from_stats
from weakdirichlet.paths import BROWNIAN, DriverSpec, simulate_driver


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--H", type=float, default=0.75)
    ap.add_argument("--native", type=int, default=11)
    ap.add_argument("--min-level", type=int, default=6)
    ap.add_argument("--paths", type=int, default=500)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    kernel = Fractional(args.H)
    g = Subdivision.dyadic(1.0, args.native)
    seq = dyadic_sequence(1.0, args.native, args.min_level)
    W = kernel.cached_weights(g)
    idx = [g.indices_of(s) for _, s in seq]
    spec = DriverSpec(BROWNIAN, seed=args.seed)

    def batch(ids):
        dL = np.array([np.diff(simulate_driver(spec, g, int(i)).values) for i in ids])
        X = dL @ W.T
        return np.column_stack([np.sum(np.diff(X[:, ix], axis=1) ** 2, axis=1) for ix in idx])

    st = EnsembleStats.from_samples("S(X,X)_1", collect(batch, EnsembleConfig(args.paths, chunk_size=100), batched=True), seq.indices)
    rep = table_from_stats(st)
    print("level mesh mean se")
    for row in rep.rows():
        print(f"{row['level']} {row['mesh']:.6g} {row['mean']:.6g} {row['se']:.2g}")
    print(f"slope {rep.slope:.3f} (2H - 1 = {2 * args.H - 1:.3f}), verdict {rep.verdict}")


if __name__ == "__main__":
    main()
