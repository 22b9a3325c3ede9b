"""Product kernel with f = 1: S^n(A, A)_1 against 1/2 and S^n(A, N)_1 against the driver and an independent W."""
import argparse

import numpy as np

from weakdirichlet.convolution import ProductBetaF
from weakdirichlet.decompose import natural_decomposition_convolution, orthogonality_verdict
from weakdirichlet.estimators import covariation
from weakdirichlet.grid import Subdivision, dyadic_sequence
from weakdirichlet.mc import EnsembleConfig, EnsembleStats, collect
from weakdirichlet.paths import BROWNIAN, DriverSpec, SamplePath, frozen_beta, simulate_driver
from weakdirichlet.rng import STREAM_AUX, generator


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--native", type=int, default=12)
    ap.add_argument("--min-level", type=int, default=6)
    ap.add_argument("--paths", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    beta = frozen_beta(12345, max(16, args.native))
    kernel = ProductBetaF(beta, lambda s: np.ones_like(s), "one")
    g = Subdivision.dyadic(1.0, args.native)
    seq = dyadic_sequence(1.0, args.native, args.min_level)
    spec = DriverSpec(BROWNIAN, seed=args.seed)
    m = len(seq)

    def stat(i):
        B = simulate_driver(spec, g, i)
        d = natural_decomposition_convolution(kernel, B, grid=g)
        rng = generator(args.seed, i, STREAM_AUX)
        W = SamplePath(g, np.concatenate([[0.0], np.cumsum(rng.standard_normal(len(g) - 1) * np.sqrt(g.mesh))]))
        return [covariation(d.A, d.A, s) for _, s in seq] + [covariation(d.A, B, s) for _, s in seq] + [covariation(d.A, W, s) for _, s in seq]

    rows = collect(stat, EnsembleConfig(args.paths, workers=args.workers))
    names = ("S(A,A)", "S(A,B)", "S(A,W)")
    stats = [EnsembleStats.from_samples(n, rows[:, k * m : (k + 1) * m], seq.indices) for k, n in enumerate(names)]
    print("level " + " ".join(f"{n}_mean {n}_se" for n in names))
    for j, n in enumerate(seq.indices):
        print(f"{n} " + " ".join(f"{st.mean[j]:.6g} {st.se[j]:.2g}" for st in stats))
    target = float(np.sum(np.diff(beta.on(g).values) ** 2 * g.points[1:]))
    print(f"conditional target for S(A,A) given beta: {target:.6f}")
    for st in stats[1:]:
        ok, trend = orthogonality_verdict(st)
        print(f"{st.name}: orthogonal {ok}, trend {trend}")


if __name__ == "__main__":
    main()
