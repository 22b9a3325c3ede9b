"""Tables for the three counterexamples: alternating sums, sawtooth pre-QV, band crossings."""
import argparse

from weakdirichlet.pathology import build_alternating, continuity_in_probability, crossing_table, no_cadlag_process, sawtooth_pre_qv_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=20)
    ap.add_argument("--max-n", type=int, default=9)
    args = ap.parse_args()

    f = build_alternating(args.depth)
    print("# alternating: k S_k max_gap bound")
    for k, s in f.S_table():
        print(k, f"{s:.15f}", f"{f.max_neighbor_gap(k):.4e}", f"{f.neighbor_bound(k):.4e}")
    print(f"# energy over all levels {f.energy(range(1, args.depth + 1))}, even levels {f.energy(range(2, args.depth + 1, 2))}")

    for variant, t in (("sqrt", 0.9), ("linear", 1.0), ("linear", 0.9)):
        print(f"# sawtooth {variant} at t = {t}: n Q_n")
        for n, v in sawtooth_pre_qv_table(variant, range(1, args.max_n + 1), t):
            print(n, f"{v:.10g}")

    proc = no_cadlag_process(0)
    print("# no cadlag modification: level crossings of [1/4, 3/4]")
    for n, c in crossing_table(proc, range(6, 23, 2)):
        print(n, c)
    hs = [0.1, 0.01, 0.001, 0.0001]
    print("# P(|Y_{t+h} - Y_t| > 0.1) at t = 1.3")
    for h, p in zip(hs, continuity_in_probability(proc, 1.3, hs)):
        print(h, p)


if __name__ == "__main__":
    main()
