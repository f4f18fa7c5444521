"""Apply random Gaussian-rational linear coordinate changes to a germ and
compare C, T, L and the verdict against the untransformed germ.

    python3 scripts/linear_invariance.py S1 --trials 20 --seed 7
"""

import argparse
import random
import time

from germlink.algebra import scalar_rank
from germlink.cli import load_germ
from germlink.invariants import full_report
from germlink.scalar import Scalar


def random_invertible(rng, n, bound=3):
    while True:
        m = [[Scalar(rng.randint(-bound, bound), rng.randint(-bound, bound)) for _ in range(n)] for _ in range(n)]
        if scalar_rank(m) == n:
            return m


def signature(r):
    return (str(r.C), str(r.T), r.L, r.finitely_determined)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("germ")
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    g = load_germ(args.germ)
    base = signature(full_report(g))
    print("base:", base)
    t0 = time.perf_counter()
    bad = 0
    for k in range(args.trials):
        h = g.transform(random_invertible(rng, 2), random_invertible(rng, 3))
        sig = signature(full_report(h))
        if sig != base:
            bad += 1
            print(f"trial {k}: {sig} differs for {h.to_text()}")
    print(f"{args.trials - bad}/{args.trials} unchanged in {time.perf_counter() - t0:.2f} s")


if __name__ == "__main__":
    main()
