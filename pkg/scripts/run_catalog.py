"""Print a one-line summary of every catalog germ, with wall-clock times."""

import time

from germlink.catalog import CATALOG
from germlink.invariants import full_report


def main():
    print(f"{'germ':16s} {'corank':>6s} {'C':>8s} {'T':>4s} {'L':>9s}  verdict       d   [seconds]")
    for name, src in CATALOG.items():
        t0 = time.perf_counter()
        r = full_report(src.germ())
        dt = time.perf_counter() - t0
        d = ", ".join(str(p) for p in r.d) or "undefined"
        print(f"{name:16s} {r.corank:6d} {str(r.C):>8s} {str(r.T):>4s} {str(r.L):>9s}  "
              f"{r.finitely_determined:12s}  {d}   [{dt:.3f}]")


if __name__ == "__main__":
    main()
