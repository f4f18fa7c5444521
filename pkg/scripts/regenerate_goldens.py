"""Rewrite tests/golden/ from the current library.

A germ's report is only written after every standard-basis codimension it
depends on has been confirmed by the Macaulay oracle; otherwise the script
stops without touching that file.

    python3 scripts/regenerate_goldens.py [--degree-cap 12]
"""

import argparse
import pathlib
import sys

from germlink.catalog import CATALOG
from germlink.invariants import full_report, oracle_cross_checks, presentation_matrix
from germlink.membrane import verify_all
from germlink.report import serialize_presentation, serialize_report, serialize_tables

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree-cap", type=int, default=12)
    args = ap.parse_args(argv)
    GOLDEN.mkdir(parents=True, exist_ok=True)
    failed = []
    for name, src in CATALOG.items():
        g = src.germ()
        rep = full_report(g)
        checks = oracle_cross_checks(g, rep, args.degree_cap)
        bad = {k: v for k, v in checks.items() if v["agree"] is not True}
        if bad:
            print(f"{name}: oracle did not confirm {sorted(bad)}; golden left unchanged", file=sys.stderr)
            failed.append(name)
            continue
        (GOLDEN / f"{name}.json").write_bytes(serialize_report(rep, "json", checks))
        (GOLDEN / f"{name}.presentation.json").write_bytes(
            serialize_presentation(g, presentation_matrix(g), "json")
        )
        print(f"{name}: C={rep.C} T={rep.T} L={rep.L} verdict={rep.finitely_determined}")
    tables = verify_all(delta_check=True)
    for t in tables:
        (GOLDEN / f"verify-{t.scenario}.json").write_bytes(serialize_tables([t], "json"))
        print(f"{t.scenario}: total {t.total}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
