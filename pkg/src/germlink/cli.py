"""Command line driver: ``germlink <subcommand> ...``.

Exit codes: 0 success, 1 input error, 2 internal-consistency failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .catalog import CATALOG
from .germ import MapGerm
from .invariants import ConsistencyError, full_report, oracle_cross_checks, presentation_matrix
from .membrane import (
    DELTA,
    MembraneError,
    SignMismatch,
    verify_lemma_triple_L1,
    verify_lemma_umbrella_L1,
    verify_umbrella_L2,
)
from .parse import GermSemanticError, ParseError
from .poly import Poly
from .report import serialize_presentation, serialize_report, serialize_tables, verdict_text

EXIT_OK, EXIT_INPUT, EXIT_CONSISTENCY = 0, 1, 2


class InputError(Exception):
    pass


def load_germ(spec: str) -> MapGerm:
    """A catalog name, a file holding a germ description, or inline germ text."""
    if spec in CATALOG:
        return CATALOG[spec].germ()
    if os.path.isfile(spec):
        with open(spec, encoding="utf-8") as fh:
            text = fh.read()
        label = os.path.splitext(os.path.basename(spec))[0]
        return MapGerm.parse(text, label)
    if "(" in spec and "=" in spec:
        return MapGerm.parse(spec)
    raise InputError(f"unknown germ {spec!r}: not a catalog name, file, or germ description")


def _out(data: bytes) -> None:
    sys.stdout.buffer.write(data)
    sys.stdout.flush()


def cmd_invariants(args) -> int:
    g = load_germ(args.germ)
    t0 = time.perf_counter()
    rep = full_report(g)
    checks = None if args.no_oracle else oracle_cross_checks(g, rep, args.degree_cap)
    timing = {"seconds": round(time.perf_counter() - t0, 3)} if args.timing else None
    _out(serialize_report(rep, "json" if args.json else "text", checks, timing))
    if checks and any(c["agree"] is False for c in checks.values()):
        print("error: standard basis and Macaulay oracle disagree", file=sys.stderr)
        return EXIT_CONSISTENCY
    return EXIT_OK


def cmd_check(args) -> int:
    g = load_germ(args.germ)
    rep = full_report(g)
    if args.json:
        doc = {"schema": 1, "germ": g.to_text(), "finitely_determined": rep.finitely_determined,
               "evidence": rep.evidence}
        _out((json.dumps(doc, indent=2, sort_keys=True) + "\n").encode())
    else:
        _out(verdict_text(rep))
    return EXIT_OK


def cmd_presentation(args) -> int:
    g = load_germ(args.germ)
    lam = presentation_matrix(g)
    _out(serialize_presentation(g, lam, "json" if args.json else "text"))
    return EXIT_OK if lam.check_relations() else EXIT_CONSISTENCY


SCENARIOS = {
    "umbrella-l1": verify_lemma_umbrella_L1,
    "triple-l1": verify_lemma_triple_L1,
    "umbrella-l2": verify_umbrella_L2,
}


def cmd_verify(args) -> int:
    names = list(SCENARIOS) if args.scenario == "all" else [args.scenario]
    tables = []
    second = Poly.parse("3/7*delta^2", DELTA)
    for name in names:
        t = SCENARIOS[name]()
        if args.delta_check:
            again = SCENARIOS[name](delta=second)
            t.checks["delta_independent"] = again.signs() == t.signs() and again.total == t.total
            if not t.checks["delta_independent"]:
                raise SignMismatch(f"{name}: signs depend on the choice of delta")
        tables.append(t)
    _out(serialize_tables(tables, "json" if args.json else "text"))
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.json:
        doc = {"schema": 1, "germs": [
            {"name": s.name, "text": s.text, "provenance": s.provenance, "note": s.note} for s in CATALOG.values()
        ]}
        _out((json.dumps(doc, indent=2, sort_keys=True) + "\n").encode())
    else:
        width = max(len(n) for n in CATALOG)
        lines = [f"{s.name.ljust(width)}  {s.text}   [{s.provenance}] {s.note}" for s in CATALOG.values()]
        _out(("\n".join(lines) + "\n").encode())
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = load_germ(args.germ)
    checks = oracle_cross_checks(g, None, args.degree_cap)
    if args.json:
        _out((json.dumps({"schema": 1, "germ": g.to_text(), "cross_checks": checks}, indent=2, sort_keys=True) + "\n").encode())
    else:
        for name, c in checks.items():
            _out(
                f"{name}: standard basis {c['standard_basis']}, oracle {c['oracle']} (cap {c['cap']}), "
                f"agree: {c['agree']}\n".encode()
            )
    return EXIT_CONSISTENCY if any(c["agree"] is False for c in checks.values()) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="germlink", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"germlink {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, germ=True):
        if germ:
            sp.add_argument("germ", help="catalog name, file path, or inline 'Phi(s,t) = (...)'")
        sp.add_argument("--json", action="store_true", help="emit the JSON document")

    sp = sub.add_parser("invariants", help="C, T, L, d and the finite-determinacy verdict")
    common(sp)
    sp.add_argument("--degree-cap", type=int, default=12, help="Macaulay oracle degree cap (default 12)")
    sp.add_argument("--no-oracle", action="store_true", help="skip the oracle cross-checks")
    sp.add_argument("--timing", action="store_true", help="add wall-clock time (breaks byte-identical output)")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("check", help="finite-determinacy verdict with evidence")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("presentation", help="presentation matrix and Fitting ideals F0..F2")
    common(sp)
    sp.set_defaults(func=cmd_presentation)

    sp = sub.add_parser("verify-local", help="membrane intersection sign tables")
    sp.add_argument("scenario", choices=[*SCENARIOS, "all"])
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--delta-check", action="store_true", help="rerun with a second formal delta")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("catalog", help="list built-in germs")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("oracle", help="standard basis vs Macaulay oracle on the C and T ideals")
    common(sp)
    sp.add_argument("--degree-cap", type=int, default=12)
    sp.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, ParseError, GermSemanticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ConsistencyError, SignMismatch) as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (ValueError, MembraneError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
