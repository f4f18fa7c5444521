"""Text and JSON serialization of reports and sign tables (deterministic bytes)."""

from __future__ import annotations

import json

from . import __version__
from .gb import Codim
from .invariants import InvariantReport, PresentationMatrix, fitting_ideal

SCHEMA = 1


def _codim(c):
    if c is None:
        return "error"
    if isinstance(c, Codim):
        return c.to_json()
    return c


def germ_echo(g) -> dict:
    return {
        "label": g.label,
        "text": g.to_text(),
        "branches": [[str(c) for c in b] for b in g.branches],
    }


def report_dict(r: InvariantReport, cross_checks: dict | None = None, timing: dict | None = None) -> dict:
    doc = {
        "schema": SCHEMA,
        "tool": "germlink",
        "version": __version__,
        "germ": germ_echo(r.germ),
        "corank": r.corank,
        "C": _codim(r.C),
        "T": _codim(r.T),
        "T_fitting": _codim(r.T_fitting),
        "T_triple_space": _codim(r.T_triple_space),
        "L": r.L,
        "d": [str(d) for d in r.d] if r.germ.is_multigerm else (str(r.d[0]) if r.d else "undefined"),
        "d_route": r.d_route,
        "d_squarefree": r.d_squarefree,
        "d_locally_squarefree": r.d_locally_squarefree,
        "d_routes_agree": r.d_routes_agree,
        "finitely_determined": r.finitely_determined,
        "evidence": list(r.evidence),
        "image_equation": str(r.image_equation) if r.image_equation is not None else None,
        "multiplicities": list(r.multiplicities),
        "errors": dict(sorted(r.errors.items())),
    }
    if cross_checks is not None:
        doc["cross_checks"] = cross_checks
    if timing is not None:
        doc["timing"] = timing
    return doc


def _dumps(doc) -> bytes:
    return (json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n").encode("utf-8")


def serialize_report(r: InvariantReport, fmt: str = "text", cross_checks=None, timing=None) -> bytes:
    doc = report_dict(r, cross_checks, timing)
    if fmt == "json":
        return _dumps(doc)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [
        f"germ: {doc['germ']['text']}" + (f"  [{r.germ.label}]" if r.germ.label else ""),
        f"corank: {doc['corank']}",
        f"C = {doc['C']}",
        f"T = {doc['T']}  (Fitting: {doc['T_fitting']}, triple space: {doc['T_triple_space']})",
        f"L = {doc['L']}",
        "d = " + (", ".join(doc["d"]) if isinstance(doc["d"], list) else doc["d"]) + f"  ({doc['d_route']})",
        f"d squarefree: {doc['d_squarefree']}",
        f"image equation: {doc['image_equation']}",
        f"finitely determined: {doc['finitely_determined']}",
    ]
    for e in doc["evidence"]:
        lines.append(f"  evidence: {e}")
    for k, v in doc["errors"].items():
        lines.append(f"  error in {k}: {v}")
    if cross_checks:
        for name, c in cross_checks.items():
            lines.append(
                f"  oracle {name}: standard basis {c['standard_basis']}, oracle {c['oracle']} "
                f"(cap {c['cap']}), agree: {c['agree']}"
            )
    if timing:
        lines.append(f"time: {timing['seconds']:.3f} s")
    return ("\n".join(lines) + "\n").encode("utf-8")


def verdict_text(r: InvariantReport) -> bytes:
    lines = [f"finitely determined: {r.finitely_determined}"] + [f"  {e}" for e in r.evidence]
    return ("\n".join(lines) + "\n").encode("utf-8")


def presentation_dict(g, lam: PresentationMatrix) -> dict:
    doc = {
        "schema": SCHEMA,
        "germ": germ_echo(g),
        "size": lam.size,
        "rows": [[str(e) for e in row] for row in lam.entries],
        "generators": [[str(x) for x in gs] for gs in lam.generators],
        "branch_blocks": [list(b) for b in lam.branch_blocks],
        "relations_hold": lam.check_relations(),
        "determinant": str(lam.determinant()) if lam.is_square else None,
        "fitting": {},
    }
    for k in range(3):
        F = fitting_ideal(lam, k)
        doc["fitting"][f"F{k}"] = [str(p) for p in F.generators]
    return doc


def serialize_presentation(g, lam: PresentationMatrix, fmt: str = "text") -> bytes:
    doc = presentation_dict(g, lam)
    if fmt == "json":
        return _dumps(doc)
    lines = [f"germ: {doc['germ']['text']}", f"generators: {doc['generators']}", "relations (rows):"]
    width = max((len(e) for row in doc["rows"] for e in row), default=1)
    for row in doc["rows"]:
        lines.append("  [ " + "  ".join(e.rjust(width) for e in row) + " ]")
    lines.append(f"relations substitute to zero: {doc['relations_hold']}")
    lines.append(f"det = {doc['determinant']}")
    for k, gens in doc["fitting"].items():
        lines.append(f"{k} = (" + ", ".join(gens) + ")")
    return ("\n".join(lines) + "\n").encode("utf-8")


def table_dict(t) -> dict:
    return {
        "scenario": t.scenario,
        "entries": [
            {"membrane": e.membrane, "sheet": e.sheet, "sign": e.sign, "point": e.point, "route": e.route}
            for e in t.entries
        ],
        "total": t.total,
        "membranes": dict(t.membranes),
        "checks": dict(sorted(t.checks.items())),
    }


def serialize_tables(tables, fmt: str = "text") -> bytes:
    if fmt == "json":
        return _dumps({"schema": SCHEMA, "tables": [table_dict(t) for t in tables]})
    lines = []
    for t in tables:
        lines.append(f"== {t.scenario} ==")
        for k, v in t.membranes.items():
            lines.append(f"  {k}: {v}")
        for e in t.entries:
            sign = f"{e.sign:+d}"
            lines.append(f"  int({e.membrane}, {e.sheet}) = {sign}  at {e.point}  [{e.route}]")
        lines.append(f"  total = {t.total}")
        for k, v in sorted(t.checks.items()):
            lines.append(f"  check {k}: {v}")
    return ("\n".join(lines) + "\n").encode("utf-8")
