"""Relations among module generators of Phi_* O_2 over the target ring.

Module elements are term dicts keyed by ``(position, *exponents)``.  Given
generators g_1..g_m in the source ring, the relation module is cut out of the
submodule of A^(1+m), A = Q(i)[s,t,x,y,z], generated by (g_j | e_j) and by
(h | 0) for h in the graph ideal.  A position-0-first order that then
eliminates s and t leaves exactly the target-only relations.
"""

from __future__ import annotations

from .gb import _buchberger, _mora, _mora_nf
from .poly import Ideal, Poly, Ring

GRAPH_RING = Ring(("s", "t", "x", "y", "z"))
TARGET_RING = Ring(("x", "y", "z"))


class SyzygyError(ValueError):
    pass


def graph_ideal(branch) -> Ideal:
    """(x - phi1, y - phi2, z - phi3) in Q(i)[s,t,x,y,z]."""
    x, y, z = (Poly.var(GRAPH_RING, v) for v in "xyz")
    comps = [c.to_ring(GRAPH_RING) for c in branch]
    return Ideal(GRAPH_RING, [x - comps[0], y - comps[1], z - comps[2]])


def _elim_key(e):
    # position 0 above everything, then eliminate s,t, then position, then degrevlex
    rest = e[1:]
    return (e[0] == 0, rest[0] + rest[1], -e[0], sum(rest), tuple(-a for a in reversed(rest)))


def _local_key(e):
    rest = e[1:]
    return (-sum(rest), -e[0], tuple(-a for a in reversed(rest)))


def _vec(poly: Poly, pos: int) -> dict:
    return {(pos,) + e: c for e, c in poly.terms.items()}


def global_relations(gens, graph: Ideal) -> list:
    """All target-only relations in a Gröbner basis of the relation module, as term dicts."""
    if graph.ring != GRAPH_RING:
        raise SyzygyError(f"graph ideal must live in {GRAPH_RING}")
    vecs = []
    for j, g in enumerate(gens):
        v = _vec(g.to_ring(GRAPH_RING), 0)
        v[(j + 1,) + (0,) * GRAPH_RING.ngens] = Poly.one(GRAPH_RING).constant_term()
        vecs.append(v)
    for h in graph.generators:
        vecs.append(_vec(h, 0))
    G = _buchberger(vecs, _elim_key, m=1)
    out = []
    for g in G:
        if g.lm[0] != 0 and g.lm[1] + g.lm[2] == 0:
            # drop the s,t slots: (pos, x, y, z)
            out.append({(e[0],) + e[3:]: c for e, c in g.terms.items()})
    return out


def _local_member(v: dict, basis: list) -> bool:
    if not basis:
        return not v
    return _mora_nf(v, basis, _local_key, 1) is None


def minimize_local(rels: list) -> list:
    """Greedy minimal generating set of the relation module localized at 0."""
    def rank(v):
        return (min(sum(e[1:]) for e in v), max(sum(e[1:]) for e in v), len(v), sorted(v))

    kept: list = []
    for v in sorted(rels, key=rank):
        sb = _mora(kept, _local_key, m=1) if kept else []
        if not _local_member(v, sb):
            kept.append(v)
    # second pass: drop anything the others already generate locally
    k = len(kept) - 1
    while k >= 0 and len(kept) > 1:
        others = kept[:k] + kept[k + 1 :]
        if _local_member(kept[k], _mora(others, _local_key, m=1)):
            kept = others
        k -= 1
    return kept


def to_rows(rels: list, m: int) -> list:
    rows = []
    for v in rels:
        row = [dict() for _ in range(m)]
        for e, c in v.items():
            row[e[0] - 1][e[1:]] = c
        rows.append([Poly(TARGET_RING, r) for r in row])
    return rows


def syzygy_relations(gens, germ_graph_ideal: Ideal, minimize: bool = True) -> list:
    """Rows r over (x,y,z) with sum_j r_j(Phi) g_j = 0 generating the local relation module."""
    if not gens:
        raise SyzygyError("no module generators: the germ is not finite")
    rels = global_relations(gens, germ_graph_ideal)
    if not rels:
        raise SyzygyError("no relations found: the germ is not finite onto its image")
    if minimize:
        rels = minimize_local(rels)
    return to_rows(rels, len(gens))


def check_relation(row, gens, branch) -> bool:
    """Substitute Phi into the row and verify the combination vanishes identically."""
    from .germ import SOURCE

    sub = {"x": branch[0], "y": branch[1], "z": branch[2]}
    total = Poly.zero(SOURCE)
    for r, g in zip(row, gens):
        total = total + r.substitute(sub, ring=SOURCE) * g.to_ring(SOURCE)
    return total.is_zero()
