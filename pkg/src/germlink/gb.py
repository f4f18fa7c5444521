"""Gröbner bases (Buchberger), local standard bases (Mora) and codimensions.

The engine works on raw term dictionaries ``{exponents: Scalar}``.  For
submodules of free modules the first slot of every exponent tuple is the
component index; terms only divide each other inside one component.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .orders import NEGDEGREVLEX, MonomialOrder
from .poly import Ideal, Poly, Ring
from .scalar import ZERO


# ---------------------------------------------------------------------------
# codimension values


@dataclass(frozen=True)
class Codim:
    """Non-negative integer or infinite."""

    value: int | None

    @property
    def finite(self) -> bool:
        return self.value is not None

    def __int__(self) -> int:
        if self.value is None:
            raise ValueError("infinite codimension has no integer value")
        return self.value

    def __add__(self, other: "Codim") -> "Codim":
        if not self.finite or not other.finite:
            return INFINITE
        return Codim(self.value + other.value)

    def __eq__(self, other):
        if isinstance(other, Codim):
            return self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __str__(self) -> str:
        return "infinite" if self.value is None else str(self.value)

    def to_json(self):
        return "infinite" if self.value is None else self.value


INFINITE = Codim(None)


# ---------------------------------------------------------------------------
# engine internals


class _P:
    """Working polynomial with cached leading data."""

    __slots__ = ("terms", "lm", "lc", "deg", "ecart")

    def __init__(self, terms: dict, key, m: int):
        self.terms = terms
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]
        self.deg = max(sum(e[m:]) for e in terms)
        self.ecart = self.deg - sum(self.lm[m:])


def _divides(a, b, m: int) -> bool:
    if m and a[0] != b[0]:
        return False
    for x, y in zip(a[m:], b[m:]):
        if x > y:
            return False
    return True


def _quot(b, a, m: int):
    return (0,) * m + tuple(y - x for x, y in zip(a[m:], b[m:]))


def _lcm(a, b, m: int):
    return a[:m] + tuple(max(x, y) for x, y in zip(a[m:], b[m:]))


def _coprime(a, b, m: int) -> bool:
    return all(not (x and y) for x, y in zip(a[m:], b[m:]))


def _axpy(f: dict, c, mono, g: dict) -> dict:
    """f - c * mono * g as a new dict."""
    out = dict(f)
    for e, v in g.items():
        t = tuple(x + y for x, y in zip(e, mono))
        w = out.get(t, ZERO) - c * v
        if w:
            out[t] = w
        else:
            out.pop(t, None)
    return out


def _spoly(f: _P, g: _P, m: int) -> dict:
    l = _lcm(f.lm, g.lm, m)
    uf = _quot(l, f.lm, m)
    ug = _quot(l, g.lm, m)
    a = {tuple(x + y for x, y in zip(e, uf)): c * g.lc for e, c in f.terms.items()}
    return _axpy(a, f.lc, ug, g.terms)


def _reduce(f: dict, basis: list, key, m: int, full: bool = True) -> dict:
    """Normal form of f with respect to ``basis`` under a global order."""
    rest: dict = {}
    f = dict(f)
    while f:
        e = max(f, key=key)
        c = f[e]
        for g in basis:
            if _divides(g.lm, e, m):
                f = _axpy(f, c / g.lc, _quot(e, g.lm, m), g.terms)
                break
        else:
            if not full:
                f.update(rest)
                return f
            rest[e] = c
            del f[e]
    return rest


def _buchberger(polys, key, m: int = 0) -> list:
    """Reduced Gröbner basis of the given term dicts (global order ``key``)."""
    G: list = []
    pairs: set = set()

    def add(h: dict):
        p = _P(h, key, m)
        k = len(G)
        G.append(p)
        for j in range(k):
            if not m or G[j].lm[0] == p.lm[0]:
                pairs.add((j, k))

    for f in polys:
        if f:
            h = _reduce(f, G, key, m)
            if h:
                add(h)

    while pairs:
        i, j = min(pairs, key=lambda ij: (key(_lcm(G[ij[0]].lm, G[ij[1]].lm, m)), ij))
        pairs.discard((i, j))
        gi, gj = G[i], G[j]
        l = _lcm(gi.lm, gj.lm, m)
        # product criterion (ideals only) and Buchberger's chain criterion
        if not m and _coprime(gi.lm, gj.lm, m):
            continue
        chain = False
        for k, gk in enumerate(G):
            if k in (i, j):
                continue
            if _divides(gk.lm, l, m):
                a, b = (min(i, k), max(i, k)), (min(j, k), max(j, k))
                if a not in pairs and b not in pairs:
                    chain = True
                    break
        if chain:
            continue
        h = _reduce(_spoly(gi, gj, m), G, key, m)
        if h:
            add(h)

    return _interreduce(G, key, m)


def _interreduce(G: list, key, m: int) -> list:
    G = sorted(G, key=lambda g: key(g.lm))
    minimal = []
    for k, g in enumerate(G):
        if any(_divides(h.lm, g.lm, m) for h in G[:k]):
            continue
        if any(_divides(h.lm, g.lm, m) and h.lm != g.lm for h in G[k + 1 :]):
            continue
        minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1 :]
        h = _reduce(g.terms, others, key, m)
        inv = h[max(h, key=key)].inverse()
        out.append(_P({e: c * inv for e, c in h.items()}, key, m))
    return sorted(out, key=lambda g: key(g.lm))


def _mora_nf(f: dict, T: list, key, m: int) -> _P | None:
    """Mora's weak normal form with ecart-driven enlargement of T."""
    if not f:
        return None
    h = _P(f, key, m)
    T = list(T)
    while True:
        best = None
        for g in T:
            if _divides(g.lm, h.lm, m) and (best is None or g.ecart < best.ecart):
                best = g
                if g.ecart == 0:
                    break
        if best is None:
            return h
        if best.ecart > h.ecart:
            T.append(h)
        terms = _axpy(h.terms, h.lc / best.lc, _quot(h.lm, best.lm, m), best.terms)
        if not terms:
            return None
        h = _P(terms, key, m)


def _mora(polys, key, m: int = 0) -> list:
    """Standard basis for a local order (1 is the largest monomial)."""
    G: list = []
    pairs: list = []
    for f in polys:
        if f:
            G.append(_P(dict(f), key, m))
    for j in range(len(G)):
        for i in range(j):
            if not m or G[i].lm[0] == G[j].lm[0]:
                pairs.append((i, j))
    while pairs:
        pairs.sort(key=lambda ij: (sum(_lcm(G[ij[0]].lm, G[ij[1]].lm, m)[m:]), ij))
        i, j = pairs.pop(0)
        h = _mora_nf(_spoly(G[i], G[j], m), G, key, m)
        if h is not None:
            k = len(G)
            G.append(h)
            for a in range(k):
                if not m or G[a].lm[0] == h.lm[0]:
                    pairs.append((a, k))
    # minimal standard basis
    G = sorted(G, key=lambda g: (sum(g.lm[m:]), key(g.lm)), reverse=False)
    out = []
    for g in G:
        if not any(_divides(h.lm, g.lm, m) for h in out):
            out.append(g)
    return out


# ---------------------------------------------------------------------------
# public API


@dataclass
class StandardBasis:
    ideal: Ideal
    order: MonomialOrder
    basis: list
    leading_ideal: list = field(default_factory=list)

    @property
    def ring(self) -> Ring:
        return self.ideal.ring

    def leading_monomials(self) -> list:
        return [Poly.monomial(self.ring, e) for e in self.leading_ideal]

    def reduce(self, f: Poly) -> Poly:
        """Normal form (global orders only)."""
        if self.order.is_local:
            raise ValueError("full reduction is only defined for global orders")
        ps = [_P(dict(g.terms), self.order.key, 0) for g in self.basis]
        return Poly(self.ring, _reduce(dict(f.terms), ps, self.order.key, 0), _trusted=True)

    def contains(self, f: Poly) -> bool:
        return self.reduce(f).is_zero()

    def is_unit_ideal(self) -> bool:
        return any(not any(e) for e in self.leading_ideal)


def groebner_basis(I: Ideal, order: MonomialOrder) -> StandardBasis:
    if order.is_local:
        raise ValueError("use standard_basis_local for local orders")
    key = order.key
    G = _buchberger([dict(g.terms) for g in I.generators], key)
    basis = [Poly(I.ring, g.terms, _trusted=True) for g in G]
    return StandardBasis(I, order, basis, [g.lm for g in G])


def standard_basis_local(I: Ideal, order: MonomialOrder = NEGDEGREVLEX) -> StandardBasis:
    if not order.is_local:
        raise ValueError("standard_basis_local needs a local order")
    G = _mora([dict(g.terms) for g in I.generators], order.key)
    basis = [Poly(I.ring, g.terms, _trusted=True) for g in G]
    return StandardBasis(I, order, basis, [g.lm for g in G])


def staircase(leading: list, nvars: int):
    """Standard monomials outside the monomial ideal; None if infinitely many."""
    if any(not any(e) for e in leading):
        return []
    bounds = []
    for k in range(nvars):
        pure = [e[k] for e in leading if e[k] and all(x == 0 for j, x in enumerate(e) if j != k)]
        if not pure:
            return None
        bounds.append(min(pure))
    out = []
    for e in itertools.product(*(range(b) for b in bounds)):
        if not any(all(x <= y for x, y in zip(l, e)) for l in leading):
            out.append(e)
    return out


def local_codim(I: Ideal) -> Codim:
    """dim_C of O_{(C^n,0)} / I, from the staircase of a local standard basis."""
    if I.is_zero():
        return INFINITE if I.ring.ngens else Codim(1)
    sb = standard_basis_local(I)
    st = staircase(sb.leading_ideal, I.ring.ngens)
    return INFINITE if st is None else Codim(len(st))


def local_staircase(I: Ideal):
    sb = standard_basis_local(I)
    return staircase(sb.leading_ideal, I.ring.ngens)


def eliminate(I: Ideal, drop) -> Ideal:
    """Generators of I intersected with the subring free of the ``drop`` variables."""
    drop = [v for v in drop if v in I.ring]
    if not drop:
        order = MonomialOrder("global_degrevlex")
    else:
        order = MonomialOrder.elimination(I.ring, drop)
    sb = groebner_basis(I, order)
    idx = [I.ring.index_of(v) for v in drop]
    keep = [g for g in sb.basis if all(e[k] == 0 for e in g.terms for k in idx)]
    return Ideal(I.ring, keep)


def reduced_basis(I: Ideal) -> list:
    return groebner_basis(I, MonomialOrder("global_degrevlex")).basis
