"""Independent codimension oracle by truncated linear algebra.

In the local ring truncated at degree ``cap`` the ideal I is spanned by the
truncations of ``x^a * f`` (f a generator, |a| <= cap), because every unit
multiplier agrees with a polynomial modulo m^(cap+1).  The dimension of
O / (I + m^(cap+1)) is then a plain rank computation.

If that dimension is the same at ``cap - 1`` and ``cap`` then m^cap lies in
I + m^(cap+1), so m^cap is contained in I by Nakayama, and the value is the
true codimension.  A change between the two caps is reported as unstable.
"""

from __future__ import annotations

import itertools

from .gb import Codim
from .poly import Ideal


class OracleUnstable(ArithmeticError):
    """The truncated dimension has not settled at the requested cap."""

    def __init__(self, values: dict, cap: int):
        super().__init__(
            f"UNSTABLE: truncated codimension still changing at cap {cap} "
            f"({values[cap - 1]} at cap {cap - 1}, {values[cap]} at cap {cap})"
        )
        self.values = values
        self.cap = cap


def monomials_upto(nvars: int, cap: int) -> list:
    out = []
    for d in range(cap + 1):
        for c in itertools.combinations_with_replacement(range(nvars), d):
            e = [0] * nvars
            for k in c:
                e[k] += 1
            out.append(tuple(e))
    return out


def truncated_codim(I: Ideal, cap: int) -> int:
    """dim_C O / (I + m^(cap+1)) by exact row reduction."""
    n = I.ring.ngens
    monos = monomials_upto(n, cap)
    col = {e: k for k, e in enumerate(monos)}
    pivots: dict = {}
    for f in I.generators:
        if f.order() > cap:
            continue
        for a in monos:
            sa = sum(a)
            row = {}
            for e, c in f.terms.items():
                if sum(e) + sa <= cap:
                    row[col[tuple(x + y for x, y in zip(a, e))]] = c
            _insert(row, pivots)
    return len(monos) - len(pivots)


def _insert(row: dict, pivots: dict) -> None:
    while row:
        c = min(row)
        p = pivots.get(c)
        if p is None:
            inv = row[c].inverse()
            pivots[c] = {k: v * inv for k, v in row.items()}
            return
        f = row[c]
        for k, v in p.items():
            w = row.get(k)
            w = -(f * v) if w is None else w - f * v
            if w:
                row[k] = w
            else:
                row.pop(k, None)


def macaulay_codim_oracle(I: Ideal, degree_cap: int = 12) -> Codim:
    """Codimension of I in the local ring, or :class:`OracleUnstable`."""
    if degree_cap < 1:
        raise ValueError("degree_cap must be at least 1")
    values = {degree_cap - 1: truncated_codim(I, degree_cap - 1), degree_cap: truncated_codim(I, degree_cap)}
    if values[degree_cap - 1] != values[degree_cap]:
        raise OracleUnstable(values, degree_cap)
    return Codim(values[degree_cap])


def oracle_search(I: Ideal, max_cap: int = 12, start: int = 1):
    """Smallest stable cap up to ``max_cap``; returns (Codim or None, cap reached)."""
    prev = truncated_codim(I, start - 1) if start >= 1 else None
    for cap in range(start, max_cap + 1):
        cur = truncated_codim(I, cap)
        if prev == cur:
            return Codim(cur), cap
        prev = cur
    return None, max_cap
