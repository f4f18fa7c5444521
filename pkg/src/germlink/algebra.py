"""Exact determinants, minors, resultants and multivariate gcds."""

from __future__ import annotations

import itertools

from .poly import Ideal, Poly, Ring
from .scalar import ONE, ZERO, Scalar


# -- determinants ----------------------------------------------------------


def det(matrix, ring: Ring) -> Poly:
    """Fraction-free (Bareiss) determinant of a square matrix of Poly."""
    n = len(matrix)
    if n == 0:
        return Poly.one(ring)
    a = [[e if isinstance(e, Poly) else Poly.const(ring, e) for e in row] for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = Poly.one(ring)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return Poly.zero(ring)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * piv - a[i][k] * a[k][j]).exact_div(prev)
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def minors(matrix, size: int, ring: Ring) -> list:
    """All size x size minors (nonzero ones only); size <= 0 gives [1]."""
    if size <= 0:
        return [Poly.one(ring)]
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    out = []
    for rows in itertools.combinations(range(m), size):
        for cols in itertools.combinations(range(n), size):
            d = det([[matrix[r][c] for c in cols] for r in rows], ring)
            if not d.is_zero():
                out.append(d)
    return out


# -- resultants ------------------------------------------------------------


def _coeff_list(p: Poly, v: str) -> list:
    cs = p.coeffs_in(v)
    deg = max(cs)
    return [cs.get(k, Poly.zero(p.ring)) for k in range(deg, -1, -1)]


def resultant(p: Poly, q: Poly, v: str) -> Poly:
    """Sylvester resultant of p and q with respect to v (same ring, v dropped)."""
    if p.ring != q.ring:
        raise ValueError("resultant needs a common ring")
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of the zero polynomial")
    m, n = p.degree_in(v), q.degree_in(v)
    if m <= 0 and n <= 0:
        raise ValueError(f"resultant needs positive degree in {v} for at least one input")
    if m <= 0:
        return p.to_ring(p.ring.without(v)) ** n
    if n <= 0:
        return q.to_ring(q.ring.without(v)) ** m
    a, b = _coeff_list(p, v), _coeff_list(q, v)
    zero = Poly.zero(p.ring)
    size = m + n
    rows = []
    for k in range(n):
        rows.append([zero] * k + a + [zero] * (size - k - len(a)))
    for k in range(m):
        rows.append([zero] * k + b + [zero] * (size - k - len(b)))
    r = det(rows, p.ring)
    return r.to_ring(p.ring.without(v))


# -- gcd -------------------------------------------------------------------


def _main_var(ps) -> str | None:
    used = set()
    for p in ps:
        used |= p.variables_used()
    for v in ps[0].ring.variables:
        if v in used:
            return v
    return None


def _normalize(p: Poly) -> Poly:
    return p.monic() if not p.is_zero() else p


def content(p: Poly, v: str) -> Poly:
    """gcd of the coefficients of p viewed as a polynomial in v."""
    g = Poly.zero(p.ring)
    for c in p.coeffs_in(v).values():
        g = poly_gcd(g, c)
        if g.is_constant():
            return Poly.one(p.ring)
    return g


def _prem(a: Poly, b: Poly, v: str) -> Poly:
    db = b.degree_in(v)
    lcb = b.coeffs_in(v)[db]
    x = Poly.var(a.ring, v)
    r = a
    while not r.is_zero() and r.degree_in(v) >= db:
        dr = r.degree_in(v)
        lcr = r.coeffs_in(v)[dr]
        r = r * lcb - lcr * x ** (dr - db) * b
    return r


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Greatest common divisor over Q(i), normalized to leading coefficient 1."""
    if p.is_zero():
        return _normalize(q)
    if q.is_zero():
        return _normalize(p)
    v = _main_var([p, q])
    if v is None:
        return Poly.one(p.ring)
    cp, cq = content(p, v), content(q, v)
    g_cont = poly_gcd(cp, cq)
    a, b = p.exact_div(cp), q.exact_div(cq)
    if a.degree_in(v) < b.degree_in(v):
        a, b = b, a
    while True:
        if b.degree_in(v) == 0:
            g = Poly.one(p.ring)
            break
        r = _prem(a, b, v)
        if r.is_zero():
            g = b
            break
        a, b = b, r.exact_div(content(r, v))
    return _normalize(g * g_cont)


def gcd_many(ps) -> Poly:
    ps = list(ps)
    g = Poly.zero(ps[0].ring)
    for p in ps:
        g = poly_gcd(g, p)
        if g.is_constant() and not g.is_zero():
            break
    return g


def strip_content(p: Poly) -> Poly:
    """Remove a constant factor so the leading coefficient is 1."""
    return _normalize(p)


def squarefree_test(p: Poly) -> bool:
    """True iff gcd(p, all partial derivatives) is a unit."""
    if p.is_zero():
        raise ValueError("squarefree_test of the zero polynomial")
    g = gcd_many([p] + [p.derivative(v) for v in p.ring.variables])
    return g.is_constant()


def repeated_part(p: Poly) -> Poly:
    """gcd(p, grad p): carries every repeated factor of p."""
    return gcd_many([p] + [p.derivative(v) for v in p.ring.variables])


def locally_squarefree(p: Poly) -> bool:
    """True iff no repeated factor of p passes through the origin."""
    if p.is_zero():
        raise ValueError("locally_squarefree of the zero polynomial")
    return bool(repeated_part(p).constant_term())


def ideal_of_minors(matrix, size: int, ring: Ring) -> Ideal:
    return Ideal(ring, minors(matrix, size, ring))


# -- scalar linear algebra ---------------------------------------------------


def scalar_rref(rows):
    """Reduced row echelon form of a Scalar matrix; returns (rows, pivot columns)."""
    a = [[Scalar.coerce(x) for x in r] for r in rows]
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def scalar_rank(rows) -> int:
    return len(scalar_rref(rows)[1]) if rows else 0


def scalar_nullspace(rows, ncols: int) -> list:
    """Basis of {v : rows * v = 0}."""
    if not rows:
        return [[ONE if j == k else ZERO for j in range(ncols)] for k in range(ncols)]
    red, piv = scalar_rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for r, c in zip(red, piv):
            v[c] = -r[f]
        basis.append(v)
    return basis
