import pytest
from hypothesis import given

from conftest import R_ST, polys
from germlink.algebra import (
    det,
    locally_squarefree,
    minors,
    poly_gcd,
    repeated_part,
    resultant,
    scalar_nullspace,
    scalar_rank,
    squarefree_test,
    strip_content,
)
from germlink.poly import Poly, Ring
from germlink.scalar import Scalar

s, t = R_ST.gens()
X = Ring(("x", "y", "z"))
x, y, z = X.gens()


def test_det_and_minors():
    assert det([[x, 0, 0], [0, y, 0], [0, 0, z]], X) == x * y * z
    assert det([[z, -y], [x * z, -y]], X) == y * z * (x - 1)
    assert det([[0, x], [y, 0]], X) == -(x * y)
    assert det([], X) == Poly.one(X)
    assert sorted(str(m) for m in minors([[x, 0], [0, y]], 1, X)) == ["x", "y"]
    assert minors([[x, 0], [0, y]], 0, X) == [Poly.one(X)]


def test_det_requires_square():
    with pytest.raises(ValueError):
        det([[x, y]], X)


@given(polys(max_terms=3, max_deg=2), polys(max_terms=3, max_deg=2), polys(max_terms=3, max_deg=2),
       polys(max_terms=3, max_deg=2))
def test_bareiss_matches_expansion(a, b, c, d):
    assert det([[a, b], [c, d]], R_ST) == a * d - b * c


def test_resultant_examples():
    R = Ring(("t", "u1", "u2"))
    tv, u1, u2 = R.gens()
    assert resultant(tv, u1 + u2, "u2") == tv.to_ring(R.without("u2"))
    A = Ring(("t", "a", "b"))
    ta, a, b = A.gens()
    r = resultant(ta - a, ta - b, "t")
    assert r.to_ring(A) in (a - b, b - a)
    B = Ring(("t", "x"))
    tb, xb = B.gens()
    assert resultant(tb**2 - xb, tb, "t").to_ring(B) == -xb


def test_resultant_degree_zero_is_error():
    with pytest.raises(ValueError):
        resultant(s, s + 1, "t")
    with pytest.raises(ValueError):
        resultant(Poly.zero(R_ST), t, "t")
    assert resultant(s, t**3, "t") == Poly.var(Ring(("s",)), "s") ** 3


@given(polys(max_terms=3, max_deg=2), polys(max_terms=3, max_deg=2))
def test_resultant_vanishes_on_common_factor(a, b):
    f = (t - s) * (a + t**2 + 1)
    g = (t - s) * (b + t + 2)
    if f.degree_in("t") < 1 or g.degree_in("t") < 1:
        return
    assert resultant(f, g, "t").is_zero()


def test_squarefree_examples():
    assert squarefree_test(t)
    assert not squarefree_test(t**2)
    assert squarefree_test(s * t * (s + t))
    assert locally_squarefree((t - 1) ** 2 * s)
    with pytest.raises(ValueError):
        squarefree_test(Poly.zero(R_ST))


def test_locally_squarefree_is_about_reducedness():
    # an irreducible curve germ with a cusp is reduced
    assert squarefree_test(t**2 - s**3)
    assert not squarefree_test((t**2 - s**3) ** 2)
    assert not locally_squarefree(t**2 * (s + 1))


def test_gcd_examples():
    assert poly_gcd(s * t * (s + t), t**2 * (s + t)) == strip_content(t * (s + t)).monic()
    assert poly_gcd(s + 1, t) == Poly.one(R_ST)
    assert repeated_part((s + t) ** 2 * t).monic() == (s + t).monic()


@given(polys(max_terms=3, max_deg=2), polys(max_terms=3, max_deg=2), polys(max_terms=2, max_deg=2))
def test_gcd_divides_both(a, b, c):
    if a.is_zero() or b.is_zero() or c.is_zero():
        return
    p, q = a * c, b * c
    g = poly_gcd(p, q)
    p.exact_div(g)
    q.exact_div(g)
    # c divides both, so it divides their gcd
    g.exact_div(c)


def test_scalar_linear_algebra():
    rows = [[Scalar(1), Scalar(2), Scalar(3)], [Scalar(2), Scalar(4), Scalar(6)]]
    assert scalar_rank(rows) == 1
    ns = scalar_nullspace(rows, 3)
    assert len(ns) == 2
    for v in ns:
        assert sum((a * b for a, b in zip(rows[0], v)), Scalar(0)) == 0
