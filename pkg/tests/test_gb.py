import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import R_ST, polys
from germlink.gb import (
    INFINITE,
    Codim,
    eliminate,
    groebner_basis,
    local_codim,
    local_staircase,
    standard_basis_local,
)
from germlink.oracle import OracleUnstable, macaulay_codim_oracle, oracle_search, truncated_codim
from germlink.orders import DEGREVLEX, LEX, NEGDEGREVLEX, MonomialOrder
from germlink.poly import Ideal, Poly, Ring

s, t = R_ST.gens()
GRAPH = Ring(("s", "t", "x", "y", "z"))


def ideal(*gens, ring=R_ST):
    return Ideal(ring, list(gens))


def lead(p, order):
    e = max(p.terms, key=order.key)
    return e, p.terms[e]


def spoly(f, g, order):
    (a, ca), (b, cb) = lead(f, order), lead(g, order)
    lcm = tuple(max(x, y) for x, y in zip(a, b))
    mf = Poly.monomial(f.ring, tuple(x - y for x, y in zip(lcm, a)))
    mg = Poly.monomial(f.ring, tuple(x - y for x, y in zip(lcm, b)))
    return f * mf * cb - g * mg * ca


# -- global bases ------------------------------------------------------------


def test_umbrella_image_by_elimination():
    sv, tv, x, y, z = GRAPH.gens()
    J = eliminate(ideal(x - sv**2, y - sv * tv, z - tv, ring=GRAPH), ["s", "t"])
    f = x * z**2 - y**2
    assert len(J.generators) == 1
    assert J.generators[0].monic() == f.monic()


def test_elimination_of_identity_graph_is_zero():
    R = Ring(("s", "t", "x", "y"))
    sv, tv, x, y = R.gens()
    assert eliminate(ideal(x - sv, y - tv, ring=R), ["s", "t"]).is_zero()


def test_elimination_small_example():
    R = Ring(("t", "u1", "u2"))
    tv, u1, u2 = R.gens()
    J = eliminate(ideal(tv, u1 + u2, ring=R), ["u2"])
    assert [str(g) for g in J.generators] == ["t"]


def test_global_basis_examples():
    assert {str(g) for g in groebner_basis(ideal(s, t), DEGREVLEX).basis} == {"s", "t"}
    assert [str(g) for g in groebner_basis(ideal(s**2, s), DEGREVLEX).basis] == ["s"]


def test_local_order_rejected_by_buchberger():
    with pytest.raises(ValueError):
        groebner_basis(ideal(s), NEGDEGREVLEX)
    with pytest.raises(ValueError):
        standard_basis_local(ideal(s), DEGREVLEX)


@pytest.mark.parametrize("order", [DEGREVLEX, LEX, MonomialOrder.elimination(R_ST, ["s"])])
@given(gens=st.lists(polys(max_terms=3, max_deg=3), min_size=1, max_size=3))
def test_spolys_reduce_to_zero(order, gens):
    I = Ideal(R_ST, gens)
    if I.is_zero():
        return
    sb = groebner_basis(I, order)
    for g in I.generators:
        assert sb.contains(g)
    for f, g in itertools.combinations(sb.basis, 2):
        assert sb.reduce(spoly(f, g, order)).is_zero()


@given(gens=st.lists(polys(max_terms=3, max_deg=2), min_size=1, max_size=3))
def test_eliminate_idempotent(gens):
    R = Ring(("s", "t", "x"))
    lifted = [g.to_ring(R) + Poly.var(R, "x") * g.to_ring(R) for g in gens]
    I = Ideal(R, lifted)
    once = eliminate(I, ["x"])
    twice = eliminate(once, ["x"])
    b1 = groebner_basis(once, DEGREVLEX) if not once.is_zero() else None
    if b1 is None:
        assert twice.is_zero()
        return
    for g in twice.generators:
        assert b1.contains(g)
    b2 = groebner_basis(twice, DEGREVLEX)
    for g in once.generators:
        assert b2.contains(g)


# -- local standard bases and codimension -----------------------------------------


def test_local_leading_ideals():
    assert sorted(standard_basis_local(ideal(s**2 * 2, s * 2, t)).leading_ideal) == [(0, 1), (1, 0)]
    assert standard_basis_local(ideal(s + s**2)).leading_ideal == [(1, 0)]
    assert standard_basis_local(ideal(t**2 - s**3)).leading_ideal == [(0, 2)]


def test_local_codim_examples():
    assert local_codim(ideal(s, t)) == Codim(1)
    assert local_codim(ideal(s**2, s * t, t**2)) == Codim(3)
    assert sorted(local_staircase(ideal(s**2, s * t, t**2))) == [(0, 0), (0, 1), (1, 0)]
    assert local_codim(ideal(s)) == INFINITE
    assert local_codim(ideal(s - 1, t)) == Codim(0)


def test_local_codim_ignores_other_points():
    # (s^2 - s) vanishes at s = 0 and s = 1; only the origin counts
    assert local_codim(ideal(s**2 - s, t**3)) == Codim(3)
    assert local_codim(ideal(s * (1 - t), t**2 * (s + 1))) == Codim(2)


def test_milnor_number_of_a_cusp():
    # Jacobian ideal of t^2 - s^3 has codimension 2
    assert local_codim(ideal(s**2 * 3, t * 2)) == Codim(2)
    # E_6: s^3 + t^4 has Milnor number 6
    assert local_codim(ideal(s**2, t**3)) == Codim(6)


def test_codim_arithmetic():
    assert Codim(2) + Codim(3) == Codim(5)
    assert Codim(2) + INFINITE == INFINITE
    assert not INFINITE.finite
    assert INFINITE.to_json() == "infinite"
    assert Codim(4).to_json() == 4


# -- Macaulay oracle ------------------------------------------------------------


def test_oracle_examples():
    assert truncated_codim(ideal(s, t), 4) == 1
    assert truncated_codim(ideal(s**2, s * t, t**2), 4) == 3
    assert truncated_codim(ideal(s**3, t**3), 8) == 9
    assert macaulay_codim_oracle(ideal(s**3, t**3), 8) == Codim(9)


def test_oracle_unstable_for_infinite_codim():
    with pytest.raises(OracleUnstable) as err:
        macaulay_codim_oracle(ideal(s), 6)
    assert str(err.value).startswith("UNSTABLE")
    value, cap = oracle_search(ideal(s), max_cap=6)
    assert value is None


@st.composite
def finite_ideals(draw):
    """Ideals with a pure power of each variable in the leading ideal, plus noise."""
    a = draw(st.integers(1, 4))
    b = draw(st.integers(1, 4))
    hs = [draw(polys(max_terms=2, max_deg=4)) for _ in range(3)]
    # perturb only by terms of higher degree so the pure powers stay leading
    def tail(p, d):
        return Poly(R_ST, {e: c for e, c in p.terms.items() if sum(e) > d})
    gens = [s**a + tail(hs[0], a), t**b + tail(hs[1], b), hs[2]]
    return Ideal(R_ST, gens)


@given(finite_ideals())
def test_local_codim_matches_oracle(I):
    c = local_codim(I)
    assert c.finite and c.value <= 16
    value, _ = oracle_search(I, max_cap=12)
    assert value == c
