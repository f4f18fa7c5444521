import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_invertible, scalars
from germlink.algebra import det
from germlink.catalog import CATALOG
from germlink.gb import INFINITE, Codim, groebner_basis, local_codim
from germlink.germ import SOURCE, MapGerm
from germlink.invariants import (
    D2_RING,
    UNDEFINED,
    NotNormalizable,
    corank,
    double_curve,
    double_curve_conductor,
    double_curve_resultant,
    double_space_ideals,
    fitting_ideal,
    full_report,
    image_equation,
    invariant_C,
    invariant_L,
    invariant_T_fitting,
    invariant_T_triple_space,
    normalization,
    presentation_matrix,
    ramification_ideal,
    same_up_to_unit,
)
from germlink.orders import DEGREVLEX
from germlink.poly import Ideal, Poly
from germlink.syzygy import TARGET_RING

s, t = SOURCE.gens()
x, y, z = TARGET_RING.gens()


def germ(name):
    return CATALOG[name].germ()


def P(text):
    return MapGerm.parse(text)


def same_ideal(I, J):
    gi, gj = groebner_basis(I, DEGREVLEX), groebner_basis(J, DEGREVLEX)
    return all(gj.contains(g) for g in I.generators) and all(gi.contains(g) for g in J.generators)


# -- corank and normalization ---------------------------------------------------


def test_corank_examples():
    assert corank(germ("umbrella")) == 1
    assert corank(germ("double-cover-a1")) == 2
    assert corank(P("Phi(s,t) = (s, t, 0)")) == 0
    assert corank(germ("triple")) == 0


def test_normalization_examples():
    n = normalization(germ("umbrella"))
    # first component is a coordinate, the others have no linear part in it
    assert n.germ.branches[0][0] == s
    assert normalization(germ("cuspidal-edge")).germ == germ("cuspidal-edge")
    m = normalization(P("Phi(s,t) = (s + t, t^2, t^3)"))
    assert m.germ.branches[0][0] == s
    assert m.coords[0] == s + t
    with pytest.raises(NotNormalizable):
        normalization(germ("double-cover-a1"))


def test_normalization_preserves_invariants():
    g = germ("S1").transform([[1, 2], [0, 1]], [[1, 0, 1], [0, 1, 1], [1, 1, 0]])
    n = normalization(g).germ
    assert invariant_C(g) == invariant_C(n)
    assert invariant_T_fitting(g) == invariant_T_fitting(n)


# -- C ----------------------------------------------------------------------------


def test_ramification_ideal_examples():
    assert same_ideal(ramification_ideal(germ("umbrella")), Ideal(SOURCE, [s, t]))
    assert groebner_basis(ramification_ideal(P("Phi(s,t) = (s, t, 0)")), DEGREVLEX).is_unit_ideal()
    assert same_ideal(ramification_ideal(germ("double-cover-a1")), Ideal(SOURCE, [s * t, s**2, t**2]))


@pytest.mark.parametrize(
    "name, value",
    [("umbrella", 1), ("triple", 0), ("double-cover-a1", 3), ("S1", 2), ("S2", 3), ("S3", 4), ("H2", 2)],
)
def test_C_values(name, value):
    assert invariant_C(germ(name)) == Codim(value)


def test_C_infinite_for_cuspidal_edge():
    assert invariant_C(germ("cuspidal-edge")) == INFINITE


# -- double and triple point spaces ---------------------------------------------------


def test_double_space_of_umbrella():
    # normalized umbrella (s, st, t^2)
    g = P("Phi(s,t) = (s, s*t, t^2)")
    I2, _ = double_space_ideals(g)
    sv, t1, t2 = D2_RING.gens()
    assert same_ideal(I2, Ideal(D2_RING, [sv, t1 + t2]))


def test_double_space_of_S1():
    I2, _ = double_space_ideals(germ("S1"))
    sv, t1, t2 = D2_RING.gens()
    assert same_ideal(I2, Ideal(D2_RING, [t1 + t2, t1**2 + t1 * t2 + t2**2 + sv**2]))


def test_triple_space_is_unit_for_cuspidal_edge():
    _, I3 = double_space_ideals(germ("cuspidal-edge"))
    assert groebner_basis(I3, DEGREVLEX).is_unit_ideal()


@pytest.mark.parametrize("name, value", [("umbrella", 0), ("S1", 0), ("cuspidal-edge", 0), ("H2", 1)])
def test_T_triple_space(name, value):
    assert invariant_T_triple_space(germ(name)) == Codim(value)


# -- presentation and Fitting ideals ------------------------------------------------------


def test_presentation_of_triple_is_diagonal():
    lam = presentation_matrix(germ("triple"))
    assert lam.size == 3 and lam.check_relations()
    assert same_up_to_unit(lam.determinant(), x * y * z)
    assert same_ideal(fitting_ideal(lam, 2), Ideal(TARGET_RING, [x, y, z]))
    assert same_ideal(fitting_ideal(lam, 0), Ideal(TARGET_RING, [x * y * z]))


def test_presentation_of_umbrella():
    lam = presentation_matrix(germ("umbrella"))
    assert lam.size == 2 and lam.check_relations()
    assert same_up_to_unit(lam.determinant(), x * z**2 - y**2)
    assert groebner_basis(fitting_ideal(lam, 2), DEGREVLEX).is_unit_ideal()


def test_presentation_of_plane_branch():
    lam = presentation_matrix(P("Phi(s,t) = (0, s, t)"))
    assert lam.size == 1
    assert same_up_to_unit(lam.entries[0][0], x)


@pytest.mark.parametrize(
    "name, value", [("umbrella", 0), ("triple", 1), ("cuspidal-edge", 0), ("S1", 0), ("H2", 1)]
)
def test_T_fitting(name, value):
    assert invariant_T_fitting(germ(name)) == Codim(value)


def test_fitting_index_out_of_range():
    lam = presentation_matrix(germ("umbrella"))
    with pytest.raises(ValueError):
        fitting_ideal(lam, -1)


# -- double point curve ------------------------------------------------------------


def test_d_of_umbrella():
    assert same_up_to_unit(double_curve(germ("umbrella")), t)


def test_d_of_triple_per_branch():
    ds = double_curve_conductor(germ("triple"))
    assert len(ds) == 3
    assert all(same_up_to_unit(d, s * t) for d in ds)


@pytest.mark.parametrize(
    "name, expected",
    [("S1", "s^2 + t^2"), ("S2", "s^3 + t^2"), ("S3", "s^4 + t^2"), ("cuspidal-edge", "t^2")],
)
def test_d_values(name, expected):
    d = double_curve_resultant(germ(name))
    assert same_up_to_unit(d, Poly.parse(expected, SOURCE))


def test_resultant_and_conductor_routes_agree():
    for name in ("umbrella", "S1", "S2", "H2"):
        g = germ(name)
        assert same_up_to_unit(double_curve_resultant(g), double_curve_conductor(g)[0])


def test_image_equation_of_umbrella():
    assert same_up_to_unit(image_equation(germ("umbrella")), x * z**2 - y**2)


# -- L and the verdict ----------------------------------------------------------------


def test_L_examples():
    assert invariant_L(germ("umbrella")) == 1
    assert invariant_L(germ("triple")) == -3
    assert invariant_L(germ("S1")) == invariant_C(germ("S1")).value
    assert invariant_L(germ("cuspidal-edge")) == UNDEFINED


@pytest.mark.parametrize(
    "name, verdict",
    [
        ("umbrella", "yes"),
        ("triple", "yes"),
        ("S1", "yes"),
        ("S2", "yes"),
        ("H2", "yes"),
        ("double-cover-a1", "undetermined"),
        ("cuspidal-edge", "no"),
    ],
)
def test_verdicts(name, verdict):
    rep = full_report(germ(name))
    assert rep.finitely_determined == verdict
    assert not rep.errors or name == "double-cover-a1"


def test_double_cover_report():
    rep = full_report(germ("double-cover-a1"))
    assert rep.corank == 2
    assert rep.C.finite and rep.T.finite
    assert rep.L == rep.C.value - 3 * rep.T.value
    assert any("corank 2" in e for e in rep.evidence)


def test_immersion_report():
    rep = full_report(P("Phi(s,t) = (s, t, 0)"))
    assert (rep.C, rep.T, rep.L) == (Codim(0), Codim(0), 0)
    assert rep.finitely_determined == "yes"


# -- properties ------------------------------------------------------------------------


@settings(max_examples=12)
@given(k=st.integers(1, 3), c=scalars(bound=2).filter(bool))
def test_T_methods_agree_on_corank_one_family(k, c):
    g = MapGerm([(s, t**2, t**3 + c * s**k * t)])
    assert invariant_T_fitting(g) == invariant_T_triple_space(g)


@settings(max_examples=8)
@given(seed=st.integers(0, 10**6))
def test_linear_invariance_of_umbrella(seed):
    rng = random.Random(seed)
    base = full_report(germ("umbrella"))
    g = germ("umbrella").transform(random_invertible(rng, 2), random_invertible(rng, 3))
    rep = full_report(g)
    assert (rep.C, rep.T, rep.L, rep.finitely_determined) == (base.C, base.T, base.L, base.finitely_determined)


def test_presentation_determinant_cuts_image():
    for name in ("umbrella", "S1", "cuspidal-edge", "H2"):
        g = germ(name)
        lam = presentation_matrix(g)
        d = det(lam.entries, TARGET_RING)
        b = g.branches[0]
        assert d.substitute({"x": b[0], "y": b[1], "z": b[2]}, ring=SOURCE).is_zero()
        assert same_up_to_unit(d, image_equation(g))


def test_local_codim_of_F2_for_triple():
    lam = presentation_matrix(germ("triple"))
    assert local_codim(fitting_ideal(lam, 2)) == Codim(1)
