from hypothesis import given
from hypothesis import strategies as st

from conftest import scalars
from germlink.algebra import det
from germlink.germ import SOURCE
from germlink.invariants import module_generators, same_up_to_unit
from germlink.poly import Poly
from germlink.syzygy import TARGET_RING, check_relation, graph_ideal, syzygy_relations

s, t = SOURCE.gens()
x, y, z = TARGET_RING.gens()


def relations(branch, gens):
    return syzygy_relations(gens, graph_ideal(branch))


def test_plane_branch_single_relation():
    branch = (Poly.zero(SOURCE), s, t)
    rows = relations(branch, [Poly.one(SOURCE)])
    assert len(rows) == 1
    assert same_up_to_unit(rows[0][0], x)


def test_cuspidal_edge_relations():
    branch = (s, t**2, t**3)
    rows = relations(branch, [Poly.one(SOURCE), t])
    assert len(rows) == 2
    assert all(check_relation(r, [Poly.one(SOURCE), t], branch) for r in rows)
    assert same_up_to_unit(det(rows, TARGET_RING), z**2 - y**3)


def test_umbrella_relations():
    branch = (s**2, s * t, t)
    gens = module_generators(branch)
    assert len(gens) == 2
    rows = relations(branch, gens)
    assert len(rows) == 2
    assert all(check_relation(r, gens, branch) for r in rows)
    assert same_up_to_unit(det(rows, TARGET_RING), x * z**2 - y**2)


@given(k=st.integers(1, 3), c=scalars(bound=3))
def test_corank_one_family_relations_vanish(k, c):
    branch = (s, t**2, t**3 + c * s**k * t)
    gens = module_generators(branch)
    rows = relations(branch, gens)
    assert len(rows) == len(gens) == 2
    for r in rows:
        assert check_relation(r, gens, branch)
    d = det(rows, TARGET_RING)
    assert not d.is_zero()
    # the determinant cuts out the image
    assert d.substitute({"x": branch[0], "y": branch[1], "z": branch[2]}, ring=SOURCE).is_zero()
