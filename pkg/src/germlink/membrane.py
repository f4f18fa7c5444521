"""Exact membrane constructions and intersection signs near a singular point.

Curves and surfaces in C^3 are polynomial in their parameters and, in separate
slots, in the conjugate parameters (``u`` and ``ubar``).  The shift size
``delta`` is a formal positive infinitesimal: a real polynomial in delta has
the sign of its lowest-order coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import det
from .germ import SOURCE, TARGET, MapGerm
from .poly import Poly, Ring
from .scalar import I, ONE, ZERO, Scalar

DELTA = Ring(("delta",))


class MembraneError(ValueError):
    """Raised with a NOT_SUPPORTED or DECK_INCONSISTENT tag."""


class SignMismatch(RuntimeError):
    """Two independent sign computations disagree."""


def patch_ring(params) -> Ring:
    params = tuple(params)
    return Ring(params + tuple(p + "bar" for p in params) + ("delta",))


CURVE = patch_ring(("x",))   # parameter of a curve on a double value curve
SHEET = patch_ring(("u",))   # parameter on a source preimage


def conj(p: Poly) -> Poly:
    """Swap each parameter with its conjugate slot and conjugate coefficients."""
    names = p.ring.variables
    perm = []
    for v in names:
        if v.endswith("bar") and v[:-3] in names:
            perm.append(names.index(v[:-3]))
        elif v + "bar" in names:
            perm.append(names.index(v + "bar"))
        else:
            perm.append(names.index(v))
    terms = {tuple(e[perm[k]] for k in range(len(e))): c.conjugate() for e, c in p.terms.items()}
    return Poly(p.ring, terms, _trusted=True)


def delta_sign(p: Poly) -> int:
    """Sign of a real polynomial in the formal positive infinitesimal delta."""
    k = p.ring.index_of("delta") if "delta" in p.ring else None
    if p.is_zero():
        return 0
    for e in p.terms:
        if any(x for j, x in enumerate(e) if j != k):
            raise MembraneError(f"NOT_SUPPORTED: {p} is not a function of delta alone")
    low = min(p.terms, key=lambda e: e[k] if k is not None else 0)
    c = p.terms[low]
    if not c.is_real():
        raise MembraneError(f"NOT_SUPPORTED: expected a real quantity, got {p}")
    return 1 if c.re > 0 else -1


def _to_delta(p: Poly) -> Poly:
    return p.to_ring(DELTA)


@dataclass(frozen=True)
class MembranePatch:
    """A curve (1 parameter) or surface (2 parameters) in C^3."""

    params: tuple
    coords: tuple
    orientation: int = 1
    label: str = ""

    @property
    def ring(self) -> Ring:
        return self.coords[0].ring

    @property
    def real_dimension(self) -> int:
        return 2 * len(self.params)

    def at(self, values: dict) -> tuple:
        """Coordinates at parameter values given as Polys in delta (conjugates filled in)."""
        sub = {}
        for p in self.params:
            v = values[p].to_ring(DELTA)
            sub[p] = v
            sub[p + "bar"] = v.conjugate()
        sub["delta"] = Poly.var(DELTA, "delta")
        return tuple(c.substitute(sub, ring=DELTA) for c in self.coords)

    def conjugate(self) -> "MembranePatch":
        return MembranePatch(self.params, tuple(conj(c) for c in self.coords), self.orientation, self.label)

    def reversed(self) -> "MembranePatch":
        return MembranePatch(self.params, self.coords, -self.orientation, self.label)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def surface_patch(branch, label: str = "", orientation: int = 1) -> MembranePatch:
    ring = patch_ring(("s", "t"))
    return MembranePatch(("s", "t"), tuple(c.to_ring(ring) for c in branch), orientation, label)


# -- normal fields -----------------------------------------------------------------


@dataclass
class Sheet:
    """One source preimage of the double value curve: branch, its d, and s(u), t(u)."""

    branch: tuple
    d: Poly
    preimage: tuple  # (s(u), t(u)) over SHEET


@dataclass
class NormalFieldData:
    sheets: list
    descent: int = 1       # the double value curve is parametrized by x = u**descent
    kind: str = "L1"       # L1: conjugate gradient of d; L2: conjugated normal cross product

    def image_points(self) -> list:
        out = []
        for sh in self.sheets:
            sub = {"s": sh.preimage[0], "t": sh.preimage[1]}
            out.append(tuple(c.substitute(sub, ring=SHEET) for c in sh.branch))
        return out

    def check(self) -> None:
        pts = self.image_points()
        if any(p != pts[0] for p in pts[1:]):
            raise MembraneError("DECK_INCONSISTENT: preimages do not share an image point")
        for sh in self.sheets:
            if not sh.d.substitute({"s": sh.preimage[0], "t": sh.preimage[1]}, ring=SHEET).is_zero():
                raise MembraneError("DECK_INCONSISTENT: a preimage does not lie on the double point curve")


def _at_sheet(p: Poly, sh: Sheet) -> Poly:
    return p.substitute({"s": sh.preimage[0], "t": sh.preimage[1]}, ring=SHEET)


def _sheet_field(sh: Sheet, kind: str) -> list:
    ds = [_at_sheet(c.derivative("s"), sh) for c in sh.branch]
    dt = [_at_sheet(c.derivative("t"), sh) for c in sh.branch]
    if kind == "L1":
        vs = conj(_at_sheet(sh.d.derivative("s"), sh))
        vt = conj(_at_sheet(sh.d.derivative("t"), sh))
        return [a * vs + b * vt for a, b in zip(ds, dt)]
    if kind == "L2":
        n = [ds[1] * dt[2] - ds[2] * dt[1], ds[2] * dt[0] - ds[0] * dt[2], ds[0] * dt[1] - ds[1] * dt[0]]
        return [conj(c) for c in n]
    raise ValueError(f"unknown field kind {kind!r}")


def descend(p: Poly, n: int) -> Poly:
    """Rewrite a polynomial in (u, ubar) as one in (x, xbar) with x = u**n."""
    terms = {}
    for (a, b, k), c in p.to_ring(SHEET).terms.items():
        if a % n or b % n:
            raise MembraneError(f"NOT_SUPPORTED: {p} does not descend along x = u^{n}")
        terms[(a // n, b // n, k)] = c
    return Poly(CURVE, terms, _trusted=True)


def pushforward_sum_field(g: MapGerm | None, nf: NormalFieldData) -> tuple:
    """Sum over the preimages of dPhi(v) (or of the L2 field), on the double value curve.

    Returns (field, curve): both are triples of Polys in (x, xbar, delta).
    """
    nf.check()
    total = [Poly.zero(SHEET)] * 3
    for sh in nf.sheets:
        total = [a + b for a, b in zip(total, _sheet_field(sh, nf.kind))]
    curve = nf.image_points()[0]
    return tuple(descend(c, nf.descent) for c in total), tuple(descend(c, nf.descent) for c in curve)


def shift_membrane(sigma, w, delta: Poly | None = None, label: str = "") -> MembranePatch:
    """sigma + delta * w, exactly; ``delta`` may be any positive infinitesimal in delta."""
    coords = sigma.coords if isinstance(sigma, MembranePatch) else tuple(sigma)
    ring = coords[0].ring
    dl = (delta or Poly.var(DELTA, "delta")).to_ring(ring)
    return MembranePatch(("x",), tuple(c + dl * v.to_ring(ring) for c, v in zip(coords, w)), 1, label)


# -- intersections -----------------------------------------------------------------


@dataclass
class Intersection:
    point: tuple
    sign: int
    route: str

    def point_text(self) -> str:
        return "(" + ", ".join(str(c) for c in self.point) + ")"


@dataclass
class IntersectionResult:
    points: list
    total: int


def _param_groups(g: Poly) -> dict:
    """{(a, b): coefficient Poly in delta} for a curve-ring polynomial."""
    out: dict = {}
    for (a, b, k), c in g.terms.items():
        out.setdefault((a, b), {})[(k,)] = c
    return {ab: Poly(DELTA, t, _trusted=True) for ab, t in out.items()}


def _curve_at(c: MembranePatch, u: Poly) -> tuple:
    return c.at({c.params[0]: u})


def intersect_curve_implicit(c: MembranePatch, F: Poly, orientation: int = 1) -> IntersectionResult:
    """Intersections of a real 2-dimensional membrane with {F = 0} (F over x, y, z)."""
    if len(c.params) != 1:
        raise MembraneError("NOT_SUPPORTED: the first argument must be a one-parameter membrane")
    ring = c.ring
    if ring != CURVE:
        raise MembraneError(f"NOT_SUPPORTED: membrane ring must be {CURVE}")
    g = F.to_ring(TARGET).substitute(dict(zip("xyz", c.coords)), ring=ring)
    if g.is_zero():
        raise MembraneError("NOT_SUPPORTED: the membrane lies inside the surface")
    groups = _param_groups(g)
    orient = c.orientation * orientation
    if len(groups) == 1:
        (a, b), _ = next(iter(groups.items()))
        if a + b == 0:
            return IntersectionResult([], 0)
        pt = _curve_at(c, Poly.zero(DELTA))
        return IntersectionResult([Intersection(pt, orient * (a - b), "monomial")], orient * (a - b))
    if all(a + b <= 1 for a, b in groups):
        zero = Poly.zero(DELTA)
        alpha = groups.get((0, 0), zero)
        beta = groups.get((1, 0), zero)
        gamma = groups.get((0, 1), zero)
        D = beta * beta.conjugate() - gamma * gamma.conjugate()
        if D.is_zero():
            raise MembraneError("NOT_SUPPORTED: degenerate affine intersection")
        num = gamma * alpha.conjugate() - alpha * beta.conjugate()
        try:
            u = num.exact_div(D)
        except ValueError:
            raise MembraneError("NOT_SUPPORTED: intersection point is not polynomial in delta") from None
        sign = orient * delta_sign(D)
        return IntersectionResult([Intersection(_curve_at(c, u), sign, "affine")], sign)
    raise MembraneError(f"NOT_SUPPORTED: substituted map {g} is neither a monomial nor affine")


def _real_vector(v) -> list:
    out = []
    for comp in v:
        re = Poly(DELTA, {e: Scalar(c.re) for e, c in comp.terms.items() if c.re}, _trusted=True)
        im = Poly(DELTA, {e: Scalar(c.im) for e, c in comp.terms.items() if c.im}, _trusted=True)
        out += [re, im]
    return out


def _tangent_pair(patch: MembranePatch, p: str, values: dict) -> list:
    """Real tangent vectors d/dRe p and d/dIm p at the given parameters."""
    d_hol = MembranePatch(patch.params, tuple(c.derivative(p) for c in patch.coords)).at(values)
    d_anti = MembranePatch(patch.params, tuple(c.derivative(p + "bar") for c in patch.coords)).at(values)
    re = [a + b for a, b in zip(d_hol, d_anti)]
    im = [(a - b).scale(I) for a, b in zip(d_hol, d_anti)]
    return [_real_vector(re), _real_vector(im)]


def orientation_sign(basis6) -> int:
    """Sign of det(basis6) against (Re x1, Im x1, Re x2, Im x2, Re x3, Im x3); 0 if degenerate."""
    rows = []
    for v in basis6:
        if len(v) != 6:
            raise ValueError("orientation_sign needs six vectors in R^6")
        rows.append([x.to_ring(DELTA) if isinstance(x, Poly) else Poly.const(DELTA, x) for x in v])
    if len(rows) != 6:
        raise ValueError("orientation_sign needs six vectors in R^6")
    # columns are the vectors
    cols = [[rows[j][i] for j in range(6)] for i in range(6)]
    return delta_sign(det(cols, DELTA))


def intersect_transverse(c: MembranePatch, u0: Poly, S: MembranePatch, s0: dict) -> Intersection:
    """Sign of a transverse intersection of curve c at u0 with surface S at parameters s0."""
    pc = _curve_at(c, u0)
    ps = S.at(s0)
    if pc != ps:
        raise MembraneError("witness parameters do not give a common point")
    vals_c = {c.params[0]: u0}
    basis = _tangent_pair(c, c.params[0], vals_c)
    for p in S.params:
        basis += _tangent_pair(S, p, s0)
    sign = orientation_sign(basis)
    if sign == 0:
        raise MembraneError("NOT_SUPPORTED: intersection is not transverse")
    return Intersection(pc, sign * c.orientation * S.orientation, "transverse")


def intersect_curve_surface(c: MembranePatch, S, witness=None, orientation: int = 1) -> IntersectionResult:
    """Dispatch: S a Poly means an implicit surface; a MembranePatch needs witness (u0, params)."""
    if isinstance(S, Poly):
        return intersect_curve_implicit(c, S, orientation)
    if witness is None:
        raise MembraneError("NOT_SUPPORTED: a parametrized surface needs witness parameters")
    u0, s0 = witness
    hit = intersect_transverse(c, u0, S, s0)
    return IntersectionResult([hit], hit.sign)


# -- sign tables -------------------------------------------------------------------


@dataclass
class SignEntry:
    membrane: str
    sheet: str
    sign: int
    point: str
    route: str


@dataclass
class SignTable:
    scenario: str
    entries: list = field(default_factory=list)
    total: int = 0
    membranes: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)

    def add(self, membrane: str, sheet: str, result: IntersectionResult):
        for hit in result.points:
            self.entries.append(SignEntry(membrane, sheet, hit.sign, hit.point_text(), hit.route))
        self.total = sum(e.sign for e in self.entries)

    def signs(self) -> dict:
        out: dict = {}
        for e in self.entries:
            out[(e.membrane, e.sheet)] = out.get((e.membrane, e.sheet), 0) + e.sign
        return out


def _delta_poly(delta) -> Poly:
    return Poly.var(DELTA, "delta") if delta is None else delta.to_ring(DELTA)


def umbrella_germ() -> MapGerm:
    return MapGerm.parse("Phi(s,t) = (s^2, s*t, t)", "umbrella")


def triple_germ() -> MapGerm:
    return MapGerm.parse("Phi(s,t) = (0, s, t); Phi(s,t) = (t, 0, s); Phi(s,t) = (s, t, 0)", "triple")


def _umbrella_membrane(kind: str, delta):
    from .invariants import double_curve, image_equation

    g = umbrella_germ()
    d = double_curve(g)
    u = Poly.var(SHEET, "u")
    zero = Poly.zero(SHEET)
    branch = g.branches[0]
    nf = NormalFieldData([Sheet(branch, d, (u, zero)), Sheet(branch, d, (-u, zero))], descent=2, kind=kind)
    w, curve = pushforward_sum_field(g, nf)
    sigma = shift_membrane(curve, w, _delta_poly(delta), label="Sigma~")
    return g, d, w, sigma, image_equation(g)


def verify_lemma_umbrella_L1(delta: Poly | None = None, reverse_orientation: bool = False) -> SignTable:
    """Umbrella: shifted double value curve against the image; expected total +1."""
    g, d, w, sigma, f = _umbrella_membrane("L1", delta)
    orient = -1 if reverse_orientation else 1
    table = SignTable("umbrella-l1")
    table.membranes = {"d": str(d), "field": _vec_text(w), "Sigma~": str(sigma), "image": str(f)}
    res = intersect_curve_surface(sigma, f, orientation=orient)
    table.add("Sigma~", "X", res)
    # independent transverse computation against the parametrized image
    hit_point = sigma.at({"x": Poly.zero(DELTA)})
    S = surface_patch(g.branches[0], "X", orientation=orient)
    witness = (Poly.zero(DELTA), {"s": Poly.zero(DELTA), "t": hit_point[2]})
    trans = intersect_curve_surface(sigma, S, witness=witness)
    table.checks["transverse_route_agrees"] = trans.total == res.total and len(res.points) == 1
    if not table.checks["transverse_route_agrees"]:
        raise SignMismatch(f"implicit route gives {res.total}, transverse route {trans.total}")
    return table


def verify_umbrella_L2(delta: Poly | None = None) -> SignTable:
    """Umbrella with the conjugated normal cross product field; expected total -1 = -L1."""
    g, d, w, sigma, f = _umbrella_membrane("L2", delta)
    table = SignTable("umbrella-l2")
    table.membranes = {"field": _vec_text(w), "Sigma~": str(sigma), "image": str(f)}
    table.add("Sigma~", "X", intersect_curve_surface(sigma, f))
    l1 = verify_lemma_umbrella_L1(delta)
    table.checks["L1_plus_L2_zero"] = l1.total + table.total == 0
    if not table.checks["L1_plus_L2_zero"]:
        raise SignMismatch(f"L1 = {l1.total} and L2 = {table.total} do not cancel")
    # conjugating the field twice gives the field back
    table.checks["double_conjugation"] = all(conj(conj(c)) == c for c in w)
    return table


AXES = ("x", "y", "z")


def _permute(branch, perm):
    """Move component k to position perm[k]."""
    out = [None] * 3
    for k in range(3):
        out[perm[k]] = branch[k]
    return tuple(out)


def _plane_axis(branch) -> int:
    zeros = [k for k, c in enumerate(branch) if c.is_zero()]
    if len(zeros) != 1:
        raise MembraneError("NOT_SUPPORTED: triple scenario needs coordinate-plane branches")
    return zeros[0]


def _axis_preimage(branch, axis: int) -> tuple:
    """(s(u), t(u)) with branch(s, t) = u * e_axis for a coordinate-plane branch."""
    u = Poly.var(SHEET, "u")
    zero = Poly.zero(SHEET)
    comp = branch[axis]
    if comp == Poly.var(SOURCE, "s"):
        return (u, zero)
    if comp == Poly.var(SOURCE, "t"):
        return (zero, u)
    raise MembraneError("NOT_SUPPORTED: axis is not a source coordinate of the branch")


def verify_lemma_triple_L1(
    delta: Poly | None = None,
    permutation: tuple | None = None,
    epsilon: tuple | None = None,
) -> SignTable:
    """Triple value: the 9 signs int(Sigma~_a, X_b) and their total.

    ``permutation`` relabels target coordinates (k -> permutation[k]); ``epsilon``
    applies the perturbation x -> x - eps_k in coordinate k of each membrane
    (cyclically offset from the membrane's own axis).
    """
    from .invariants import double_curve_conductor

    g = triple_germ()
    if permutation is not None:
        g = MapGerm([_permute(b, permutation) for b in g.branches], g.label)
    ds = double_curve_conductor(g)
    planes = {AXES[_plane_axis(b)]: (b, d) for b, d in zip(g.branches, ds)}
    dl = _delta_poly(delta)
    table = SignTable("triple-l1" if epsilon is None else "triple-l1-perturbed")
    for a_idx, a in enumerate(AXES):
        sheets = []
        for b_name, (b, d) in sorted(planes.items()):
            if b_name == a:
                continue
            sheets.append(Sheet(b, d, _axis_preimage(b, a_idx)))
        w, curve = pushforward_sum_field(g, NormalFieldData(sheets, 1, "L1"))
        sigma = shift_membrane(curve, w, dl, label=f"Sigma~_{a}")
        if epsilon is not None:
            sigma = _perturb(sigma, a_idx, epsilon)
        table.membranes[f"Sigma~_{a}"] = str(sigma)
        row_total = 0
        for b_idx, b in enumerate(AXES):
            res = intersect_curve_surface(sigma, Poly.var(TARGET, b))
            table.add(f"Sigma~_{a}", f"X_{b}", res)
            row_total += res.total
        if epsilon is None:
            # the union of the three planes as one implicit surface xyz = 0
            union = intersect_curve_surface(sigma, Poly.parse("x*y*z", TARGET))
            table.checks[f"Sigma~_{a}_union_agrees"] = union.total == row_total
            if union.total != row_total:
                raise SignMismatch(f"Sigma~_{a}: planes sum to {row_total}, union gives {union.total}")
    if epsilon is not None:
        pts = [e.point for e in table.entries]
        table.checks["points_distinct"] = len(set(pts)) == len(pts) == 9
    return table


def _perturb(sigma: MembranePatch, axis: int, epsilon) -> MembranePatch:
    x, xb = Poly.var(CURVE, "x"), Poly.var(CURVE, "xbar")
    coords = []
    for k, c in enumerate(sigma.coords):
        e = Scalar.coerce(epsilon[(k - axis) % 3])
        coords.append(c.substitute({"x": x - e, "xbar": xb - e.conjugate()}))
    return MembranePatch(sigma.params, tuple(coords), sigma.orientation, sigma.label)


def _vec_text(w) -> str:
    return "(" + ", ".join(str(c) for c in w) + ")"


def cyclic_relabel(table: SignTable, perm) -> dict:
    """Signs of a permuted-scenario table expressed in the original labels."""
    inv = {AXES[perm[k]]: AXES[k] for k in range(3)}
    out = {}
    for (m, s), v in table.signs().items():
        out[(f"Sigma~_{inv[m[-1]]}", f"X_{inv[s[-1]]}")] = v
    return out


def verify_all(delta_check: bool = False) -> list:
    tables = [verify_lemma_umbrella_L1(), verify_lemma_triple_L1(), verify_umbrella_L2()]
    if delta_check:
        d2 = Poly.parse("3/7*delta^2", DELTA)
        for t, fn in zip(tables, (verify_lemma_umbrella_L1, verify_lemma_triple_L1, verify_umbrella_L2)):
            again = fn(delta=d2)
            t.checks["delta_independent"] = again.signs() == t.signs() and again.total == t.total
    return tables
