"""Cross caps C, triple values T, the double point curve and L = C - 3T."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    det,
    gcd_many,
    locally_squarefree,
    minors,
    resultant,
    scalar_nullspace,
    scalar_rank,
    squarefree_test,
    strip_content,
)
from .gb import INFINITE, Codim, eliminate, local_codim, standard_basis_local, staircase
from .germ import SOURCE, TARGET, MapGerm
from .poly import Ideal, Poly, Ring
from .scalar import ONE, ZERO
from .syzygy import check_relation, graph_ideal, syzygy_relations

D2_RING = Ring(("s", "t1", "t2"))
D3_RING = Ring(("s", "t1", "t2", "t3"))
CURVE_RING = Ring(("s", "t1"))


class NotNormalizable(ValueError):
    """No linear left-right change brings the germ to the form (s, p, q)."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


def _branches(g):
    return g.branches if isinstance(g, MapGerm) else (tuple(g),)


def _mono(g, what: str):
    bs = _branches(g)
    if len(bs) != 1:
        raise ValueError(f"{what} needs a mono-germ (got {len(bs)} branches)")
    return bs[0]


# -- corank and normalization ----------------------------------------------


def _linear_part(branch):
    s_e, t_e = (1, 0), (0, 1)
    return [[c.terms.get(s_e, ZERO), c.terms.get(t_e, ZERO)] for c in branch]


def corank(g) -> int:
    """2 minus the rank of the differential at the origin (maximum over branches)."""
    return max(2 - scalar_rank(_linear_part(b)) for b in _branches(g))


@dataclass
class Normalization:
    """Phi' = B . Phi . A with Phi' = (s', p, q); ``coords`` express (s', t') in (s, t)."""

    germ: MapGerm
    target: list
    coords: tuple

    def pull_back(self, p: Poly) -> Poly:
        """Rewrite a polynomial in (s', t') = (s, t) slots as a polynomial in the original (s, t)."""
        return p.to_ring(SOURCE).substitute({"s": self.coords[0], "t": self.coords[1]})


def normalization(g) -> Normalization:
    branch = _mono(g, "normalization")
    if corank(g) == 2:
        raise NotNormalizable("corank 2: the differential vanishes at the origin")
    lin = _linear_part(branch)
    monos = sorted({e for c in branch for e in c.terms if sum(e) >= 2})
    rows = [[c.terms.get(e, ZERO) for c in branch] for e in monos]
    ell = None
    for v in scalar_nullspace(rows, 3):
        a = sum((v[k] * lin[k][0] for k in range(3)), ZERO)
        b = sum((v[k] * lin[k][1] for k in range(3)), ZERO)
        if a or b:
            c, ell = v, (a, b)
            break
    if ell is None:
        raise NotNormalizable("no linear combination of the components is exactly linear")
    j0 = next(k for k in range(3) if c[k])
    others = [k for k in range(3) if k != j0]
    a, b = ell
    target = [list(c)]
    comps = [sum((branch[k] * c[k] for k in range(3)), Poly.zero(SOURCE))]
    for k in others:
        # remove the part of the linear term proportional to ell
        if a:
            mu = lin[k][0] / a
        else:
            mu = lin[k][1] / b
        if scalar_rank(_linear_part(branch)) == 2:
            mu = ZERO
        row = [(ONE if j == k else ZERO) - mu * c[j] for j in range(3)]
        target.append(row)
        comps.append(branch[k] - comps[0] * mu)
    s, t = SOURCE.gens()
    if a:
        # s' = a s + b t, t' = t
        sub = {"s": (s - t * b) * a.inverse(), "t": t}
        coords = (s * a + t * b, t)
    else:
        # s' = b t, t' = s
        sub = {"s": t, "t": s * b.inverse()}
        coords = (t * b, s)
    new = [p.substitute(sub) for p in comps]
    return Normalization(MapGerm([new], getattr(g, "label", None)), target, coords)


def normalize_corank1(g) -> MapGerm:
    return normalization(g).germ


# -- C -------------------------------------------------------------------------


def jacobian(branch):
    return [[c.derivative("s"), c.derivative("t")] for c in branch]


def ramification_ideal(g) -> Ideal:
    branch = _mono(g, "ramification_ideal")
    J = jacobian(branch)
    gens = [J[i][0] * J[j][1] - J[i][1] * J[j][0] for i, j in ((0, 1), (0, 2), (1, 2))]
    return Ideal(SOURCE, gens)


def invariant_C(g) -> Codim:
    total = Codim(0)
    for b in _branches(g):
        total = total + local_codim(ramification_ideal(MapGerm([b])))
    return total


# -- multiple point spaces ---------------------------------------------------------


def _pq(g):
    """p, q of a germ already in the form (s, p, q)."""
    branch = _mono(g, "double_space_ideals")
    if branch[0] != Poly.var(SOURCE, "s"):
        raise ValueError("germ is not in the normal form (s, p, q); call normalize_corank1 first")
    return branch[1], branch[2]


def _divided_differences(g):
    p, q = _pq(g)
    p1 = p.divided_difference("t", "t1", "t2").to_ring(D2_RING)
    q1 = q.divided_difference("t", "t1", "t2").to_ring(D2_RING)
    p2 = p1.divided_difference("t2", "t2", "t3").to_ring(D3_RING)
    q2 = q1.divided_difference("t2", "t2", "t3").to_ring(D3_RING)
    return p1, q1, p2, q2


def double_space_ideals(g):
    """(I2 in (s,t1,t2), I3 in (s,t1,t2,t3)) for a normalized corank <= 1 germ."""
    if corank(g) == 2:
        raise NotNormalizable("double point spaces need corank <= 1")
    p1, q1, p2, q2 = _divided_differences(g)
    I2 = Ideal(D2_RING, [p1, q1])
    I3 = Ideal(D3_RING, [p1.to_ring(D3_RING), q1.to_ring(D3_RING), p2, q2])
    return I2, I3


def invariant_T_triple_space(g) -> Codim:
    """local_codim(I3) / 6 for a corank <= 1 mono-germ (normalized internally)."""
    n = normalization(g).germ
    _, I3 = double_space_ideals(n)
    c = local_codim(I3)
    if not c.finite:
        return INFINITE
    if c.value % 6:
        raise ConsistencyError(f"triple point space has codimension {c.value}, not divisible by 6")
    return Codim(c.value // 6)


# -- presentation and Fitting ideals -----------------------------------------------


def module_generators(branch) -> list:
    """Standard monomials of O_2 / (phi1, phi2, phi3): generators of Phi_* O_2."""
    st = staircase(standard_basis_local(Ideal(SOURCE, list(branch))).leading_ideal, 2)
    if st is None:
        raise ValueError("germ is not finite: O_2 / Phi^* m_3 is infinite dimensional")
    return [Poly.monomial(SOURCE, e) for e in st]


@dataclass
class PresentationMatrix:
    entries: list
    generators: list
    branch_blocks: list  # (row0, row1, col0, col1) per branch
    branches: tuple = ()

    @property
    def size(self) -> int:
        return sum(len(gs) for gs in self.generators)

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.size

    def determinant(self) -> Poly:
        if not self.is_square:
            raise ValueError(f"presentation is {self.nrows}x{self.size}, not square")
        d = Poly.one(TARGET)
        for r0, r1, c0, c1 in self.branch_blocks:
            d = d * det([row[c0:c1] for row in self.entries[r0:r1]], TARGET)
        return d

    def check_relations(self) -> bool:
        for b, gens, (r0, r1, c0, c1) in zip(self.branches, self.generators, self.branch_blocks):
            for row in self.entries[r0:r1]:
                if not check_relation(row[c0:c1], gens, b):
                    return False
        return True


def presentation_matrix(g) -> PresentationMatrix:
    blocks = []
    for b in _branches(g):
        gens = module_generators(b)
        rows = syzygy_relations(gens, graph_ideal(b))
        blocks.append((gens, rows))
    total = sum(len(gs) for gs, _ in blocks)
    entries, spans = [], []
    c0 = 0
    for gens, rows in blocks:
        r0 = len(entries)
        for row in rows:
            full = [Poly.zero(TARGET)] * total
            full[c0 : c0 + len(gens)] = row
            entries.append(full)
        spans.append((r0, len(entries), c0, c0 + len(gens)))
        c0 += len(gens)
    return PresentationMatrix(entries, [gs for gs, _ in blocks], spans, _branches(g))


def fitting_ideal(lam: PresentationMatrix, k: int) -> Ideal:
    """Ideal of the (m - k)-minors; the unit ideal when m - k <= 0."""
    m = lam.size
    if k < 0:
        raise ValueError(f"Fitting index must be non-negative, got {k}")
    gens, seen = [], set()
    for p in minors(lam.entries, m - k, TARGET):
        key = strip_content(p)
        if key not in seen:
            seen.add(key)
            gens.append(p)
    return Ideal(TARGET, gens)


def invariant_T_fitting(g, lam: PresentationMatrix | None = None) -> Codim:
    lam = lam or presentation_matrix(g)
    return local_codim(fitting_ideal(lam, 2))


# -- image and double point curve ---------------------------------------------------


def image_equation(g) -> Poly:
    """Reduced equation of the image: product over branches of the eliminated generator."""
    f = Poly.one(TARGET)
    for b in _branches(g):
        E = eliminate(graph_ideal(b), ["s", "t"])
        gens = [e.to_ring(TARGET) for e in E.generators]
        if not gens:
            raise ValueError("image is not a hypersurface")
        h = gens[0] if len(gens) == 1 else gcd_many(gens)
        f = f * h
    return strip_content(f)


def _resultant_convention(p1: Poly, q1: Poly, v: str) -> Poly:
    """Res_v, taken to be 1 when both inputs are free of v."""
    dp, dq = p1.degree_in(v), q1.degree_in(v)
    ring = p1.ring.without(v)
    if p1.is_zero() or q1.is_zero():
        return Poly.zero(ring)
    if dp <= 0 and dq <= 0:
        return Poly.one(ring)
    return resultant(p1, q1, v)


def double_curve_resultant(g) -> Poly:
    """d in the original (s, t): content-stripped Res_t2(p1, q1), pulled back."""
    norm = normalization(g)
    p1, q1, _, _ = _divided_differences(norm.germ)
    r = _resultant_convention(p1, q1, "t2")
    if r.is_zero():
        raise ValueError("resultant vanishes identically: double point locus is not a curve")
    d = r.to_ring(CURVE_RING).substitute(
        {"s": Poly.var(SOURCE, "s"), "t1": Poly.var(SOURCE, "t")}, ring=SOURCE
    )
    return strip_content(norm.pull_back(d))


def cross_product(u, v):
    return [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]


def branch_normal(branch) -> list:
    """The normal field d_s Phi x d_t Phi along one branch."""
    ds = [c.derivative("s") for c in branch]
    dt = [c.derivative("t") for c in branch]
    return cross_product(ds, dt)


def double_curve_conductor(g, f: Poly | None = None) -> list:
    """Per-branch d from grad(f) o Phi = lambda * (d_s Phi x d_t Phi)."""
    f = f if f is not None else image_equation(g)
    out = []
    for b in _branches(g):
        sub = {"x": b[0], "y": b[1], "z": b[2]}
        grad = [f.derivative(v).substitute(sub, ring=SOURCE) for v in "xyz"]
        n = branch_normal(b)
        lam = None
        for gk, nk in zip(grad, n):
            if not nk.is_zero():
                lam = gk.exact_div(nk)
                break
        if lam is None:
            raise ValueError("branch is not generically immersive")
        if any(gk != lam * nk for gk, nk in zip(grad, n)):
            raise ConsistencyError("gradient of the image equation is not proportional to the normal field")
        out.append(strip_content(lam))
    return out


def double_curve(g) -> Poly:
    """d of a corank <= 1 mono-germ via the divided-difference resultant."""
    return double_curve_resultant(g)


def same_up_to_unit(a: Poly, b: Poly) -> bool:
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    return strip_content(a) == strip_content(b)


# -- verdict and report ------------------------------------------------------------

UNDEFINED = "undefined"
NOT_RUN = "not-run"


@dataclass
class InvariantReport:
    label: str | None
    germ: MapGerm
    corank: int
    C: Codim | None = None
    T_fitting: Codim | None = None
    T_triple_space: Codim | str | None = NOT_RUN
    L: int | str = UNDEFINED
    d: list = field(default_factory=list)  # one Poly per branch, or empty when undefined
    d_route: str = UNDEFINED
    d_squarefree: bool | None = None
    d_locally_squarefree: bool | None = None
    d_routes_agree: bool | None = None
    finitely_determined: str = "undetermined"
    evidence: list = field(default_factory=list)
    image_equation: Poly | None = None
    presentation: PresentationMatrix | None = None
    multiplicities: list = field(default_factory=list)
    errors: dict = field(default_factory=dict)

    @property
    def T(self):
        return self.T_fitting if self.T_fitting is not None else self.T_triple_space


def invariant_L(g, C: Codim | None = None, T_fit: Codim | None = None, T_tri=None):
    """C - 3T when both are finite, else UNDEFINED; the two T methods must agree."""
    C = C if C is not None else invariant_C(g)
    if T_fit is None:
        T_fit = invariant_T_fitting(g)
    if T_tri is None and len(_branches(g)) == 1 and corank(g) <= 1:
        try:
            T_tri = invariant_T_triple_space(g)
        except NotNormalizable:
            T_tri = None
    if isinstance(T_tri, Codim) and T_tri != T_fit:
        raise ConsistencyError(f"T via Fitting ideal is {T_fit}, via triple space {T_tri}")
    if not C.finite or not T_fit.finite:
        return UNDEFINED
    return C.value - 3 * T_fit.value


def finite_determinacy_verdict(g):
    """('yes' | 'no' | 'undetermined', evidence lines)."""
    r = full_report(g)
    return r.finitely_determined, r.evidence


def _record(report, name, fn):
    try:
        return fn()
    except ConsistencyError:
        raise
    except Exception as exc:  # field-level failure: keep the rest of the report
        report.errors[name] = f"{type(exc).__name__}: {exc}"
        return None


def full_report(g: MapGerm) -> InvariantReport:
    multi = g.is_multigerm
    rep = InvariantReport(label=g.label, germ=g, corank=corank(g))
    rep.C = _record(rep, "C", lambda: invariant_C(g))
    rep.image_equation = _record(rep, "image_equation", lambda: image_equation(g))
    lam = _record(rep, "presentation", lambda: presentation_matrix(g))
    rep.presentation = lam
    if lam is not None:
        rep.multiplicities = [len(gs) for gs in lam.generators]
        rep.T_fitting = _record(rep, "T_fitting", lambda: invariant_T_fitting(g, lam))
    if not multi and rep.corank <= 1:
        t = _record(rep, "T_triple_space", lambda: invariant_T_triple_space(g))
        rep.T_triple_space = t if t is not None else NOT_RUN
    if isinstance(rep.T_triple_space, Codim) and rep.T_fitting is not None:
        if rep.T_triple_space != rep.T_fitting:
            raise ConsistencyError(
                f"T via Fitting ideal is {rep.T_fitting}, via triple space {rep.T_triple_space}"
            )
    T = rep.T
    if rep.C is not None and isinstance(T, Codim) and rep.C.finite and T.finite:
        rep.L = rep.C.value - 3 * T.value

    # double point curve
    if rep.corank <= 1:
        if not multi:
            d = _record(rep, "d", lambda: double_curve_resultant(g))
            if d is not None:
                rep.d, rep.d_route = [d], "resultant"
                if rep.image_equation is not None:
                    alt = _record(rep, "d_conductor", lambda: double_curve_conductor(g, rep.image_equation))
                    if alt is not None:
                        rep.d_routes_agree = same_up_to_unit(d, alt[0])
        if not rep.d and rep.image_equation is not None:
            ds = _record(rep, "d_conductor", lambda: double_curve_conductor(g, rep.image_equation))
            if ds is not None:
                rep.d, rep.d_route = ds, "conductor"
        if rep.d:
            rep.d_squarefree = all(squarefree_test(d) for d in rep.d)
            rep.d_locally_squarefree = all(locally_squarefree(d) for d in rep.d)
    _verdict(rep)
    return rep


def _verdict(rep: InvariantReport) -> None:
    ev = rep.evidence
    ev.append(f"corank {rep.corank}")
    ev.append(f"C = {rep.C if rep.C is not None else 'error'}")
    T = rep.T
    ev.append(f"T = {T if isinstance(T, Codim) else 'error'}")
    if rep.corank == 2:
        ev.append("corank 2: reduced double curve test needs the corank-1 route")
        rep.finitely_determined = "undetermined"
        return
    if not rep.d:
        ev.append("double point curve not available")
        rep.finitely_determined = "undetermined"
        return
    ev.append("d = " + ", ".join(str(d) for d in rep.d) + f" ({rep.d_route})")
    ev.append(f"d squarefree: {rep.d_squarefree}; squarefree at the origin: {rep.d_locally_squarefree}")
    if rep.d_routes_agree is not None:
        ev.append(f"resultant and conductor routes agree: {rep.d_routes_agree}")
    finite = rep.C is not None and rep.C.finite and isinstance(T, Codim) and T.finite
    if finite and rep.d_locally_squarefree:
        rep.finitely_determined = "yes"
    elif rep.C is None or not isinstance(T, Codim):
        rep.finitely_determined = "undetermined"
    else:
        rep.finitely_determined = "no"


# -- oracle cross-checks -----------------------------------------------------------


def checked_ideals(g, rep: InvariantReport | None = None) -> dict:
    """The ideals whose codimensions feed C and T, by name."""
    out = {}
    for k, b in enumerate(_branches(g)):
        out[f"ramification[{k}]"] = ramification_ideal(MapGerm([b]))
    lam = rep.presentation if rep is not None else None
    try:
        lam = lam or presentation_matrix(g)
        out["F2"] = fitting_ideal(lam, 2)
    except Exception:
        pass
    if not g.is_multigerm and corank(g) <= 1:
        try:
            out["triple_space"] = double_space_ideals(normalization(g).germ)[1]
        except NotNormalizable:
            pass
    return out


def oracle_cross_checks(g, rep: InvariantReport | None = None, degree_cap: int = 12) -> dict:
    """Compare local_codim with the Macaulay oracle on every ideal behind C and T."""
    from .oracle import oracle_search

    out = {}
    for name, ideal in checked_ideals(g, rep).items():
        sb = local_codim(ideal)
        value, cap = oracle_search(ideal, degree_cap)
        if value is None:
            # still changing at the cap: fine for an infinite codimension, inconclusive otherwise
            agree = None if sb.finite else True
            out[name] = {"standard_basis": sb.to_json(), "oracle": "unstable", "cap": cap, "agree": agree}
        else:
            out[name] = {"standard_basis": sb.to_json(), "oracle": value.value, "cap": cap, "agree": sb == value}
    return out
