"""Sparse multivariate polynomials over Q(i) with named variables."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .orders import DEGREVLEX, MonomialOrder
from .scalar import ONE, ZERO, Scalar

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class RingMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Ring:
    """Ordered tuple of variable names."""

    variables: tuple

    def __post_init__(self):
        vs = tuple(self.variables)
        object.__setattr__(self, "variables", vs)
        if len(set(vs)) != len(vs):
            raise ValueError(f"duplicate variable names in {vs}")
        for v in vs:
            if not _NAME.match(v) or v == "i":
                raise ValueError(f"invalid variable name {v!r}")

    @cached_property
    def _index(self) -> dict:
        return {v: k for k, v in enumerate(self.variables)}

    @property
    def ngens(self) -> int:
        return len(self.variables)

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"variable {name!r} not in ring {self.variables}") from None

    def __contains__(self, name) -> bool:
        return name in self._index

    def extend(self, *names: str) -> "Ring":
        return Ring(self.variables + tuple(n for n in names if n not in self))

    def without(self, *names: str) -> "Ring":
        return Ring(tuple(v for v in self.variables if v not in names))

    def gens(self) -> list:
        return [Poly.var(self, v) for v in self.variables]

    def __str__(self) -> str:
        return "(" + ",".join(self.variables) + ")"


def _coerce_coeff(c) -> Scalar:
    return c if isinstance(c, Scalar) else Scalar.coerce(c)


class Poly:
    """Immutable polynomial: a map exponent tuple -> nonzero Scalar."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping | None = None, *, _trusted: bool = False):
        self.ring = ring
        self._hash = None
        if _trusted:
            self.terms = terms
            return
        clean = {}
        n = ring.ngens
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n or any(x < 0 for x in e):
                raise ValueError(f"exponent {e} does not fit ring {ring}")
            c = _coerce_coeff(c)
            if c:
                clean[e] = clean.get(e, ZERO) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, ring: Ring) -> "Poly":
        return cls(ring, {}, _trusted=True)

    @classmethod
    def const(cls, ring: Ring, c) -> "Poly":
        c = _coerce_coeff(c)
        if not c:
            return cls.zero(ring)
        return cls(ring, {(0,) * ring.ngens: c}, _trusted=True)

    @classmethod
    def one(cls, ring: Ring) -> "Poly":
        return cls.const(ring, ONE)

    @classmethod
    def var(cls, ring: Ring, name: str) -> "Poly":
        e = [0] * ring.ngens
        e[ring.index_of(name)] = 1
        return cls(ring, {tuple(e): ONE}, _trusted=True)

    @classmethod
    def monomial(cls, ring: Ring, exps, c=ONE) -> "Poly":
        return cls(ring, {tuple(exps): c})

    @classmethod
    def parse(cls, text: str, ring: Ring) -> "Poly":
        from .parse import parse_poly

        return parse_poly(text, ring)

    # -- basic queries ----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * self.ring.ngens, ZERO)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def order(self) -> int:
        """Lowest total degree of a term (the order at the origin); -1 for zero."""
        return min((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        k = self.ring.index_of(name)
        return max((e[k] for e in self.terms), default=-1)

    def variables_used(self) -> set:
        used = set()
        for e in self.terms:
            for k, x in enumerate(e):
                if x:
                    used.add(self.ring.variables[k])
        return used

    def leading(self, order: MonomialOrder = DEGREVLEX):
        """(exponents, coefficient) of the leading term under ``order``."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "Poly"):
        if other.ring != self.ring:
            raise RingMismatch(f"ring mismatch: {self.ring} vs {other.ring}")

    def _lift(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        try:
            return Poly.const(self.ring, other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Poly(self.ring, terms, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                c = _coerce_coeff(other)
            except TypeError:
                return NotImplemented
            return self.scale(c)
        self._check(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e)
                terms[e] = c1 * c2 if s is None else s + c1 * c2
        return Poly(self.ring, {e: c for e, c in terms.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        c = _coerce_coeff(c)
        if not c:
            return Poly.zero(self.ring)
        return Poly(self.ring, {e: c * v for e, v in self.terms.items()}, _trusted=True)

    def mul_term(self, exps, c) -> "Poly":
        return Poly(
            self.ring,
            {tuple(a + b for a, b in zip(e, exps)): c * v for e, v in self.terms.items()},
            _trusted=True,
        )

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = Poly.one(self.ring), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return self.exact_div(other)
        return self.scale(_coerce_coeff(other).inverse())

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient q with self == q * other; raises ValueError if not exact."""
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("division by the zero polynomial")
        order = DEGREVLEX
        le, lc = other.leading(order)
        inv = lc.inverse()
        rem = dict(self.terms)
        quot: dict = {}
        key = order.key
        while rem:
            e = max(rem, key=key)
            if any(a < b for a, b in zip(e, le)):
                raise ValueError("polynomial division is not exact")
            q = tuple(a - b for a, b in zip(e, le))
            c = rem[e] * inv
            quot[q] = c
            for oe, oc in other.terms.items():
                t = tuple(a + b for a, b in zip(oe, q))
                v = rem.get(t, ZERO) - c * oc
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return Poly(self.ring, quot, _trusted=True)

    def divides(self, other: "Poly") -> bool:
        try:
            other.exact_div(self)
        except ValueError:
            return False
        return True

    def monic(self, order: MonomialOrder = DEGREVLEX) -> "Poly":
        if not self.terms:
            return self
        return self.scale(self.leading(order)[1].inverse())

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            c = _coerce_coeff(other)
        except TypeError:
            return NotImplemented
        return self.terms == Poly.const(self.ring, c).terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- structural operations --------------------------------------------
    def to_ring(self, ring: Ring) -> "Poly":
        """Re-express in ``ring`` (matching variables by name)."""
        if ring == self.ring:
            return self
        pos = []
        for k, v in enumerate(self.ring.variables):
            pos.append(ring._index.get(v))
        terms = {}
        n = ring.ngens
        for e, c in self.terms.items():
            ne = [0] * n
            for k, x in enumerate(e):
                if x:
                    if pos[k] is None:
                        raise RingMismatch(
                            f"variable {self.ring.variables[k]!r} has no home in ring {ring}"
                        )
                    ne[pos[k]] += x
            terms[tuple(ne)] = c
        return Poly(ring, terms, _trusted=True)

    def substitute(self, bindings: Mapping, ring: Ring | None = None) -> "Poly":
        """Compose: replace variables by polynomials living in one common ring.

        Unbound variables are kept and must exist in the target ring.
        """
        images = {}
        target = ring
        for name, img in bindings.items():
            self.ring.index_of(name)
            if isinstance(img, Poly):
                if target is None:
                    target = img.ring
                elif img.ring != target:
                    raise RingMismatch("substitution images live in different rings")
            images[name] = img
        if target is None:
            target = self.ring
        gens = []
        for v in self.ring.variables:
            if v in images:
                img = images[v]
                gens.append(img if isinstance(img, Poly) else Poly.const(target, img))
            else:
                if v not in target:
                    raise RingMismatch(f"unbound variable {v!r} has no home in ring {target}")
                gens.append(Poly.var(target, v))
        powers = [dict() for _ in gens]

        def power(k, n):
            cache = powers[k]
            if n not in cache:
                cache[n] = gens[k] ** n
            return cache[n]

        result = Poly.zero(target)
        for e, c in self.terms.items():
            term = Poly.const(target, c)
            for k, x in enumerate(e):
                if x:
                    term = term * power(k, x)
            result = result + term
        return result

    def evaluate(self, point: Mapping) -> Scalar:
        """Value at a point given as {name: scalar}; all used variables must be bound."""
        p = self.substitute({v: point[v] for v in self.ring.variables if v in point}, Ring(()))
        return p.constant_term()

    def derivative(self, name: str) -> "Poly":
        k = self.ring.index_of(name)
        terms = {}
        for e, c in self.terms.items():
            if e[k]:
                ne = e[:k] + (e[k] - 1,) + e[k + 1 :]
                terms[ne] = c * e[k]
        return Poly(self.ring, terms, _trusted=True)

    def conjugate(self) -> "Poly":
        """Conjugate every coefficient; variables are left as formal symbols."""
        return Poly(self.ring, {e: c.conjugate() for e, c in self.terms.items()}, _trusted=True)

    def coeffs_in(self, name: str) -> dict:
        """{power: coefficient polynomial} viewing self as univariate in ``name``."""
        k = self.ring.index_of(name)
        out: dict = {}
        for e, c in self.terms.items():
            ne = e[:k] + (0,) + e[k + 1 :]
            out.setdefault(e[k], {})[ne] = c
        return {n: Poly(self.ring, t, _trusted=True) for n, t in out.items()}

    def divided_difference(self, v: str, v1: str, v2: str) -> "Poly":
        """q with (v1 - v2) q = p[v -> v1] - p[v -> v2], exactly."""
        if v1 == v2:
            raise ValueError("divided difference needs two distinct variables")
        names = []
        for w in self.ring.variables:
            for n in ((v1, v2) if w == v else (w,)):
                if n not in names:
                    names.append(n)
        if v not in self.ring:
            raise KeyError(f"variable {v!r} not in ring {self.ring}")
        target = Ring(tuple(names))
        k = self.ring.index_of(v)
        i1, i2 = target.index_of(v1), target.index_of(v2)
        idx = [None if j == k else target.index_of(w) for j, w in enumerate(self.ring.variables)]
        terms: dict = {}
        for e, c in self.terms.items():
            n = e[k]
            if n == 0:
                continue
            base = [0] * target.ngens
            for j, x in enumerate(e):
                if j != k and x:
                    base[idx[j]] += x
            for a in range(n):
                ne = list(base)
                ne[i1] += a
                ne[i2] += n - 1 - a
                ne = tuple(ne)
                s = terms.get(ne)
                terms[ne] = c if s is None else s + c
        return Poly(target, {e: c for e, c in terms.items() if c}, _trusted=True)

    # -- printing ---------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms(DEGREVLEX):
            mono = "*".join(
                v if x == 1 else f"{v}^{x}" for v, x in zip(self.ring.variables, e) if x
            )
            neg, body = _coeff_text(c)
            if mono:
                text = mono if body == "1" else f"{body}*{mono}"
            else:
                text = body
            if not out:
                out.append(("-" if neg else "") + text)
            else:
                out.append((" - " if neg else " + ") + text)
        return "".join(out)

    def __repr__(self) -> str:
        return f"Poly({self}, ring={self.ring})"


def _coeff_text(c: Scalar):
    """(negative?, text) for a coefficient so that sign can float out of the term."""
    if c.im and c.re:
        return False, f"({c})"
    if c.im:
        v = c.im
        neg = v < 0
        v = -v if neg else v
        return neg, "i" if v == 1 else f"{Scalar(v)}*i"
    v = c.re
    neg = v < 0
    return neg, str(Scalar(-v if neg else v))


def partial_derivative(p: Poly, v: str) -> Poly:
    return p.derivative(v)


def conjugate_poly(p: Poly) -> Poly:
    return p.conjugate()


def divided_difference(p: Poly, v: str, v1: str, v2: str) -> Poly:
    return p.divided_difference(v, v1, v2)


def substitute(p: Poly, bindings: Mapping, ring: Ring | None = None) -> Poly:
    return p.substitute(bindings, ring)


def poly_arith(p: Poly, q: Poly, op: str) -> Poly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


class Ideal:
    """A ring together with a generator list (zero generators dropped)."""

    __slots__ = ("ring", "generators")

    def __init__(self, ring: Ring, generators: Iterable[Poly]):
        gens = []
        for g in generators:
            if not isinstance(g, Poly):
                g = Poly.const(ring, g)
            if g.ring != ring:
                raise RingMismatch(f"generator {g} not in ring {ring}")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)

    @classmethod
    def parse(cls, ring: Ring, texts: Iterable[str]) -> "Ideal":
        return cls(ring, [Poly.parse(t, ring) for t in texts])

    def is_zero(self) -> bool:
        return not self.generators

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self) -> str:
        return f"Ideal({', '.join(map(str, self.generators))}) in {self.ring}"

