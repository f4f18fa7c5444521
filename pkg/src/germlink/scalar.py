"""Exact Gaussian rationals a + b*i with a, b in Q.

Both parts are stored as GMP rationals (``gmpy2.mpq``) when gmpy2 is
importable and as ``fractions.Fraction`` otherwise; either way they are kept
in lowest terms with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - pure Python fallback
    Q = Fraction

_QTYPE = type(Q(0))
_RATIONALS = (int, Fraction, _QTYPE)


def _frac(x):
    if isinstance(x, _QTYPE):
        return x
    if isinstance(x, (int, Rational, str)):
        return Q(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class Scalar:
    """Element of Q(i). Immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def coerce(cls, x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, complex):
            raise TypeError("floating point complex numbers are not exact")
        return cls(x)

    @classmethod
    def _raw(cls, re, im) -> "Scalar":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    # -- predicates -------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _RATIONALS):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        o = _as_scalar(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_scalar(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _as_scalar(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(o.re - self.re, o.im - self.im)

    def __neg__(self):
        return Scalar._raw(-self.re, -self.im)

    def __mul__(self, other):
        o = _as_scalar(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b:
            if not d:
                return Scalar._raw(a * c, d)
            return Scalar._raw(a * c, a * d)
        if not d:
            return Scalar._raw(a * c, b * c)
        return Scalar._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("division by zero in Q(i)")
        if not self.im:
            return Scalar._raw(1 / self.re, self.im)
        n = self.re * self.re + self.im * self.im
        return Scalar._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = _as_scalar(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _as_scalar(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Scalar":
        return Scalar._raw(self.re, -self.im)

    def norm(self):
        """|a + bi|^2."""
        return self.re * self.re + self.im * self.im

    # -- printing ---------------------------------------------------------
    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        if not self.im:
            return _fmt(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else f"{_fmt(self.im)}*i"
        if not self.re:
            return im
        sign = "-" if im.startswith("-") else "+"
        return f"{_fmt(self.re)}{sign}{im.lstrip('-')}"

    def to_json(self) -> str:
        return str(self)


_QZERO = Q(0)


def _fmt(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _as_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, _RATIONALS):
        return Scalar._raw(Q(x), _QZERO)
    return None


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def scalar_arith(a, b, op: str) -> Scalar:
    """Apply ``op`` in {add, sub, mul, div} to two Gaussian rationals."""
    a, b = Scalar.coerce(a), Scalar.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")
