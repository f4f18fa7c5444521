"""Map germs (C^2, 0) -> (C^3, 0), possibly multigerms."""

from __future__ import annotations

from .poly import Poly, Ring

SOURCE = Ring(("s", "t"))
TARGET = Ring(("x", "y", "z"))


class MapGerm:
    """A list of branches, each three polynomials in (s, t) vanishing at 0."""

    __slots__ = ("branches", "label")

    def __init__(self, branches, label: str | None = None):
        out = []
        for b in branches:
            b = tuple(b)
            if len(b) != 3:
                raise ValueError("each branch needs exactly three components")
            comps = []
            for c in b:
                if not isinstance(c, Poly):
                    c = Poly.const(SOURCE, c)
                c = c.to_ring(SOURCE)
                if c.constant_term():
                    raise ValueError(f"component {c} does not vanish at the origin")
                comps.append(c)
            out.append(tuple(comps))
        if not out:
            raise ValueError("a germ needs at least one branch")
        self.branches = tuple(out)
        self.label = label

    @classmethod
    def parse(cls, text: str, label: str | None = None) -> "MapGerm":
        from .parse import parse_germ

        return parse_germ(text, label)

    @classmethod
    def mono(cls, f1, f2, f3, label=None) -> "MapGerm":
        return cls([(f1, f2, f3)], label)

    @property
    def is_multigerm(self) -> bool:
        return len(self.branches) > 1

    def branch(self, k: int = 0) -> "MapGerm":
        return MapGerm([self.branches[k]], self.label)

    def __eq__(self, other):
        return isinstance(other, MapGerm) and self.branches == other.branches

    def __hash__(self):
        return hash(self.branches)

    def to_text(self) -> str:
        return "; ".join(
            "Phi(s,t) = (" + ", ".join(str(c) for c in b) + ")" for b in self.branches
        )

    __str__ = to_text

    def __repr__(self) -> str:
        return f"MapGerm({self.to_text()!r})"

    def transform(self, source=None, target=None) -> "MapGerm":
        """B o Phi o A for a 2x2 source matrix A and a 3x3 target matrix B (scalar entries)."""
        s, t = SOURCE.gens()
        new = []
        for b in self.branches:
            comps = list(b)
            if source is not None:
                (a11, a12), (a21, a22) = source
                sub = {"s": s * a11 + t * a12, "t": s * a21 + t * a22}
                comps = [c.substitute(sub) for c in comps]
            if target is not None:
                comps = [
                    sum((comps[j] * target[k][j] for j in range(3)), Poly.zero(SOURCE))
                    for k in range(3)
                ]
            new.append(tuple(comps))
        return MapGerm(new, self.label)
