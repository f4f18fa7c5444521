"""Built-in germs: the normal forms and a few test families."""

from __future__ import annotations

from dataclasses import dataclass

from .germ import MapGerm


@dataclass(frozen=True)
class GermSource:
    name: str
    text: str
    provenance: str  # paper-eq | derived | user
    note: str = ""

    @property
    def branches(self) -> list:
        return [b.strip() for b in self.text.split(";")]

    def germ(self) -> MapGerm:
        return MapGerm.parse(self.text, self.name)


CATALOG = {
    g.name: g
    for g in [
        GermSource("umbrella", "Phi(s,t) = (s^2, s*t, t)", "paper-eq", "Whitney umbrella (cross cap)"),
        GermSource(
            "triple",
            "Phi(s,t) = (0, s, t); Phi(s,t) = (t, 0, s); Phi(s,t) = (s, t, 0)",
            "paper-eq",
            "three coordinate planes meeting at a triple value",
        ),
        GermSource(
            "double-cover-a1",
            "Phi(s,t) = (s^2, t^2, s*t)",
            "paper-eq",
            "finite C and T but not finitely determined (2:1 onto the A1 cone)",
        ),
        GermSource("cuspidal-edge", "Phi(s,t) = (s, t^2, t^3)", "derived", "not finitely determined"),
        GermSource("S1", "Phi(s,t) = (s, t^2, t^3 + s^2*t)", "derived", "S_k family, k = 1"),
        GermSource("S2", "Phi(s,t) = (s, t^2, t^3 + s^3*t)", "derived", "S_k family, k = 2"),
        GermSource("S3", "Phi(s,t) = (s, t^2, t^3 + s^4*t)", "derived", "S_k family, k = 3"),
        GermSource("H2", "Phi(s,t) = (s, t^3, s*t + t^5)", "derived", "corank 1 with one triple value"),
    ]
}


def lookup(name: str) -> GermSource:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog germ {name!r}; known: {', '.join(CATALOG)}") from None


def catalog_germs() -> list:
    return [src.germ() for src in CATALOG.values()]
