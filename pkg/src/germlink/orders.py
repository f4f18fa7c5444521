"""Monomial orders on exponent tuples.

Every order exposes ``key(exponents)``; a larger key means a larger monomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable


def _revneg(e):
    return tuple(-x for x in reversed(e))


@dataclass(frozen=True)
class MonomialOrder:
    kind: str
    block: frozenset = frozenset()
    key: Callable = field(init=False, repr=False, compare=False)

    KINDS = ("global_degrevlex", "local_negdegrevlex", "elimination", "lex")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "global_degrevlex":
            key = lambda e: (sum(e), _revneg(e))
        elif self.kind == "local_negdegrevlex":
            key = lambda e: (-sum(e), _revneg(e))
        elif self.kind == "lex":
            key = tuple
        else:
            blk = tuple(sorted(self.block))
            key = lambda e: (sum(e[i] for i in blk), sum(e), _revneg(e))
        object.__setattr__(self, "key", key)

    @property
    def is_local(self) -> bool:
        return self.kind == "local_negdegrevlex"

    @classmethod
    def elimination(cls, ring, drop: Iterable[str]) -> "MonomialOrder":
        return cls("elimination", frozenset(ring.index_of(v) for v in drop))


DEGREVLEX = MonomialOrder("global_degrevlex")
NEGDEGREVLEX = MonomialOrder("local_negdegrevlex")
LEX = MonomialOrder("lex")
