"""Recursive-descent parser for polynomial expressions and germ descriptions.

Polynomial grammar::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT | NAME | "i" | "(" expr ")"

Germ grammar: one branch per ``Phi(s,t) = (e1, e2, e3)``, branches separated
by ``;`` or newlines; ``#`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .poly import Poly, Ring
from .scalar import I, Scalar


class ParseError(ValueError):
    """Syntax error carrying a 1-based line and column."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class GermSemanticError(ValueError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # INT NAME OP EOF
    text: str
    pos: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))")


def tokenize(text: str, start: int = 0, end: int | None = None) -> list:
    out = []
    pos = start
    n = len(text) if end is None else end
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos, n)
        at = m.start(m.lastindex)
        if m.group(1):
            out.append(Token("INT", m.group(1), at))
        elif m.group(2):
            out.append(Token("NAME", m.group(2), at))
        else:
            ch = m.group(3)
            if ch not in "+-*/^(),;=":
                raise ParseError(f"unexpected character {ch!r}", *_linecol(text, at))
            out.append(Token("OP", ch, at))
        pos = m.end()
    out.append(Token("EOF", "", n))
    return out


def _linecol(text: str, pos: int):
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


class _Parser:
    def __init__(self, text: str, ring: Ring | None, start: int = 0, end: int | None = None):
        self.text = text
        self.toks = tokenize(text, start, end)
        self.k = 0
        self.ring = ring

    @property
    def tok(self) -> Token:
        return self.toks[self.k]

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(msg, *_linecol(self.text, tok.pos))

    def accept(self, text: str) -> bool:
        if self.tok.kind == "OP" and self.tok.text == text:
            self.k += 1
            return True
        return False

    def expect(self, text: str):
        if not self.accept(text):
            got = self.tok.text or "end of input"
            self.error(f"expected {text!r}, got {got!r}")

    # -- polynomial expressions -------------------------------------------
    def expr(self) -> Poly:
        p = self.term()
        while True:
            if self.accept("+"):
                p = p + self.term()
            elif self.accept("-"):
                p = p - self.term()
            else:
                return p

    def term(self) -> Poly:
        p = self.unary()
        while True:
            if self.accept("*"):
                p = p * self.unary()
            elif self.tok.kind == "OP" and self.tok.text == "/":
                tok = self.tok
                self.k += 1
                q = self.unary()
                if not q.is_constant() or q.is_zero():
                    self.error("can only divide by a nonzero constant", tok)
                p = p.scale(q.constant_term().inverse())
            else:
                return p

    def unary(self) -> Poly:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.accept("^"):
            if self.tok.kind != "INT":
                self.error("exponent must be a non-negative integer")
            n = int(self.tok.text)
            self.k += 1
            return base ** n
        return base

    def atom(self) -> Poly:
        tok = self.tok
        if tok.kind == "INT":
            self.k += 1
            return Poly.const(self.ring, Scalar(int(tok.text)))
        if tok.kind == "NAME":
            self.k += 1
            if tok.text == "i":
                return Poly.const(self.ring, I)
            if tok.text not in self.ring:
                self.error(f"unknown variable {tok.text!r} (ring is {self.ring})", tok)
            return Poly.var(self.ring, tok.text)
        if self.accept("("):
            p = self.expr()
            self.expect(")")
            return p
        self.error(f"unexpected {tok.text or 'end of input'!r}")

    # -- germs ------------------------------------------------------------
    def branch(self):
        if self.tok.kind != "NAME":
            self.error("expected a branch of the form Phi(s,t) = (e1, e2, e3)")
        self.k += 1
        self.expect("(")
        names = []
        for j in range(2):
            if self.tok.kind != "NAME" or self.tok.text == "i":
                self.error("expected a source variable name")
            names.append(self.tok.text)
            self.k += 1
            if j == 0:
                self.expect(",")
        if names[0] == names[1]:
            self.error("source variables must be distinct")
        self.expect(")")
        self.expect("=")
        self.expect("(")
        self.ring = Ring(tuple(names))
        comps = [self.expr()]
        for _ in range(2):
            self.expect(",")
            comps.append(self.expr())
        self.expect(")")
        return names, comps


def parse_poly(text: str, ring: Ring) -> Poly:
    p = _Parser(text, ring)
    out = p.expr()
    if p.tok.kind != "EOF":
        p.error(f"unexpected {p.tok.text!r}")
    return out


def _strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def parse_branches(text: str) -> list:
    """Parse germ text into a list of component triples over the ring (s, t)."""
    from .germ import SOURCE

    text = _strip_comments(text)
    chunks = []
    # newlines separate branches as well as semicolons; keep offsets for errors
    start = 0
    for m in re.finditer(r"[;\n]", text + "\n"):
        chunk = text[start : m.start()]
        if chunk.strip():
            chunks.append((start, chunk))
        start = m.end()
    if not chunks:
        raise ParseError("empty germ description", 1, 1)
    branches = []
    for offset, chunk in chunks:
        parser = _Parser(text, None, offset, offset + len(chunk))
        names, comps = parser.branch()
        if parser.tok.kind != "EOF":
            parser.error(f"unexpected {parser.tok.text!r} after branch")
        to_st = {names[0]: Poly.var(SOURCE, "s"), names[1]: Poly.var(SOURCE, "t")}
        comps = [c.substitute(to_st) for c in comps]
        for k, c in enumerate(comps):
            if c.constant_term():
                raise GermSemanticError(
                    f"component {k + 1} of branch {len(branches) + 1} has nonzero constant term "
                    f"{c.constant_term()}: a germ must send 0 to 0"
                )
        branches.append(tuple(comps))
    return branches


def parse_germ(text: str, label: str | None = None):
    from .germ import MapGerm

    return MapGerm(parse_branches(text), label=label)
