"""Text input for polynomials and ideals.

Grammar::

    ideal   := poly ("," poly)*
    poly    := ["+" | "-"] term (("+" | "-") term)*
    term    := factor ("*" factor)*
    factor  := INT ["/" INT] | VAR ["^" INT]

Variables are ``x, y, z, w`` when there are at most four of them, and
``x1 .. xN`` always. ``str()`` of a parsed polynomial parses back to the same
polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InhomogeneousError, ParseError
from .field import QQ, Field
from .ideal import Ideal
from .ring import PolyRing, Polynomial, default_names

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^/,()]))")
_INDEXED = re.compile(r"x(\d+)$")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "var", "op" or "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        out.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


def infer_nvars(text: str) -> int:
    """Smallest variable count whose naming scheme covers every name in ``text``."""
    best = 1
    for tok in tokenize(text):
        if tok.kind != "var":
            continue
        m = _INDEXED.match(tok.text)
        if m and int(m.group(1)) >= 1:
            best = max(best, int(m.group(1)))
        elif tok.text in default_names(4):
            best = max(best, default_names(4).index(tok.text) + 1)
    return best


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.toks = tokenize(text)
        self.i = 0
        self.names = {}
        for k, name in enumerate(ring.names):
            self.names[name] = k
        for k in range(ring.nvars):
            self.names.setdefault(f"x{k + 1}", k)

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_int(self, what: str) -> Token:
        t = self.take()
        if t.kind != "int":
            raise ParseError(f"expected {what}, found {t.text or 'end of input'!r}", t.pos)
        return t

    def factor(self) -> tuple[object, tuple]:
        t = self.take()
        exps = [0] * self.ring.nvars
        if t.kind == "int":
            c = Fraction(int(t.text))
            if self.tok.text == "/":
                self.take()
                den = self.expect_int("denominator")
                if int(den.text) == 0:
                    raise ParseError("zero denominator", den.pos)
                c /= int(den.text)
            return c, tuple(exps)
        if t.kind == "var":
            if t.text not in self.names:
                raise ParseError(f"unknown variable {t.text!r} for {self.ring.nvars} variables", t.pos)
            e = 1
            if self.tok.text == "^":
                self.take()
                e = int(self.expect_int("exponent").text)
            exps[self.names[t.text]] = e
            return Fraction(1), tuple(exps)
        raise ParseError(f"expected a number or variable, found {t.text or 'end of input'!r}", t.pos)

    def term(self) -> tuple[object, tuple]:
        c, m = self.factor()
        while self.tok.text == "*":
            self.take()
            c2, m2 = self.factor()
            c *= c2
            m = tuple(a + b for a, b in zip(m, m2))
        return c, m

    def poly(self) -> tuple[Polynomial, int]:
        start = self.tok.pos
        terms: dict = {}
        sign = 1
        if self.tok.text in "+-" and self.tok.kind == "op":
            sign = -1 if self.take().text == "-" else 1
        while True:
            c, m = self.term()
            terms[m] = terms.get(m, 0) + sign * c
            if self.tok.kind == "op" and self.tok.text in ("+", "-"):
                sign = -1 if self.take().text == "-" else 1
                continue
            break
        field = self.ring.field
        coerced = {}
        for m, c in terms.items():
            if field.char and isinstance(c, Fraction) and c.denominator % field.char == 0:
                raise ParseError(f"coefficient {c} is undefined in {field.name}", start)
            coerced[m] = field(c)
        return self.ring.poly(coerced), start

    def polys(self) -> list[tuple[Polynomial, int]]:
        out = [self.poly()]
        while self.tok.text == ",":
            self.take()
            out.append(self.poly())
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return out


def make_ring(nvars: int, field: Field = QQ) -> PolyRing:
    return PolyRing(nvars, field)


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    p = _Parser(text, ring)
    f, _ = p.poly()
    if p.tok.kind != "end":
        raise ParseError(f"unexpected {p.tok.text!r}", p.tok.pos)
    return f


def parse_polynomials(text: str, ring: PolyRing) -> list[Polynomial]:
    return [f for f, _ in _Parser(text, ring).polys()]


def parse_ideal(text: str, ring: PolyRing | None = None, field: Field = QQ,
                degree_bound: int | None = None) -> Ideal:
    """Parse a comma separated generator list into a homogeneous ideal.

    Without ``ring`` the variable count is inferred from the names used.
    """
    if ring is None:
        ring = make_ring(infer_nvars(text), field)
    gens = []
    for k, (f, pos) in enumerate(_Parser(text, ring).polys()):
        if not f.is_homogeneous():
            raise InhomogeneousError(f"generator {k + 1} ({f}) is not homogeneous (at position {pos})")
        gens.append(f)
    return Ideal(ring, gens, degree_bound)
