"""Exact coefficient fields: the rationals and prime fields.

Rational scalars are ``int`` or :class:`fractions.Fraction` (always reduced
with positive denominator by construction). Prime field scalars are plain
``int`` residues in ``[0, p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import FieldMismatchError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """A coefficient field. ``char == 0`` means the rationals."""

    char: int = 0

    def __post_init__(self):
        if self.char != 0 and not _is_prime(self.char):
            raise ValueError(f"modulus {self.char} is not prime")

    @property
    def name(self) -> str:
        return "QQ" if self.char == 0 else f"GF({self.char})"

    @property
    def spec(self) -> str:
        """Command-line spelling, ``q`` or ``f:<p>``."""
        return "q" if self.char == 0 else f"f:{self.char}"

    def __repr__(self):
        return self.name

    def __call__(self, x):
        """Coerce an int, Fraction or numeric string into this field."""
        if isinstance(x, str):
            x = Fraction(x)
        if self.char == 0:
            if isinstance(x, bool):
                x = int(x)
            if isinstance(x, int):
                return x
            if isinstance(x, Fraction):
                return x.numerator if x.denominator == 1 else x
            raise TypeError(f"cannot coerce {x!r} into {self.name}")
        p = self.char
        if isinstance(x, int):
            return x % p
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in {self.name}")
            return x.numerator * pow(x.denominator, -1, p) % p
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def check(self, x) -> None:
        """Raise :class:`FieldMismatchError` unless ``x`` is a canonical element."""
        if self.char == 0:
            if isinstance(x, Fraction) or (isinstance(x, int) and not isinstance(x, bool)):
                return
        elif isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.char:
            return
        raise FieldMismatchError(f"{x!r} is not an element of {self.name}")

    def inv(self, x):
        if self.char == 0:
            r = Fraction(1) / x
            return r.numerator if r.denominator == 1 else r
        return pow(x, -1, self.char)

    def normalize(self, x):
        if self.char == 0:
            if isinstance(x, Fraction) and x.denominator == 1:
                return x.numerator
            return x
        return x % self.char


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


def parse_field(text: str) -> Field:
    """Parse ``q`` / ``Q`` / ``QQ`` or ``f:<p>``."""
    t = text.strip().lower()
    if t in ("q", "qq", "0"):
        return QQ
    if t.startswith("f:"):
        try:
            p = int(t[2:])
        except ValueError:
            raise ValueError(f"bad field spec {text!r}") from None
        return Field(p)
    raise ValueError(f"bad field spec {text!r}; expected q or f:<p>")


def same_field(*fields: Field) -> Field:
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatchError(f"{first.name} vs {f.name}")
    return first
