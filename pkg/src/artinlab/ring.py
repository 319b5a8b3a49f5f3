"""Polynomial rings with a positive (possibly weighted) grading.

Monomials are exponent tuples. Inside one degree they are listed in
descending lexicographic order (``x`` before ``y`` before ``z``); that list is
the column order of every degree slice in the library.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import InhomogeneousError, RingMismatchError
from .field import QQ, Field

Monomial = tuple  # tuple[int, ...]

_SMALL_NAMES = ("x", "y", "z", "w")


def default_names(nvars: int) -> tuple[str, ...]:
    if nvars <= len(_SMALL_NAMES):
        return _SMALL_NAMES[:nvars]
    return tuple(f"x{i + 1}" for i in range(nvars))


class PolyRing:
    """``field[x_1..x_d]`` graded by ``deg x_i = weights[i]``."""

    def __init__(self, nvars: int, field: Field = QQ, names: Sequence[str] | None = None,
                 weights: Sequence[int] | None = None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.nvars = nvars
        self.field = field
        self.names = tuple(names) if names is not None else default_names(nvars)
        self.weights = tuple(weights) if weights is not None else (1,) * nvars
        if len(self.names) != nvars or len(self.weights) != nvars:
            raise ValueError("names/weights length must equal number of variables")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive")
        self._mono_cache: dict[int, list[Monomial]] = {}
        self._index_cache: dict[int, dict[Monomial, int]] = {}

    def _key(self):
        return (self.nvars, self.field, self.names, self.weights)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        w = "" if self.is_standard else f", weights={list(self.weights)}"
        return f"PolyRing({self.field.name}[{','.join(self.names)}]{w})"

    @property
    def is_standard(self) -> bool:
        return all(w == 1 for w in self.weights)

    @property
    def max_weight(self) -> int:
        return max(self.weights)

    def with_field(self, field: Field) -> "PolyRing":
        return PolyRing(self.nvars, field, self.names, self.weights)

    # --- monomials -----------------------------------------------------

    def mono_degree(self, m: Monomial) -> int:
        return sum(a * w for a, w in zip(m, self.weights))

    def monomials(self, deg: int) -> list[Monomial]:
        """All monomials of degree ``deg``, descending lex order."""
        cached = self._mono_cache.get(deg)
        if cached is not None:
            return cached
        out: list[Monomial] = []
        if deg >= 0:
            w = self.weights
            d = self.nvars
            prefix = [0] * d

            def rec(i: int, remaining: int):
                if i == d - 1:
                    if remaining % w[i] == 0:
                        prefix[i] = remaining // w[i]
                        out.append(tuple(prefix))
                    return
                for a in range(remaining // w[i], -1, -1):
                    prefix[i] = a
                    rec(i + 1, remaining - a * w[i])

            rec(0, deg)
        self._mono_cache[deg] = out
        return out

    def index(self, deg: int) -> dict[Monomial, int]:
        idx = self._index_cache.get(deg)
        if idx is None:
            idx = {m: i for i, m in enumerate(self.monomials(deg))}
            self._index_cache[deg] = idx
        return idx

    def dim(self, deg: int) -> int:
        return len(self.monomials(deg))

    # --- polynomials ---------------------------------------------------

    def poly(self, terms: Mapping[Monomial, object] | None = None) -> "Polynomial":
        return Polynomial(self, terms or {})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: 1})

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        return Polynomial(self, {tuple(exps): coeff})

    def var(self, i: int) -> "Polynomial":
        e = [0] * self.nvars
        e[i] = 1
        return self.monomial(e)

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def linear_sum(self) -> "Polynomial":
        """``x_1 + ... + x_d``."""
        return sum(self.gens(), self.zero())

    def from_vector(self, deg: int, vec: Mapping[int, object]) -> "Polynomial":
        monos = self.monomials(deg)
        return Polynomial(self, {monos[k]: x for k, x in vec.items()})


class Polynomial:
    """Finite map monomial -> nonzero coefficient. Immutable by convention."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, object]):
        f = ring.field
        clean = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != ring.nvars or any(a < 0 for a in m):
                raise ValueError(f"bad exponent vector {m}")
            c = f(c)
            if c:
                clean[m] = c
        self.ring = ring
        self.terms = clean

    @classmethod
    def _raw(cls, ring: PolyRing, terms: dict) -> "Polynomial":
        p = object.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    def _same(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def _lift(self, other):
        if isinstance(other, Polynomial):
            self._same(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.one() * other if other else self.ring.zero()
        return NotImplemented

    # --- structure -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {self.ring.mono_degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def homogeneous_degree(self) -> int | None:
        ds = self.degrees()
        return ds.pop() if len(ds) == 1 else None

    def degree(self) -> int:
        return max(self.degrees()) if self.terms else -1

    def require_homogeneous(self) -> int:
        ds = self.degrees()
        if len(ds) > 1:
            raise InhomogeneousError(f"{self} is not homogeneous")
        return ds.pop() if ds else 0

    def to_vector(self, deg: int | None = None) -> dict[int, object]:
        """Coordinates in the monomial basis of its degree slice."""
        if deg is None:
            deg = self.require_homogeneous()
        idx = self.ring.index(deg)
        try:
            return {idx[m]: c for m, c in self.terms.items()}
        except KeyError:
            raise InhomogeneousError(f"{self} has terms outside degree {deg}") from None

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    # --- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.char
        out = dict(self.terms)
        for m, c in other.terms.items():
            x = out.get(m, 0) + c
            if p:
                x %= p
            if x:
                out[m] = self.ring.field.normalize(x)
            else:
                out.pop(m, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.char
        return Polynomial._raw(self.ring, {m: (-c) % p if p else -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = self.ring.field(other)
            if not c:
                return self.ring.zero()
            f = self.ring.field
            return Polynomial._raw(self.ring, {m: f.normalize(x * c) % f.char if f.char else f.normalize(x * c)
                                               for m, x in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._same(other)
        p = self.ring.field.char
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                x = out.get(m, 0) + c1 * c2
                if p:
                    x %= p
                out[m] = x
        f = self.ring.field
        return Polynomial._raw(self.ring, {m: f.normalize(x) for m, x in out.items() if x})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._lift(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def substitute(self, target: PolyRing, images: Sequence["Polynomial"]) -> "Polynomial":
        """Ring map sending variable ``i`` to ``images[i]``."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        out = target.zero()
        for m, c in self.terms.items():
            t = target.one() * c
            for img, a in zip(images, m):
                if a:
                    t = t * img ** a
            out = out + t
        return out

    def primitive(self) -> "Polynomial":
        """Scale to a canonical representative of the same ideal generator.

        Over QQ: integer coefficients with gcd 1 and positive leading term.
        Over GF(p): monic.
        """
        if not self.terms:
            return self
        lead = self.sorted_terms()[0][1]
        f = self.ring.field
        if f.char:
            return self * f.inv(lead)
        coeffs = [Fraction(c) for c in self.terms.values()]
        den = reduce(lambda a, b: a * b // gcd(a, b), (c.denominator for c in coeffs), 1)
        num = reduce(gcd, (int(c * den) for c in coeffs), 0)
        scale = Fraction(den, num)
        if lead < 0:
            scale = -scale
        return self * scale

    # --- printing ------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        r = self.ring
        return sorted(self.terms.items(), key=lambda t: (-r.mono_degree(t[0]), [-a for a in t[0]]))

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        parts = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = False
            if not self.ring.field.char and c < 0:
                neg, c = True, -c
            factors = []
            for name, a in zip(names, m):
                if a == 1:
                    factors.append(name)
                elif a > 1:
                    factors.append(f"{name}^{a}")
            if c != 1 or not factors:
                factors.insert(0, str(c))
            body = "*".join(factors)
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


def monomial_multiply(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def iter_products(polys: Iterable[Polynomial], others: Iterable[Polynomial]) -> list[Polynomial]:
    others = list(others)
    return [p * q for p in polys for q in others]
