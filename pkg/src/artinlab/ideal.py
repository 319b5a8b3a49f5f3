"""Homogeneous ideals as per-degree row spaces, and their quotients.

An :class:`Ideal` stores, for each degree ``i``, the reduced echelon basis of
``I_i`` inside the monomial basis of ``T_i``. Slices are built bottom-up:
``I_i = sum_v x_v I_{i - deg x_v} + span(generators of degree i)``, which also
yields the minimal generators (graded Nakayama) for free.

An ideal is certified Artinian once ``max(weights)`` consecutive degrees are
full: every higher monomial is a variable times one of lower degree, so all
later slices are full too.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Iterable, Sequence

from .errors import (
    DegreeBoundError,
    InhomogeneousError,
    RingMismatchError,
    TruncationError,
)
from .linalg import DenseMatrix, SparseVec, Span, left_kernel
from .ring import Monomial, PolyRing, Polynomial


def _shift_map(ring: PolyRing, deg: int, v: int) -> list[int]:
    """Column map ``T_deg -> T_{deg + w_v}`` for multiplication by ``x_v``."""
    key = ("shift", deg, v)
    cache = ring.__dict__.setdefault("_shift_cache", {})
    m = cache.get(key)
    if m is None:
        target = ring.index(deg + ring.weights[v])
        m = []
        for mono in ring.monomials(deg):
            e = list(mono)
            e[v] += 1
            m.append(target[tuple(e)])
        cache[key] = m
    return m


def _times_monomial(vec: Polynomial, mono: Monomial) -> dict:
    return {tuple(a + b for a, b in zip(m, mono)): c for m, c in vec.terms.items()}


class Ideal:
    """Homogeneous ideal of a graded polynomial ring, with lazy slices."""

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial] = (),
                 degree_bound: int | None = None):
        gens = []
        seen = set()
        for g in generators:
            if g.ring != ring:
                raise RingMismatchError(f"generator {g} is not in {ring}")
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise InhomogeneousError(f"generator {g} is not homogeneous")
            key = g.primitive()
            if key in seen:
                continue
            seen.add(key)
            gens.append(g)
        self.ring = ring
        self.generators: list[Polynomial] = gens
        self.degree_bound = degree_bound if degree_bound is not None else self._default_bound()
        self._slices: dict[int, Span] = {}
        self._m_rank: dict[int, int] = {}
        self._mingens: dict[int, list[SparseVec]] = {}
        self._next = 0
        self._run = 0
        self._full_from: int | None = None
        self._by_degree: dict[int, list[Polynomial]] = {}
        for g in gens:
            self._by_degree.setdefault(g.homogeneous_degree, []).append(g)

    def _default_bound(self) -> int:
        top = max((g.homogeneous_degree for g in self.generators), default=0)
        return self.ring.nvars * max(top - 1, 0) + 2 * self.ring.max_weight

    @classmethod
    def _from_slices(cls, ring: PolyRing, slices: dict[int, Span], full_from: int,
                     degree_bound: int | None = None) -> "Ideal":
        """Ideal whose slices are known for ``i < full_from`` and full afterwards."""
        self = cls(ring, (), degree_bound=degree_bound)
        self.degree_bound = max(self.degree_bound, full_from + ring.max_weight)
        self._by_degree = {}
        gens = []
        for i in range(full_from + ring.max_weight):
            target = slices[i] if i < full_from else Span.full(ring.field, ring.dim(i))
            m_span = self._m_part(i)
            new = Span(ring.field, target.ncols)
            for row in target.echelon_rows():
                r = m_span.reduce(row)
                if r:
                    new.add(r)
            rows = new.echelon_rows()
            self._mingens[i] = rows
            self._m_rank[i] = m_span.rank
            self._slices[i] = target
            for r in rows:
                g = ring.from_vector(i, r).primitive()
                gens.append(g)
                self._by_degree.setdefault(i, []).append(g)
            self._next = i + 1
        self.generators = gens
        self._full_from = full_from
        # the tail of the run may start earlier than full_from
        k = full_from
        while k > 0 and self._slices[k - 1].is_full:
            k -= 1
        self._full_from = k
        return self

    # --- slices --------------------------------------------------------

    def _m_part(self, i: int) -> Span:
        """Echelon basis of ``(m * I)_i``."""
        ring = self.ring
        span = Span(ring.field, ring.dim(i))
        for v, w in enumerate(ring.weights):
            j = i - w
            if j < 0:
                continue
            src = self._slice(j)
            if src.rank == 0:
                continue
            smap = _shift_map(ring, j, v)
            for row in src.echelon_rows():
                span.add({smap[k]: x for k, x in row.items()})
                if span.is_full:
                    return span
        return span

    def _compute_next(self) -> None:
        ring = self.ring
        i = self._next
        if self._full_from is not None:
            full = Span.full(ring.field, ring.dim(i))
            self._slices[i] = full
            if i < self._full_from + ring.max_weight:
                self._m_rank[i] = self._m_part(i).rank
                self._mingens[i] = self._gens_mod(i, None)
            self._next = i + 1
            return
        m_span = self._m_part(i)
        self._m_rank[i] = m_span.rank
        new = self._gens_mod(i, m_span)
        self._mingens[i] = new
        full = m_span
        if new:
            full = m_span.copy()
            for r in new:
                full.add(r)
        self._slices[i] = full
        if full.is_full:
            self._run += 1
            if self._run >= ring.max_weight:
                self._full_from = i - ring.max_weight + 1
        else:
            self._run = 0
        self._next = i + 1

    def _gens_mod(self, i: int, m_span: Span | None) -> list[SparseVec]:
        if m_span is None:
            m_span = self._m_part(i)
        new = Span(self.ring.field, self.ring.dim(i))
        for g in self._by_degree.get(i, ()):
            r = m_span.reduce(g.to_vector(i))
            if r:
                new.add(r)
        return new.echelon_rows()

    def _slice(self, i: int) -> Span:
        if i < 0:
            return Span(self.ring.field, 0)
        if i in self._slices:
            return self._slices[i]
        if self._full_from is not None and i >= self._full_from:
            return Span.full(self.ring.field, self.ring.dim(i))
        if i > self.degree_bound:
            raise DegreeBoundError(f"degree {i} exceeds bound {self.degree_bound}")
        while self._next <= i:
            self._compute_next()
            if self._full_from is not None and i >= self._full_from:
                return self._slices.get(i) or Span.full(self.ring.field, self.ring.dim(i))
        return self._slices[i]

    def slice(self, i: int) -> Span:
        """Echelon basis of ``I_i`` (internal sparse form)."""
        return self._slice(i)

    def rank(self, i: int) -> int:
        return self._slice(i).rank

    @property
    def full_from(self) -> int | None:
        """Smallest ``k`` with ``I_i = T_i`` for all ``i >= k``, or None if not
        certified within the degree bound."""
        while self._full_from is None and self._next <= self.degree_bound:
            self._compute_next()
        return self._full_from

    def is_artinian(self) -> bool:
        return self.full_from is not None

    def require_artinian(self) -> int:
        k = self.full_from
        if k is None:
            raise TruncationError(
                f"T/I is not certified Artinian within degree bound {self.degree_bound}")
        return k

    # --- generators ----------------------------------------------------

    def mingens(self) -> list[Polynomial]:
        """Canonical minimal homogeneous generators."""
        top = max(self._by_degree, default=-1)
        out = []
        for i in range(top + 1):
            if i not in self._mingens:
                if self._full_from is not None and i >= self._full_from:
                    self._mingens[i] = self._gens_mod(i, None)
                else:
                    self._slice(i)
            for r in self._mingens.get(i, ()):
                out.append(self.ring.from_vector(i, r).primitive())
        return out

    def minimized(self) -> "Ideal":
        return Ideal(self.ring, self.mingens(), self.degree_bound)

    def contains(self, f: Polynomial) -> bool:
        if f.ring != self.ring:
            raise RingMismatchError(f"{f} is not in {self.ring}")
        if f.is_zero():
            return True
        if not f.is_homogeneous():
            raise InhomogeneousError(f"membership needs a homogeneous element, got {f}")
        d = f.homogeneous_degree
        if self._full_from is not None and d >= self._full_from:
            return True
        if d > self.degree_bound:
            k = self.full_from
            if k is not None and d >= k:
                return True
        return self._slice(d).contains(f.to_vector(d))

    def __contains__(self, f: Polynomial) -> bool:
        return self.contains(f)

    def is_subset_of(self, other: "Ideal") -> bool:
        if self.ring != other.ring:
            raise RingMismatchError("ideals live in different rings")
        return all(other.contains(g) for g in self.generators)

    def is_unit(self) -> bool:
        return self.rank(0) == 1

    def __str__(self):
        if not self.generators:
            return "0"
        return ", ".join(str(g) for g in self.generators)

    def __repr__(self):
        return f"Ideal({self})"


# --- construction helpers ---------------------------------------------------


def maximal_ideal(ring: PolyRing) -> Ideal:
    return Ideal(ring, ring.gens())


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise RingMismatchError("ideals live in different rings")
    return Ideal(a.ring, a.generators + b.generators, max(a.degree_bound, b.degree_bound))


def ideal_product(a: Ideal, b: Ideal) -> Ideal:
    if a.ring != b.ring:
        raise RingMismatchError("ideals live in different rings")
    return Ideal(a.ring, [f * g for f in a.generators for g in b.generators])


def ideal_power(a: Ideal, n: int) -> Ideal:
    """``a^n`` by repeated product, minimizing generators after each step."""
    if n < 0:
        raise ValueError("negative power")
    result = Ideal(a.ring, [a.ring.one()])
    for _ in range(n):
        result = ideal_product(result, a).minimized()
    return result


def monomial_ideal(ring: PolyRing, exps: Iterable[Sequence[int]]) -> Ideal:
    return Ideal(ring, [ring.monomial(e) for e in exps])


def power_of_maximal(ring: PolyRing, n: int) -> Ideal:
    """``m^n`` as the span of all monomials of degree n (standard grading)."""
    if not ring.is_standard:
        return ideal_power(maximal_ideal(ring), n)
    return monomial_ideal(ring, ring.monomials(n))


def ideal_slice(ideal: Ideal, i: int) -> DenseMatrix:
    if i > ideal.degree_bound:
        raise DegreeBoundError(f"degree {i} exceeds bound {ideal.degree_bound}")
    return DenseMatrix.from_span(ideal.slice(i))


def membership(f: Polynomial, ideal: Ideal) -> bool:
    return ideal.contains(f)


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    if a.ring != b.ring:
        raise RingMismatchError("ideals live in different rings")
    ka = a.require_artinian()
    kb = b.require_artinian()
    if ka != kb:
        return False
    return all(a.slice(i) == b.slice(i) for i in range(ka))


# --- quotients --------------------------------------------------------------


@dataclass
class QuotientView:
    """Graded pieces of ``T/I`` with standard-monomial bases."""

    ideal: Ideal
    hilbert: tuple
    std_monomials: tuple
    length: int
    max_degree: int | None
    truncated: bool
    _std_pos: list = dc_field(default_factory=list, repr=False)

    @property
    def ring(self) -> PolyRing:
        return self.ideal.ring

    def h(self, i: int) -> int:
        if 0 <= i < len(self.hilbert):
            return self.hilbert[i]
        if i < 0 or not self.truncated:
            return 0
        raise TruncationError(f"degree {i} is beyond the computed range")

    def normal_form(self, deg: int, vec: SparseVec) -> dict[int, object]:
        """Coordinates of ``vec + I_deg`` in the standard monomial basis."""
        if deg < 0 or deg >= len(self.hilbert) or self.hilbert[deg] == 0:
            return {}
        r = self.ideal.slice(deg).reduce(vec)
        pos = self._std_pos[deg]
        return {pos[k]: x for k, x in r.items()}

    def normal_form_poly(self, f: Polynomial) -> dict[int, object]:
        d = f.require_homogeneous()
        return self.normal_form(d, f.to_vector(d))

    def times_variable(self, deg: int, v: int) -> list[dict[int, object]]:
        """Matrix of ``x_v : R_deg -> R_{deg + w_v}``, one image per std monomial."""
        tdeg = deg + self.ring.weights[v]
        out = []
        for s in self.std_monomials[deg]:
            e = list(s)
            e[v] += 1
            idx = self.ring.index(tdeg)
            out.append(self.normal_form(tdeg, {idx[tuple(e)]: 1}))
        return out

    def poly(self, deg: int, coords: dict[int, object]) -> Polynomial:
        monos = self.std_monomials[deg]
        return self.ring.poly({monos[k]: x for k, x in coords.items()})

    def table(self) -> str:
        return " ".join(str(x) for x in self.hilbert)


def quotient_view(ideal: Ideal) -> QuotientView:
    k = ideal.full_from
    ring = ideal.ring
    top = (k - 1) if k is not None else ideal.degree_bound
    hilbert = []
    stds = []
    pos = []
    for i in range(top + 1):
        span = ideal.slice(i)
        free = span.non_pivots()
        monos = ring.monomials(i)
        stds.append(tuple(monos[c] for c in free))
        pos.append({c: n for n, c in enumerate(free)})
        hilbert.append(len(free))
    truncated = k is None
    max_degree = None
    if not truncated:
        while hilbert and hilbert[-1] == 0:
            hilbert.pop()
            stds.pop()
            pos.pop()
        max_degree = len(hilbert) - 1
    return QuotientView(ideal, tuple(hilbert), tuple(stds), sum(hilbert), max_degree,
                        truncated, pos)


def length(ideal: Ideal) -> int:
    """``lambda(T/I)`` for an Artinian quotient."""
    ideal.require_artinian()
    return quotient_view(ideal).length


# --- colon, socle, invariants ----------------------------------------------


def colon(a: Ideal, b: Ideal, bound: int | None = None) -> Ideal:
    """``(a : b)`` for ``T/a`` Artinian, with minimal generators."""
    if a.ring != b.ring:
        raise RingMismatchError("ideals live in different rings")
    ring = a.ring
    gens = b.generators
    if not gens:
        raise ValueError("colon by the zero ideal is the whole ring; refusing")
    if any(g.homogeneous_degree == 0 for g in gens):
        raise ValueError("colon by the unit ideal is rejected")
    if bound is not None and bound > a.degree_bound:
        a.degree_bound = bound
    k = a.require_artinian()
    emin = min(g.homogeneous_degree for g in gens)
    stop = max(k - emin, 0)
    slices: dict[int, Span] = {}
    for i in range(stop):
        monos = ring.monomials(i)
        n = len(monos)
        if n == 0:
            slices[i] = Span(ring.field, 0)
            continue
        images: list[dict] = [dict() for _ in range(n)]
        offset = 0
        for g in gens:
            e = g.homogeneous_degree
            t = i + e
            if t >= k:
                continue
            target = a.slice(t)
            tidx = ring.index(t)
            width = ring.dim(t)
            for j, m in enumerate(monos):
                prod = _times_monomial(g, m)
                vec = {tidx[mm]: c for mm, c in prod.items()}
                r = target.reduce(vec)
                for col, x in r.items():
                    images[j][offset + col] = x
            offset += width
        ker = left_kernel(ring.field, images, offset)
        slices[i] = Span.from_vectors(ring.field, n, ker)
    return Ideal._from_slices(ring, slices, stop, degree_bound=a.degree_bound)


def ideal_quotient_by_element(a: Ideal, f: Polynomial) -> Ideal:
    return colon(a, Ideal(a.ring, [f]))


def socle(ideal: Ideal) -> tuple[int, list[Polynomial]]:
    """Dimension and basis of ``(I : m)/I``, as standard-monomial combinations."""
    ideal.require_artinian()
    q = quotient_view(ideal)
    return socle_of_view(q)


def socle_of_view(q: QuotientView) -> tuple[int, list[Polynomial]]:
    if q.truncated:
        raise TruncationError("socle of a truncated quotient")
    ring = q.ring
    basis = []
    for i in range(len(q.hilbert)):
        if q.hilbert[i] == 0:
            continue
        images: list[dict] = [dict() for _ in range(q.hilbert[i])]
        offset = 0
        for v in range(ring.nvars):
            t = i + ring.weights[v]
            if t >= len(q.hilbert):
                continue
            for j, img in enumerate(q.times_variable(i, v)):
                for c, x in img.items():
                    images[j][offset + c] = x
            offset += q.hilbert[t]
        for vec in left_kernel(ring.field, images, offset):
            basis.append(q.poly(i, vec))
    return len(basis), basis


def socle_dimension(ideal: Ideal) -> int:
    return socle(ideal)[0]


def order(ideal: Ideal) -> int:
    if not ideal.generators:
        raise ValueError("order of the zero ideal is undefined")
    return min(g.homogeneous_degree for g in ideal.generators)


def min_generators(ideal: Ideal) -> int:
    if not ideal.generators:
        raise ValueError("zero ideal")
    return len(ideal.mingens())


def macaulay_bound(a: int, i: int) -> int:
    """Largest possible ``h(i+1)`` of a standard graded quotient with ``h(i) = a``.

    Writes ``a = C(k_i, i) + C(k_{i-1}, i-1) + ...`` (the ``i``-binomial
    expansion) and raises every top and bottom index by one.
    """
    if i < 1:
        raise ValueError("degree must be positive")
    out = 0
    j = i
    while a > 0 and j > 0:
        k = j
        while comb(k + 1, j) <= a:
            k += 1
        a -= comb(k, j)
        out += comb(k + 1, j + 1)
        j -= 1
    return out


def is_o_sequence(h: Sequence[int]) -> bool:
    """Whether ``h`` can be the Hilbert function of a standard graded algebra."""
    if not h or h[0] != 1:
        return False
    return all(h[i + 1] <= macaulay_bound(h[i], i) for i in range(1, len(h) - 1)) and all(x >= 0 for x in h)
