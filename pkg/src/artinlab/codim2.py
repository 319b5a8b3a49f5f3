"""Monomial ideals in two variables: Newton polygons, integral closure,
base points, multiplicity, colength and minimal reductions.

A monomial ideal is stored by its minimal exponent pairs ``(a, b)`` for
``x^a y^b``, sorted by ``a`` ascending (so ``b`` strictly descending).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb
from typing import Iterable

from .errors import NotPrimaryError, ReductionError, VerificationError
from .field import QQ, Field
from .linalg import Span, bulk_rank
from .ring import PolyRing, Polynomial

Point = tuple  # (a, b)


def _minimal(points: Iterable[Point]) -> tuple:
    pts = sorted(set((int(a), int(b)) for a, b in points))
    out = []
    best_b = None
    for a, b in pts:
        if a < 0 or b < 0:
            raise ValueError(f"negative exponent in {(a, b)}")
        if best_b is None or b < best_b:
            out.append((a, b))
            best_b = b
    return tuple(out)


@dataclass(frozen=True)
class MonomialIdeal2:
    generators: tuple

    def __init__(self, points: Iterable[Point]):
        object.__setattr__(self, "generators", _minimal(points))

    @property
    def is_primary(self) -> bool:
        g = self.generators
        return bool(g) and g[0][0] == 0 and g[-1][1] == 0

    def require_primary(self) -> None:
        if not self.is_primary:
            raise NotPrimaryError(f"{self} is not primary to (x, y)")

    def contains(self, p: Point) -> bool:
        return any(a <= p[0] and b <= p[1] for a, b in self.generators)

    def is_unit(self) -> bool:
        return (0, 0) in self.generators

    def __mul__(self, other: "MonomialIdeal2") -> "MonomialIdeal2":
        return MonomialIdeal2((a + c, b + d) for a, b in self.generators for c, d in other.generators)

    def __add__(self, other: "MonomialIdeal2") -> "MonomialIdeal2":
        return MonomialIdeal2(self.generators + other.generators)

    def __pow__(self, n: int) -> "MonomialIdeal2":
        out = MonomialIdeal2([(0, 0)])
        for _ in range(n):
            out = out * self
        return out

    def standard_monomials(self) -> list[Point]:
        """Lattice points outside the ideal (finite for primary ideals)."""
        self.require_primary()
        g = self.generators
        out = []
        for a in range(g[-1][0]):
            # smallest b over generators with generator a <= this a
            cap = min(b for ga, b in g if ga <= a)
            out.extend((a, b) for b in range(cap))
        return out

    def colength(self) -> int:
        self.require_primary()
        g = self.generators
        total = 0
        for i, (a, b) in enumerate(g[:-1]):
            total += (g[i + 1][0] - a) * b
        return total

    def to_text(self) -> str:
        return ", ".join(_mono_text(a, b) for a, b in reversed(self.generators))

    def __str__(self):
        return "(" + self.to_text() + ")"


def _mono_text(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("x" if a == 1 else f"x^{a}")
    if b:
        parts.append("y" if b == 1 else f"y^{b}")
    return "*".join(parts) or "1"


def maximal_power(n: int) -> MonomialIdeal2:
    return MonomialIdeal2((a, n - a) for a in range(n + 1))


# --- Newton polygon and closure -------------------------------------------


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: tuple  # from the x-axis point to the y-axis point
    complement_area: Fraction

    def edges(self) -> list[tuple[Point, Point]]:
        return list(zip(self.vertices[1:], self.vertices[:-1]))


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(ideal: MonomialIdeal2) -> NewtonPolygon:
    """Lower convex boundary; generators lying on an edge are kept as vertices."""
    ideal.require_primary()
    hull: list[Point] = []
    for p in ideal.generators:  # a ascending
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], p) < 0:
            hull.pop()
        hull.append(p)
    # area below the chain (0,b0) -> ... -> (a_max, 0), by the trapezoid rule
    area = Fraction(0)
    for (a1, b1), (a2, b2) in zip(hull, hull[1:]):
        area += Fraction((a2 - a1) * (b1 + b2), 2)
    return NewtonPolygon(tuple(reversed(hull)), area)


def _in_polyhedron(poly: NewtonPolygon, u: int, v: int) -> bool:
    for (a1, b1), (a2, b2) in poly.edges():  # a1 < a2, b1 > b2
        n1, n2 = b1 - b2, a2 - a1
        if n1 * u + n2 * v < n1 * a1 + n2 * b1:
            return False
    return True


def integral_closure(ideal: MonomialIdeal2) -> MonomialIdeal2:
    poly = newton_polygon(ideal)
    a_max = ideal.generators[-1][0]
    b_max = ideal.generators[0][1]
    pts = [(u, v) for u in range(a_max + 1) for v in range(b_max + 1)
           if _in_polyhedron(poly, u, v)]
    return MonomialIdeal2(pts)


@dataclass(frozen=True)
class Invariants:
    order: int
    mu: int
    colength: int
    closure_colength: int
    closed: bool


def order(ideal: MonomialIdeal2) -> int:
    return min(a + b for a, b in ideal.generators)


def invariants(ideal: MonomialIdeal2) -> Invariants:
    ideal.require_primary()
    closure = integral_closure(ideal)
    o = order(ideal)
    if order(closure) != o:
        raise VerificationError(f"order changed under closure for {ideal}")
    closed = closure == ideal
    mu = len(ideal.generators)
    if closed and mu - 1 != o:
        raise VerificationError(f"integrally closed {ideal} has mu - 1 != ord")
    return Invariants(o, mu, ideal.colength(), closure.colength(), closed)


def socle_dimension(ideal: MonomialIdeal2) -> int:
    """Standard monomials ``m`` with ``x m`` and ``y m`` both in the ideal."""
    return sum(1 for a, b in ideal.standard_monomials()
               if ideal.contains((a + 1, b)) and ideal.contains((a, b + 1)))


# --- base points -------------------------------------------------------------


@dataclass
class BasePointTree:
    orders: tuple  # one per base point, in depth-first order
    trace: list = dc_field(default_factory=list)  # (chart path, order)

    @property
    def root_order(self) -> int:
        return self.orders[0]


def _transform(points: tuple, chart: str, o: int) -> MonomialIdeal2:
    if chart == "x":
        pts = [(a + b - o, b) for a, b in points]
    else:
        pts = [(a, a + b - o) for a, b in points]
    ga = min(a for a, _ in pts)
    gb = min(b for _, b in pts)
    return MonomialIdeal2((a - ga, b - gb) for a, b in pts)


def base_point_tree(ideal: MonomialIdeal2, max_depth: int = 10_000) -> BasePointTree:
    """Orders of the transforms at the infinitely near torus-fixed base points.

    Chart ``x`` substitutes ``y -> x y``, chart ``y`` substitutes ``x -> x y``;
    each transform is divided by the gcd of its generators.
    """
    ideal.require_primary()
    orders = []
    trace = []
    stack = [(ideal, "")]
    while stack:
        node, path = stack.pop()
        if len(path) > max_depth:
            raise VerificationError(f"base point recursion exceeded depth {max_depth}")
        o = order(node)
        if o == 0:
            continue
        orders.append(o)
        trace.append((path, o))
        for chart in ("y", "x"):
            child = _transform(node.generators, chart, o)
            if not child.is_unit():
                child.require_primary()
                stack.append((child, path + chart))
    return BasePointTree(tuple(orders), trace)


def hd_length(ideal: MonomialIdeal2) -> int:
    return sum(comb(o + 1, 2) for o in base_point_tree(ideal).orders)


def multiplicity(ideal: MonomialIdeal2) -> int:
    return sum(o * o for o in base_point_tree(ideal).orders)


# --- minimal reductions ----------------------------------------------------

COEFF_RANGE = (1, 2 ** 16)
RETRY_BUDGET = 8


@dataclass
class Reduction:
    f: Polynomial
    g: Polynomial
    r: int
    truncation_degree: int  # smallest M with m^M inside (f, g) I^r
    colength: int  # lambda(T/(f, g))
    loewy_length: int  # smallest L with m^L inside (f, g)
    attempts: int


def _poly(ring: PolyRing, coeffs, points) -> Polynomial:
    return ring.poly({(a, b): c for c, (a, b) in zip(coeffs, points)})


def reduction_number(ideal: MonomialIdeal2, f: Polynomial, g: Polynomial, r_max: int) -> int | None:
    """Least ``r <= r_max`` with ``I^{r+1} = (f, g) I^r`` in the local ring, else None.

    ``(f, g) I^r`` lies in ``I^{r+1}``; equality follows by Nakayama once its
    image spans ``I^{r+1} / m I^{r+1}``, whose basis is the minimal monomial
    generators of ``I^{r+1}``.
    """
    field = f.ring.field
    power = MonomialIdeal2([(0, 0)])
    for r in range(r_max + 1):
        nxt = power * ideal
        cols = {p: i for i, p in enumerate(nxt.generators)}
        span = Span(field, len(cols))
        for u in power.generators:
            for h in (f, g):
                row = {}
                for (a, b), c in h.terms.items():
                    k = cols.get((a + u[0], b + u[1]))
                    if k is not None:
                        row[k] = c
                span.add(row)
        if span.is_full:
            return r
        power = nxt
    return None


def _rows(ambient: MonomialIdeal2, f: Polynomial, g: Polynomial) -> tuple[dict, list]:
    """Columns and the rows ``m f, m g`` of ``(f, g)`` inside ``T/ambient``."""
    cols = {p: i for i, p in enumerate(ambient.standard_monomials())}
    rows = []
    for (ma, mb) in cols:
        for h in (f, g):
            row = {}
            for (a, b), c in h.terms.items():
                k = cols.get((a + ma, b + mb))
                if k is not None:
                    row[k] = c
            rows.append(row)
    return cols, rows


def _colength_if_inside(part: MonomialIdeal2, f: Polynomial, g: Polynomial) -> int | None:
    """``lambda(T/(f, g))`` if ``part`` lies in ``(f, g)``, else None.

    Works in ``T/m part``: by Nakayama ``part`` lies in ``(f, g)`` as soon as
    it lies in ``(f, g) + m part``, and then ``T/(f, g) = T/((f, g) + m part)``.
    """
    field = f.ring.field
    ambient = maximal_power(1) * part
    cols, rows = _rows(ambient, f, g)
    base = bulk_rank(field, rows, len(cols))
    extra = [{cols[p]: 1} for p in part.generators if p in cols]
    if bulk_rank(field, rows + extra, len(cols)) != base:
        return None
    return len(cols) - base


def local_colength(ideal_in: MonomialIdeal2, f: Polynomial, g: Polynomial) -> tuple[int, int]:
    """``(lambda(T/(f, g)), L)`` with ``L`` least such that ``m^L`` lies in ``(f, g)``.

    ``ideal_in`` is a monomial ideal already known to lie in ``(f, g)``; it
    bounds the search and is added to every candidate ``m^L``.
    """
    seen: dict[int, int | None] = {}

    def probe(deg: int) -> int | None:
        if deg not in seen:
            seen[deg] = _colength_if_inside(maximal_power(deg) + ideal_in, f, g)
        return seen[deg]

    hi = _truncation_degree(ideal_in)
    lo = 0  # m^lo is not inside (f, g) unless lo == hi
    step = 1
    while lo + step < hi:
        if probe(lo + step) is not None:
            hi = lo + step
            break
        lo += step
        step *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if probe(mid) is not None:
            hi = mid
        else:
            lo = mid
    lam = probe(hi)
    if lam is None:
        raise VerificationError(f"{ideal_in} is not inside ({f}, {g})")
    return lam, hi


def _truncation_degree(ideal: MonomialIdeal2) -> int:
    """Smallest ``M`` with every monomial of degree ``M`` in the ideal."""
    M = 0
    while not all(ideal.contains((a, M - a)) for a in range(M + 1)):
        M += 1
    return M


def verify_reduction(ideal: MonomialIdeal2, f: Polynomial, g: Polynomial,
                     r_max: int | None = None) -> tuple[int, int, int, int] | None:
    """Return ``(r, M, lambda(T/(f, g)), L)`` if ``(f, g)`` is a reduction, else None.

    ``M`` is the least degree with ``m^M`` inside ``I^{r+1} = (f, g) I^r`` and
    ``L`` the least with ``m^L`` inside ``(f, g)``.
    """
    if r_max is None:
        r_max = max(multiplicity(ideal), 1)
    r = reduction_number(ideal, f, g, r_max)
    if r is None:
        return None
    big = ideal ** (r + 1)
    lam, loewy = local_colength(big, f, g)
    return r, _truncation_degree(big), lam, loewy


def minimal_reduction(ideal: MonomialIdeal2, seed: int = 0, field: Field = QQ,
                      retries: int = RETRY_BUDGET) -> Reduction:
    """Seeded random two-generated reduction, verified exactly.

    Accepted only when ``I^{r+1} = (f, g) I^r`` and ``lambda(T/(f, g)) = e(I)``.
    """
    ideal.require_primary()
    ring = PolyRing(2, field)
    rng = random.Random(seed)
    e = multiplicity(ideal)
    gens = ideal.generators
    failures = []
    for attempt in range(1, retries + 1):
        a = [rng.randint(*COEFF_RANGE) for _ in gens]
        b = [rng.randint(*COEFF_RANGE) for _ in gens]
        f = _poly(ring, a, gens)
        g = _poly(ring, b, gens)
        res = verify_reduction(ideal, f, g)
        if res is None:
            failures.append("I^{r+1} not inside (f,g) I^r")
            continue
        r, M, lam, loewy = res
        if lam != e:
            failures.append(f"lambda(T/(f,g)) = {lam} != e = {e}")
            continue
        return Reduction(f, g, r, M, lam, loewy, attempt)
    raise ReductionError(f"no verified reduction of {ideal} after {retries} attempts: "
                         + "; ".join(failures))


# --- the inequalities --------------------------------------------------------


@dataclass
class TheoremTReport:
    ideal: MonomialIdeal2
    multiplicity: int
    order: int
    mu: int
    colength: int
    closure_colength: int
    closure_order: int
    socle_dimension: int
    hd_length: int
    twice_area: Fraction
    single_base_point: bool
    gorenstein_colength: int  # lambda(S) - lambda(R) for S = T/(minimal reduction)
    colength_bound: int  # lambda(R/soc R)
    checks: dict

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def theorem_t_report(ideal: MonomialIdeal2, reduction: Reduction | None = None) -> TheoremTReport:
    ideal.require_primary()
    closure = integral_closure(ideal)
    tree = base_point_tree(ideal)
    e = sum(o * o for o in tree.orders)
    hd = sum(comb(o + 1, 2) for o in tree.orders)
    inv = invariants(ideal)
    lam = inv.colength
    lam_c = inv.closure_colength
    soc = socle_dimension(ideal)
    area2 = 2 * newton_polygon(ideal).complement_area
    s_len = reduction.colength if reduction is not None else e
    checks = {
        "hd-length-equals-closure-colength": hd == lam_c,
        "multiplicity-equals-twice-area": e == area2,
        "socle-dimension-is-mu-minus-one": soc == inv.mu - 1,
        "closed-mu-minus-one-is-order": len(closure.generators) - 1 == order(closure),
        "order-preserved-by-closure": order(closure) == inv.order,
        "mu-at-most-closure-mu": inv.mu <= len(closure.generators),
        "e0-plus-order-bound": e + order(closure) <= 2 * lam_c,
        "e0-plus-mu-bound": e + inv.mu - 1 <= 2 * lam,
        "colength-at-most-r-mod-socle": s_len - lam <= lam - soc,
    }
    return TheoremTReport(
        ideal=ideal, multiplicity=e, order=inv.order, mu=inv.mu, colength=lam,
        closure_colength=lam_c, closure_order=order(closure), socle_dimension=soc,
        hd_length=hd, twice_area=area2, single_base_point=len(tree.orders) == 1,
        gorenstein_colength=s_len - lam, colength_bound=lam - soc, checks=checks,
    )


def random_primary_ideal(rng: random.Random, box: int = 12, extra: int | None = None) -> MonomialIdeal2:
    """Random proper primary monomial ideal with all exponents in ``[0, box]``."""
    a = rng.randint(1, box)
    b = rng.randint(1, box)
    k = rng.randint(0, 6) if extra is None else extra
    pts = [(a, 0), (0, b)]
    while len(pts) < k + 2:
        p = (rng.randint(0, box), rng.randint(0, box))
        if p != (0, 0):
            pts.append(p)
    return MonomialIdeal2(pts)


def corpus(seed: int = 2008, size: int = 200, box: int = 12) -> list[MonomialIdeal2]:
    rng = random.Random(seed)
    return [random_primary_ideal(rng, box) for _ in range(size)]
