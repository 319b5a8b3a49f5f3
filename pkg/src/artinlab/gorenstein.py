"""Canonical modules, trace ideals and Gorenstein witnesses.

The canonical module of an Artinian graded ``R = T/I`` is realized as its
inverse system: dual monomials ``X^-a`` annihilated by ``I`` under
contraction. In degree ``j`` this is the annihilator of ``I_j`` in the dual of
``T_j``; we use the basis dual to the standard monomials of ``R_j``, which
makes contraction a table lookup.

``Hom_R(omega, R)`` is graded, so it is solved one homogeneous degree at a
time as an exact linear system of commutation constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .errors import DegenerateWitnessError, TruncationError, VerificationError
from .field import QQ, Field
from .ideal import (
    Ideal,
    QuotientView,
    colon,
    power_of_maximal,
    quotient_view,
    socle_of_view,
)
from .linalg import Span
from .ring import PolyRing


def _as_view(r) -> QuotientView:
    if isinstance(r, QuotientView):
        view = r
    else:
        view = quotient_view(r)
    if view.truncated:
        raise TruncationError("quotient is not certified Artinian within its bound")
    return view


@dataclass
class InverseSystem:
    view: QuotientView
    # dual_basis[j][a]: dual polynomial (T_j monomial index -> coefficient) dual
    # to the a-th standard monomial of R_j
    dual_basis: list

    @property
    def ring(self) -> PolyRing:
        return self.view.ring

    @property
    def dimension(self) -> int:
        return sum(len(b) for b in self.dual_basis)

    def coefficient(self, j: int, a: int, mono) -> object:
        """Coefficient of ``X^-mono`` in the ``a``-th dual basis element of degree ``j``."""
        idx = self.ring.index(j)
        return self.dual_basis[j][a].get(idx[tuple(mono)], 0)

    def contract(self, v: int, j: int, a: int) -> dict[int, object]:
        """``x_v o F_{j,a}`` in the dual basis of degree ``j - w_v``."""
        t = j - self.ring.weights[v]
        if t < 0 or t >= len(self.dual_basis):
            return {}
        out = {}
        for b, s in enumerate(self.view.std_monomials[t]):
            e = list(s)
            e[v] += 1
            x = self.coefficient(j, a, e)
            if x:
                out[b] = x
        return out

    def generators(self) -> list[tuple[int, dict]]:
        """Minimal generators as ``(degree j, coords in dual basis of degree j)``.

        Top-degree dual elements, plus echelon completions of whatever the
        contractions from above do not reach.
        """
        field = self.ring.field
        out = []
        for j in range(len(self.dual_basis) - 1, -1, -1):
            n = len(self.dual_basis[j])
            if n == 0:
                continue
            reached = Span(field, n)
            for v, w in enumerate(self.ring.weights):
                src = j + w
                if src >= len(self.dual_basis):
                    continue
                for a in range(len(self.dual_basis[src])):
                    reached.add(self.contract(v, src, a))
            extra = Span(field, n)
            for a in range(n):
                r = reached.reduce({a: 1})
                if r:
                    extra.add(r)
            for row in extra.echelon_rows():
                out.append((j, row))
        return out


def inverse_system(r) -> InverseSystem:
    view = _as_view(r)
    basis = []
    for j in range(len(view.hilbert)):
        span = view.ideal.slice(j)
        basis.append(span.kernel())
    return InverseSystem(view, basis)


@dataclass
class HomMap:
    """Homogeneous ``phi: omega -> R`` of degree ``degree``.

    ``images[(j, a)]`` is ``phi(F_{j,a})`` in standard coordinates of
    ``R_{degree - j}``.
    """

    degree: int
    images: dict


@dataclass
class HomBasis:
    omega: InverseSystem
    maps: list

    def __len__(self):
        return len(self.maps)

    def verify(self) -> bool:
        """Recheck ``phi(x_v o w) = x_v phi(w)`` on every basis element."""
        om = self.omega
        view = om.view
        ring = view.ring
        p = ring.field.char
        for phi in self.maps:
            for (j, a), img in list(phi.images.items()) + [((j, a), {})
                                                           for j in range(len(om.dual_basis))
                                                           for a in range(len(om.dual_basis[j]))
                                                           if (j, a) not in phi.images]:
                for v, w in enumerate(ring.weights):
                    t = phi.degree - j + w
                    lhs: dict = {}
                    for b, x in om.contract(v, j, a).items():
                        for c, y in phi.images.get((j - w, b), {}).items():
                            lhs[c] = lhs.get(c, 0) + x * y
                    rhs: dict = {}
                    src = phi.degree - j
                    if 0 <= src < len(view.hilbert) and t < len(view.hilbert):
                        mult = view.times_variable(src, v)
                        for b, x in img.items():
                            for c, y in mult[b].items():
                                rhs[c] = rhs.get(c, 0) + x * y
                    diff = {c: lhs.get(c, 0) - rhs.get(c, 0) for c in set(lhs) | set(rhs)}
                    if any((x % p) if p else x for x in diff.values()):
                        return False
        return True


def hom_to_ring(omega: InverseSystem) -> HomBasis:
    view = omega.view
    ring = view.ring
    field = ring.field
    top = len(view.hilbert) - 1
    h = view.hilbert
    maps = []
    for delta in range(0, 2 * top + 1):
        # unknown (j, a, b): coefficient of std monomial b of R_{delta-j} in phi(F_{j,a})
        unknowns: dict[tuple, int] = {}
        for j in range(top + 1):
            t = delta - j
            if 0 <= t <= top:
                for a in range(h[j]):
                    for b in range(h[t]):
                        unknowns[(j, a, b)] = len(unknowns)
        if not unknowns:
            continue
        eqs = Span(field, len(unknowns))
        mult_cache: dict = {}
        for j in range(top + 1):
            src = delta - j
            for a in range(h[j]):
                for v, w in enumerate(ring.weights):
                    t = delta - j + w
                    if t < 0 or t > top:
                        continue
                    rows: dict[int, dict] = {}
                    # phi(x_v o F_{j,a})
                    jj = j - w
                    if jj >= 0:
                        for b2, x in omega.contract(v, j, a).items():
                            for c in range(h[t]):
                                u = unknowns.get((jj, b2, c))
                                if u is not None:
                                    row = rows.setdefault(c, {})
                                    row[u] = row.get(u, 0) + x
                    # - x_v * phi(F_{j,a})
                    if 0 <= src <= top:
                        key = (src, v)
                        if key not in mult_cache:
                            mult_cache[key] = view.times_variable(src, v)
                        for b, img in enumerate(mult_cache[key]):
                            u = unknowns[(j, a, b)]
                            for c, y in img.items():
                                row = rows.setdefault(c, {})
                                row[u] = row.get(u, 0) - y
                    for row in rows.values():
                        clean = {}
                        for u, x in row.items():
                            x = field.normalize(x % field.char if field.char else x)
                            if x:
                                clean[u] = x
                        if clean:
                            eqs.add(clean)
        for vec in eqs.kernel():
            images: dict = {}
            for (j, a, b), u in unknowns.items():
                x = vec.get(u)
                if x:
                    images.setdefault((j, a), {})[b] = x
            maps.append(HomMap(delta, images))
    return HomBasis(omega, maps)


def trace_ideal(r) -> Ideal:
    """``omega*(omega)``, reported as its preimage ideal in ``T`` (contains ``I``)."""
    view = _as_view(r)
    ring = view.ring
    hom = hom_to_ring(inverse_system(view))
    spans: dict[int, Span] = {}
    for phi in hom.maps:
        for (j, a), coords in phi.images.items():
            t = phi.degree - j
            span = spans.setdefault(t, Span(ring.field, view.hilbert[t]))
            span.add(coords)
    gens = list(view.ideal.generators)
    for t in sorted(spans):
        for row in spans[t].echelon_rows():
            gens.append(view.poly(t, row))
    return Ideal(ring, gens, view.ideal.degree_bound).minimized()


def socle_ideal(r) -> Ideal:
    """Preimage of ``soc(R)`` in ``T``, i.e. ``(I : m)``."""
    view = _as_view(r)
    _, basis = socle_of_view(view)
    return Ideal(view.ring, list(view.ideal.generators) + basis,
                 view.ideal.degree_bound).minimized()


def is_gorenstein(r) -> bool:
    view = _as_view(r)
    return socle_of_view(view)[0] == 1


def is_compressed(r) -> bool:
    """Gorenstein with ``h(i) = min(h_T(i), h_T(t - i))`` for ``t`` the socle degree."""
    view = _as_view(r)
    if socle_of_view(view)[0] != 1:
        return False
    t = view.max_degree
    ring = view.ring
    return all(view.h(i) == min(ring.dim(i), ring.dim(t - i)) for i in range(t + 1))


@dataclass
class WitnessResult:
    ideal: Ideal
    complete_intersection: Ideal
    d: int
    n: int
    s: int
    field: Field
    hilbert: tuple
    length: int
    max_degree: int
    expected_max_degree: int
    contained_in_power: bool
    gorenstein: bool


def complete_intersection(ring: PolyRing, exponents) -> Ideal:
    return Ideal(ring, [v ** a for v, a in zip(ring.gens(), exponents)])


def witness_ideal(d: int, n: int, s: int, field: Field = QQ) -> WitnessResult:
    """``C = (x_1^n, ..., x_d^n) : l^s`` with ``l = x_1 + ... + x_d``, plus diagnostics."""
    if d < 1 or n < 1 or s < 0:
        raise ValueError("need d >= 1, n >= 1, s >= 0")
    ring = PolyRing(d, field)
    ci = complete_intersection(ring, [n] * d)
    ls = ring.linear_sum() ** s
    if ci.contains(ls):
        raise DegenerateWitnessError(f"l^{s} already lies in the complete intersection")
    c = ci if s == 0 else colon(ci, Ideal(ring, [ls]))
    view = quotient_view(c)
    below = all(c.rank(i) == 0 for i in range(n))
    return WitnessResult(
        ideal=c,
        complete_intersection=ci,
        d=d, n=n, s=s, field=field,
        hilbert=view.hilbert,
        length=view.length,
        max_degree=view.max_degree,
        expected_max_degree=d * (n - 1) - s,
        contained_in_power=below,
        gorenstein=socle_of_view(view)[0] == 1,
    )


@dataclass
class RRRResult:
    exponents: tuple
    m: int
    t: int
    min_degree: int
    bound: int
    degenerate: bool
    holds: bool


def rrr_min_degree(exponents, m: int, field: Field = QQ) -> RRRResult:
    """Smallest degree of a nonzero form killed by ``l^m`` in ``k[x]/(x_i^{n_i})``.

    Over characteristic zero the lower bound ``ceil((t - m + 1)/2)`` must hold
    and a violation raises :class:`VerificationError`.
    """
    exponents = tuple(exponents)
    if m < 1 or any(a < 1 for a in exponents):
        raise ValueError("need m >= 1 and positive exponents")
    d = len(exponents)
    t = sum(a - 1 for a in exponents)
    bound = ceil((t - m + 1) / 2)
    ring = PolyRing(d, field)
    ci = complete_intersection(ring, exponents)
    lm = ring.linear_sum() ** m
    if ci.contains(lm):
        return RRRResult(exponents, m, t, 0, bound, True, bound <= 0)
    ann = colon(ci, Ideal(ring, [lm]))
    min_deg = next(i for i in range(t + 1) if ann.rank(i) > ci.rank(i))
    holds = min_deg >= bound
    if field.char == 0 and not holds:
        raise VerificationError(
            f"annihilated form of degree {min_deg} below bound {bound} for {exponents}, m={m}")
    return RRRResult(exponents, m, t, min_deg, bound, False, holds)


@dataclass
class ColengthBounds:
    lower: int
    upper: int
    certified: bool
    length: int
    trace: Ideal
    witness_used: bool


def colength_bounds(r, witness: Ideal | None = None) -> ColengthBounds:
    """Lower bound ``lambda(R / omega*(omega))`` and an upper bound on the
    Gorenstein colength, from a witness ``T/W ->> R`` when supplied."""
    view = _as_view(r)
    tr = trace_ideal(view)
    lower = quotient_view(tr).length
    if witness is None:
        upper = view.length
    else:
        if witness.ring != view.ring:
            raise ValueError("witness lives in a different ring")
        if not witness.is_subset_of(view.ideal):
            raise ValueError("witness is not contained in the defining ideal")
        if not is_gorenstein(witness):
            raise ValueError("witness quotient is not Gorenstein")
        upper = quotient_view(witness).length - view.length
    return ColengthBounds(lower, upper, lower == upper, view.length, tr, witness is not None)


def max_power_quotient(ring: PolyRing, n: int) -> QuotientView:
    return quotient_view(power_of_maximal(ring, n))
