"""Direct Gorenstein linkage of powers of the maximal ideal and of monomial
systems of parameters."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import lcm, prod

from .errors import VerificationError
from .field import QQ, Field
from .gorenstein import (
    colength_bounds,
    complete_intersection,
    is_gorenstein,
    trace_ideal,
    witness_ideal,
)
from .ideal import (
    Ideal,
    colon,
    ideal_equal,
    ideal_sum,
    length,
    maximal_ideal,
    power_of_maximal,
)
from .ring import PolyRing, Polynomial


@dataclass
class LinkStep:
    source: Ideal
    gorenstein_link: Ideal
    target: Ideal
    certified_gorenstein: bool
    double_link_contains_source: bool
    terminal_unit: bool


def make_link(c: Ideal, b: Ideal) -> LinkStep:
    """Link ``b`` through the Gorenstein ideal ``c ⊆ b`` to ``(c : b)``."""
    if not c.is_subset_of(b):
        raise ValueError("link ideal is not contained in the source ideal")
    if not is_gorenstein(c):
        raise ValueError("link ideal does not define a Gorenstein quotient")
    target = colon(c, b)
    unit = target.is_unit()
    back = b if unit else colon(c, target)
    return LinkStep(
        source=b,
        gorenstein_link=c,
        target=target,
        certified_gorenstein=True,
        double_link_contains_source=b.is_subset_of(back),
        terminal_unit=unit,
    )


def _power(ring: PolyRing, k: int) -> Ideal:
    if k <= 0:
        return Ideal(ring, [ring.one()])
    return power_of_maximal(ring, k)


def verify_p2(exponents, f: Polynomial, n: int) -> bool:
    """In ``S = T/(x_i^{n_i})`` with socle degree ``t`` and ``deg f = s``, check
    ``((0:f) : m^n) = m^{t+1-s-n} + (0:f)`` on preimages in ``T``."""
    exponents = tuple(exponents)
    ring = f.ring
    if len(exponents) != ring.nvars or not ring.is_standard:
        raise ValueError("exponent tuple must match a standard graded ring")
    t = sum(a - 1 for a in exponents)
    s = f.require_homogeneous()
    if n < 0 or s + n > t + 1:
        raise ValueError(f"need s + n <= t + 1, got s={s}, n={n}, t={t}")
    ci = complete_intersection(ring, exponents)
    if ci.contains(f):
        raise ValueError("f vanishes in the complete intersection quotient")
    c = ci if s == 0 else colon(ci, Ideal(ring, [f]))
    lhs = c if n == 0 else colon(c, power_of_maximal(ring, n))
    rhs = ideal_sum(_power(ring, t + 1 - s - n), c)
    return ideal_equal(lhs, rhs)


def link_threshold(d: int, n: int) -> int:
    """Smallest admissible exponent of the linear form; clamped at 0 for d = 2."""
    return max((d - 2) * (n - 1) - 1, 0)


def power_link_exponent(d: int, n: int, s: int, field: Field = QQ) -> bool:
    """Check ``(W : m^n) = m^{(d-1)(n-1) - s}`` for the witness ``W = (x_i^n) : l^s``."""
    lo = link_threshold(d, n)
    hi = (d - 1) * (n - 1)
    if s < lo:
        raise ValueError(f"s={s} is below the admissible threshold {lo}")
    if s > hi:
        raise ValueError(f"s={s} exceeds (d-1)(n-1)={hi}")
    w = witness_ideal(d, n, s, field)
    ring = w.ideal.ring
    lhs = colon(w.ideal, power_of_maximal(ring, n))
    return ideal_equal(lhs, _power(ring, hi - s))


def chain_to_ci(d: int, n: int, field: Field = QQ) -> list[LinkStep]:
    """Link ``m^n -> m^{n-1} -> ... -> m`` through the closest Gorenstein ideals."""
    steps = []
    for i in range(n, 1, -1):
        w = witness_ideal(d, i, (d - 2) * (i - 1), field)
        step = make_link(w.ideal, power_of_maximal(w.ideal.ring, i))
        if not ideal_equal(step.target, power_of_maximal(w.ideal.ring, i - 1)):
            raise VerificationError(f"link of m^{i} did not land on m^{i - 1}")
        steps.append(step)
    if steps and not ideal_equal(steps[-1].target, maximal_ideal(steps[-1].target.ring)):
        raise VerificationError("chain did not terminate at the maximal ideal")
    return steps


# --- monomial systems of parameters ------------------------------------------


@dataclass
class SopContext:
    """``f_i = x_i^{a_i}``, graded by ``deg x_i = lcm(a) / a_i``."""

    exponents: tuple
    field: Field = QQ
    ring: PolyRing = dc_field(init=False)
    base: PolyRing = dc_field(init=False)

    def __post_init__(self):
        self.exponents = tuple(self.exponents)
        if not self.exponents or any(a < 1 for a in self.exponents):
            raise ValueError("every exponent must be positive (not a system of parameters)")
        L = lcm(*self.exponents)
        d = len(self.exponents)
        self.ring = PolyRing(d, self.field, weights=[L // a for a in self.exponents])
        self.base = PolyRing(d, self.field, names=[f"f{i + 1}" for i in range(d)])

    @property
    def rank_e(self) -> int:
        return prod(self.exponents)

    def images(self) -> list[Polynomial]:
        return [v ** a for v, a in zip(self.ring.gens(), self.exponents)]

    def expand_poly(self, f: Polynomial) -> Polynomial:
        return f.substitute(self.ring, self.images())

    def expand(self, ideal: Ideal) -> Ideal:
        return Ideal(self.ring, [self.expand_poly(g) for g in ideal.generators])

    def parameter_ideal(self) -> Ideal:
        return Ideal(self.ring, self.images())

    def verify_rank(self) -> bool:
        return length(self.parameter_ideal()) == self.rank_e


@dataclass
class SopReport:
    exponents: tuple
    n: int
    s: int
    rank_e: int
    rank_matches: bool
    length_scaling: dict  # k -> (lambda(T/d^k T), e * lambda(T'/d'^k))
    witness_base_change: bool
    trace_is_previous_power: bool
    witness_gorenstein: bool
    witness_contained: bool
    lower: int
    upper: int
    expected_colength: int
    colength_certified: bool
    link_exponent: bool | None

    @property
    def length_scaling_ok(self) -> bool:
        return all(a == b for a, b in self.length_scaling.values())

    @property
    def ok(self) -> bool:
        checks = [self.rank_matches, self.length_scaling_ok, self.witness_base_change,
                  self.trace_is_previous_power]
        if self.link_exponent is not None:
            checks.append(self.link_exponent)
        return all(checks)


def sop_verify(ctx: SopContext, n: int, s: int | None = None) -> SopReport:
    """Base-change checks for ``d = (x_1^{a_1}, ..., x_d^{a_d})`` and its powers."""
    d = len(ctx.exponents)
    if n < 1:
        raise ValueError("n must be positive")
    if s is None:
        s = (d - 2) * (n - 1) if d >= 2 else 0
    T, Tp = ctx.ring, ctx.base
    e = ctx.rank_e

    scaling = {}
    for k in range(1, n + 1):
        scaling[k] = (length(ctx.expand(power_of_maximal(Tp, k))), e * length(power_of_maximal(Tp, k)))

    # witness in T computed directly vs expansion of the witness in T'
    ci_T = Ideal(T, [f ** n for f in ctx.images()])
    l_T = sum(ctx.images(), T.zero())
    w_T = ci_T if s == 0 else colon(ci_T, Ideal(T, [l_T ** s]))
    w_base = witness_ideal(d, n, s, ctx.field)
    base_change = ideal_equal(w_T, ctx.expand(w_base.ideal))

    dn = ctx.expand(power_of_maximal(Tp, n))
    prev = ctx.expand(power_of_maximal(Tp, n - 1)) if n > 1 else Ideal(T, [T.one()])
    trace_ok = ideal_equal(trace_ideal(dn), prev)

    gor = is_gorenstein(w_T)
    contained = w_T.is_subset_of(dn)
    expected = length(prev)
    if gor and contained:
        cb = colength_bounds(dn, w_T)
        lower, upper = cb.lower, cb.upper
    else:
        cb = colength_bounds(dn)
        lower, upper = cb.lower, cb.upper
    certified = lower == upper == expected

    link = None
    if s >= max((d - 2) * (n - 1) - 1, 0) and s <= (d - 1) * (n - 1):
        k = (d - 1) * (n - 1) - s
        target = ctx.expand(power_of_maximal(Tp, k)) if k > 0 else Ideal(T, [T.one()])
        link = ideal_equal(colon(w_T, dn), target)

    return SopReport(
        exponents=ctx.exponents, n=n, s=s, rank_e=e, rank_matches=ctx.verify_rank(),
        length_scaling=scaling, witness_base_change=base_change,
        trace_is_previous_power=trace_ok, witness_gorenstein=gor,
        witness_contained=contained, lower=lower, upper=upper,
        expected_colength=expected, colength_certified=certified, link_exponent=link,
    )
