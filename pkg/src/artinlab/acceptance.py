"""The acceptance suite: one function per criterion, shared by the
``verify-all`` command and the test suite.

Each function returns a :class:`CriterionResult`. Failures are recorded as
``"<anchor>: <case>"`` strings, where the anchor names the identity that broke.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .codim2 import (
    RETRY_BUDGET,
    MonomialIdeal2,
    corpus,
    integral_closure,
    minimal_reduction,
    multiplicity,
    random_primary_ideal,
    theorem_t_report,
)
from .errors import ArtinlabError, ReductionError, VerificationError
from .field import GF, QQ
from .gorenstein import (
    colength_bounds,
    is_compressed,
    is_gorenstein,
    rrr_min_degree,
    socle_ideal,
    trace_ideal,
    witness_ideal,
)
from .ideal import (
    Ideal,
    colon,
    ideal_equal,
    ideal_product,
    is_o_sequence,
    length,
    monomial_ideal,
    power_of_maximal,
    quotient_view,
)
from .linalg import DenseMatrix, kernel_basis, rank
from .linkage import (
    SopContext,
    chain_to_ci,
    link_threshold,
    power_link_exponent,
    sop_verify,
    verify_p2,
)
from .ring import PolyRing


@dataclass
class CriterionResult:
    number: int
    title: str
    checked: int = 0
    failures: list = dc_field(default_factory=list)
    details: dict = dc_field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.failures

    def check(self, ok: bool, anchor: str, case) -> bool:
        self.checked += 1
        if not ok:
            self.failures.append(f"{anchor}: {case}")
        return ok

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"[{status}] criterion {self.number}: {self.title} ({self.checked} checks"
        if self.failures:
            text += f", {len(self.failures)} failed"
        return text + ")"

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "number": self.number,
            "title": self.title,
            "passed": self.passed,
            "checked": self.checked,
            "failures": list(self.failures),
            "details": self.details,
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def _timed(fn):
    def run(*args, **kwargs) -> CriterionResult:
        start = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - start
        budget = res.details.get("runtime_budget_s")
        if budget is not None:
            res.check(res.seconds < budget, "runtime-within-budget", f"{res.seconds:.1f}s < {budget}s")
        return res

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


# --- 1: Gorenstein colength of T/m^n -----------------------------------------

MAX_POWER_GRID = ((2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (3, 3), (3, 4), (4, 2), (4, 3))


@_timed
def criterion_1() -> CriterionResult:
    """The power witness is Gorenstein inside ``m^n`` with the exact length
    identity, and the trace ideal of ``T/m^n`` is its socle, so the two bounds
    on the Gorenstein colength meet."""
    res = CriterionResult(1, "Gorenstein colength of T/m^n over QQ")
    res.details["runtime_budget_s"] = 60
    rows = {}
    for d, n in MAX_POWER_GRID:
        case = f"d={d} n={n}"
        w = witness_ideal(d, n, (d - 2) * (n - 1), QQ)
        ring = w.ideal.ring
        mn = power_of_maximal(ring, n)
        prev = length(power_of_maximal(ring, n - 1))
        r_len = length(mn)
        res.check(w.gorenstein, "witness-is-gorenstein", case)
        res.check(w.contained_in_power and w.ideal.is_subset_of(mn), "witness-inside-power", case)
        res.check(w.length - r_len == prev, "witness-length-identity", case)
        res.check(w.max_degree == 2 * (n - 1), "witness-socle-degree", case)
        tr = trace_ideal(mn)
        res.check(ideal_equal(tr, socle_ideal(mn)), "trace-equals-socle", case)
        res.check(ideal_equal(tr, power_of_maximal(ring, n - 1)), "trace-is-previous-power", case)
        cb = colength_bounds(mn, w.ideal)
        res.check(cb.certified and cb.lower == prev, "colength-certified", case)
        rows[case] = {"hilbert": list(w.hilbert), "lower": cb.lower, "upper": cb.upper}
    res.details["cases"] = rows
    return res


# --- 2: the characteristic 2 example ------------------------------------------

CHAR2_EXPECTED = (1, 2, 5, 2, 1)


@_timed
def criterion_2() -> CriterionResult:
    """Exact match of the Hilbert function of the d = n = 3 witness quotient over GF(2)
    against the target sequence (1,2,5,2,1)."""
    res = CriterionResult(2, "char-2 witness Hilbert function for d = n = 3 equals (1,2,5,2,1)")
    w = witness_ideal(3, 3, 2, GF(2))
    res.details.update({
        "observed": list(w.hilbert),
        "expected": list(CHAR2_EXPECTED),
        "observed_is_o_sequence": is_o_sequence(w.hilbert),
        "expected_is_o_sequence": is_o_sequence(CHAR2_EXPECTED),
        "witness_inside_m3": w.contained_in_power,
        "witness_gorenstein": w.gorenstein,
    })
    res.check(tuple(w.hilbert) == CHAR2_EXPECTED, "char-2-hilbert-function", f"observed {w.hilbert}")
    return res


# --- 3: compressed algebras ---------------------------------------------------


@_timed
def criterion_3() -> CriterionResult:
    res = CriterionResult(3, "compressed Gorenstein witnesses")
    for d, n in ((3, 2), (3, 3), (4, 2)):
        s = (d - 2) * (n - 1)
        for exp, top in ((s, 2 * n - 2), (s - 1, 2 * n - 1)):
            w = witness_ideal(d, n, exp, QQ)
            case = f"d={d} n={n} s={exp}"
            res.check(is_compressed(w.ideal), "witness-is-compressed", case)
            res.check(w.max_degree == top, "compressed-socle-degree", f"{case} top={w.max_degree}")
    return res


# --- 4: the annihilator degree bound ------------------------------------------


def rrr_grid(max_vars: int = 3, max_exp: int = 4):
    """Exponent tuples up to permutation (the linear form is symmetric) and ``m``."""
    for d in range(1, max_vars + 1):
        for ns in itertools.combinations_with_replacement(range(1, max_exp + 1), d):
            t = sum(a - 1 for a in ns)
            for m in range(1, t + 1):
                yield ns, m


@_timed
def criterion_4() -> CriterionResult:
    res = CriterionResult(4, "annihilator degree bound over QQ, violated over GF(2)")
    violations = []
    for ns, m in rrr_grid():
        case = f"n={ns} m={m}"
        try:
            r = rrr_min_degree(ns, m, QQ)
            res.check(r.holds and not r.degenerate, "annihilator-degree-bound", case)
        except VerificationError as exc:
            res.check(False, "annihilator-degree-bound", f"{case} {exc}")
        r2 = rrr_min_degree(ns, m, GF(2))
        if not r2.holds:
            violations.append(f"{case} min_degree={r2.min_degree} bound={r2.bound}")
    res.check(bool(violations), "char-2-violation-found", "no violation over GF(2)")
    example = rrr_min_degree((3, 3, 3), 2, GF(2))
    res.details["char2_example"] = {"n": [3, 3, 3], "m": 2, "min_degree": example.min_degree,
                                    "bound": example.bound}
    res.details["char2_violations"] = len(violations)
    res.details["first_char2_violation"] = violations[0] if violations else None
    return res


# --- 5: linkage ---------------------------------------------------------------

P2_EXPONENTS = ((2, 2), (3, 3), (2, 4), (2, 2, 2), (2, 2, 3), (3, 3, 3))


def p2_grid():
    """``(exponents, s, n)`` with ``f = l^s`` nonzero in the quotient and ``s + n <= t + 1``."""
    for ns in P2_EXPONENTS:
        t = sum(a - 1 for a in ns)
        for s in range(t + 1):
            for n in range(0, t + 2 - s):
                yield ns, s, n


@_timed
def criterion_5() -> CriterionResult:
    res = CriterionResult(5, "linkage identities for powers")
    for ns, s, n in p2_grid():
        ring = PolyRing(len(ns), QQ)
        res.check(verify_p2(ns, ring.linear_sum() ** s, n), "colon-by-power-in-gorenstein-quotient",
                  f"n={ns} s={s} power={n}")
    for d in (3, 4):
        for n in (2, 3):
            for s in range(link_threshold(d, n), (d - 1) * (n - 1) + 1):
                res.check(power_link_exponent(d, n, s), "power-link-exponent", f"d={d} n={n} s={s}")
    for d, n in ((3, 2), (3, 3), (4, 2)):
        s = (d - 2) * (n - 1) - 1
        w = witness_ideal(d, n, s)
        mn = power_of_maximal(w.ideal.ring, n)
        res.check(ideal_equal(colon(w.ideal, mn), mn), "self-link", f"d={d} n={n} s={s}")
    for d, n in ((3, 3), (2, 4)):
        try:
            steps = chain_to_ci(d, n)
            ok = len(steps) == n - 1 and all(
                st.certified_gorenstein and st.double_link_contains_source for st in steps)
        except ArtinlabError as exc:
            ok = False
            steps = exc
        res.check(ok, "chain-to-complete-intersection", f"d={d} n={n}")
    return res


# --- 6: systems of parameters ---------------------------------------------------

SOP_CASES = ((2, 2), (1, 2), (2, 2, 2), (1, 1, 2))


@_timed
def criterion_6() -> CriterionResult:
    res = CriterionResult(6, "monomial systems of parameters")
    for a in SOP_CASES:
        ctx = SopContext(a)
        for n in (2, 3):
            rep = sop_verify(ctx, n)
            case = f"a={a} n={n}"
            res.check(rep.rank_matches, "parameter-ideal-colength", case)
            res.check(rep.length_scaling_ok, "length-scaling", case)
            res.check(rep.witness_base_change, "witness-base-change", case)
            res.check(rep.trace_is_previous_power, "sop-trace-is-previous-power", case)
            res.check(rep.colength_certified, "sop-colength-certified", case)
    return res


# --- 7 and 8: the two-variable corpus -------------------------------------------


@lru_cache(maxsize=None)
def _corpus_runs(seed: int = 2008, size: int = 200):
    out = []
    for k, ideal in enumerate(corpus(seed, size)):
        try:
            red = minimal_reduction(ideal, seed=k)
        except ReductionError as exc:
            red = exc
        out.append((ideal, red))
    return tuple(out)


@_timed
def criterion_7() -> CriterionResult:
    res = CriterionResult(7, "codim-2 oracle equivalences and inequalities on the corpus")
    res.details["runtime_budget_s"] = 120
    single = 0
    for ideal, red in _corpus_runs():
        rep = theorem_t_report(ideal, red if not isinstance(red, Exception) else None)
        for anchor, ok in rep.checks.items():
            res.check(ok, anchor, str(ideal))
        tight = rep.multiplicity + rep.closure_order == 2 * rep.closure_colength
        res.check(tight == rep.single_base_point, "order-bound-equality-iff-single-point", str(ideal))
        single += rep.single_base_point
    res.details["single_base_point_ideals"] = single
    return res


@_timed
def criterion_8() -> CriterionResult:
    res = CriterionResult(8, "minimal reductions on the corpus")
    runs = _corpus_runs()
    ok = 0
    attempts = 0
    for ideal, red in runs:
        if isinstance(red, Exception):
            continue
        ok += 1
        attempts += red.attempts
        res.check(red.colength == multiplicity(ideal), "reduction-colength-is-multiplicity", str(ideal))
    rate = ok / len(runs)
    res.check(rate >= 0.99, "reduction-success-rate", f"{ok}/{len(runs)}")
    res.details.update({"succeeded": ok, "total": len(runs), "retry_budget": RETRY_BUDGET,
                        "attempts_used": attempts})
    return res


# --- 9: property checks -----------------------------------------------------------


def _random_matrix(rng: random.Random, field):
    nrows, ncols = rng.randint(0, 6), rng.randint(1, 6)
    rows = [[field(rng.randint(-3, 3)) for _ in range(ncols)] for _ in range(nrows)]
    if nrows > 1 and rng.random() < 0.5:
        rows[-1] = [a + b for a, b in zip(rows[0], rows[1])]
    return DenseMatrix.from_rows(field, rows, ncols)


def _random_monomial_ideal(rng: random.Random, nvars: int, top: int) -> Ideal:
    ring = PolyRing(nvars, QQ)
    exps = []
    for v in range(nvars):
        e = [0] * nvars
        e[v] = rng.randint(1, top)
        exps.append(e)
    for _ in range(rng.randint(0, 3)):
        exps.append([rng.randint(0, top - 1) for _ in range(nvars)])
    exps = [e for e in exps if any(e)]
    return monomial_ideal(ring, exps)


def _random_small_ideal(rng: random.Random) -> Ideal:
    """Random Artinian ideal: a monomial ideal plus one or two binomial forms."""
    base = _random_monomial_ideal(rng, rng.choice((2, 3)), 3)
    ring = base.ring
    gens = list(base.generators)
    for _ in range(rng.randint(0, 2)):
        deg = rng.randint(1, 3)
        monos = ring.monomials(deg)
        a, b = rng.sample(monos, 2) if len(monos) > 1 else (monos[0], monos[0])
        gens.append(ring.poly({a: 1, b: rng.choice((-1, 1, 2))}))
    return Ideal(ring, gens)


@_timed
def criterion_9(seed: int = 9, samples: int = 40) -> CriterionResult:
    res = CriterionResult(9, "exact property suite")
    rng = random.Random(seed)
    for k in range(samples):
        for field in (QQ, GF(5)):
            m = _random_matrix(rng, field)
            ker = kernel_basis(m)
            res.check(rank(m) + len(ker) == m.ncols, "rank-nullity", k)
            res.check(all(not any(m.mul_vector(v)) for v in ker), "kernel-annihilated", k)
            perm = list(range(m.nrows))
            rng.shuffle(perm)
            pm = m.permuted(perm)
            res.check(rank(pm) == rank(m) and kernel_basis(pm) == ker, "row-permutation-invariance", k)
    gor = 0
    for k in range(samples):
        ideal = _random_small_ideal(rng)
        view = quotient_view(ideal)
        g = is_gorenstein(view)
        gor += g
        if g:
            h = view.hilbert
            res.check(tuple(h) == tuple(reversed(h)), "gorenstein-hilbert-symmetry", str(ideal))
        res.check(trace_ideal(view).is_unit() == g, "trace-unit-iff-gorenstein", str(ideal))
    res.details["gorenstein_samples"] = gor
    for k in range(samples):
        nv = rng.choice((2, 3))
        i = _random_monomial_ideal(rng, nv, 4)
        ring = i.ring
        j = monomial_ideal(ring, [[rng.randint(0, 2) for _ in range(nv)] for _ in range(2)])
        kk = monomial_ideal(ring, [[rng.randint(0, 2) for _ in range(nv)] for _ in range(2)])
        if j.is_unit() or kk.is_unit():
            continue
        ij = colon(i, j)
        res.check(i.is_subset_of(ij), "colon-monotone", f"{i} : {j}")
        res.check(ideal_equal(colon(ij, kk), colon(i, ideal_product(j, kk))), "colon-associative",
                  f"({i} : {j}) : {kk}")
    for k in range(samples):
        a = random_primary_ideal(rng, box=6)
        b = random_primary_ideal(rng, box=6)
        ca = integral_closure(a)
        res.check(integral_closure(ca) == ca, "closure-idempotent", str(a))
        res.check(integral_closure(a * b) == ca * integral_closure(b), "closure-multiplicative",
                  f"{a} * {b}")
    return res


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9)


def run_all(only: list[int] | None = None) -> list[CriterionResult]:
    return [fn() for k, fn in enumerate(CRITERIA, start=1) if only is None or k in only]
