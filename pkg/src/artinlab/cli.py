"""Command line front end (``artinlab``).

Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import shlex
import sys
import time

from . import acceptance
from .codim2 import (
    MonomialIdeal2,
    base_point_tree,
    hd_length,
    integral_closure,
    invariants,
    minimal_reduction,
    multiplicity,
    newton_polygon,
    theorem_t_report,
)
from .errors import ArtinlabError, DegenerateWitnessError, ParseError, VerificationError
from .field import QQ, parse_field
from .gorenstein import (
    colength_bounds,
    is_gorenstein,
    rrr_min_degree,
    socle_ideal,
    trace_ideal,
    witness_ideal,
)
from .ideal import Ideal, colon, ideal_equal, length, power_of_maximal, quotient_view
from .linkage import (
    SopContext,
    chain_to_ci,
    link_threshold,
    make_link,
    sop_verify,
)
from .parse import infer_nvars, parse_ideal, parse_polynomials
from .report import Report
from .ring import PolyRing


class UsageError(Exception):
    pass


def _gens(ideal: Ideal) -> list[str]:
    return [str(g) for g in ideal.mingens()]


def _int_list(text: str) -> list[int]:
    try:
        out = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected a comma separated list of integers, got {text!r}")
    if not out:
        raise UsageError("empty integer list")
    return out


def _field(args):
    try:
        return parse_field(args.field)
    except (ValueError, ArtinlabError) as exc:
        raise UsageError(str(exc))


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n for n in missing))


def _input_ideal(args) -> tuple[Ideal, bool]:
    """The ideal from ``--gens`` or ``m^n`` from ``--d --n``; flag says which."""
    field = _field(args)
    if args.gens is not None:
        nvars = args.d if args.d is not None else infer_nvars(args.gens)
        return parse_ideal(args.gens, PolyRing(nvars, field), degree_bound=args.bound), False
    _require(args, "d", "n")
    if args.d < 1 or args.n < 1:
        raise UsageError("--d and --n must be positive")
    ring = PolyRing(args.d, field)
    return Ideal(ring, power_of_maximal(ring, args.n).generators, args.bound), True


def _default_s(d: int, n: int) -> int:
    return max((d - 2) * (n - 1), 0)


# --- commands ---------------------------------------------------------------------


def cmd_hilbert(args, rep: Report) -> None:
    ideal, _ = _input_ideal(args)
    view = quotient_view(ideal)
    rep.add("variables", list(ideal.ring.names))
    rep.add("field", ideal.ring.field.name)
    rep.add("generators", _gens(ideal))
    rep.add("truncated", view.truncated)
    rep.hilbert_table("Hilbert function", [("h_R", view.hilbert)])
    if view.truncated:
        rep.flag(f"not Artinian within degree bound {ideal.degree_bound}")
        return
    soc = socle_ideal(view)
    soc_dim = length(ideal) - length(soc)
    rep.add("length", view.length)
    rep.add("max_degree", view.max_degree)
    rep.add("socle_dimension", soc_dim)
    gor = soc_dim == 1
    rep.add("gorenstein", gor)
    if gor:
        h = view.hilbert
        rep.check("gorenstein-hilbert-symmetry", tuple(h) == tuple(reversed(h)))


def cmd_trace(args, rep: Report) -> None:
    ideal, is_power = _input_ideal(args)
    view = quotient_view(ideal)
    tr = trace_ideal(view)
    gor = is_gorenstein(view)
    rep.add("generators", _gens(ideal))
    rep.add("trace_generators", _gens(tr))
    rep.add("length", view.length)
    rep.add("colength_of_trace", length(tr))
    rep.add("gorenstein", gor)
    rep.check("trace-unit-iff-gorenstein", tr.is_unit() == gor)
    if is_power:
        rep.check("trace-equals-socle", ideal_equal(tr, socle_ideal(view)))
        rep.check("trace-is-previous-power", ideal_equal(tr, power_of_maximal(ideal.ring, args.n - 1)))


def cmd_colength(args, rep: Report) -> None:
    ideal, is_power = _input_ideal(args)
    field = ideal.ring.field
    view = quotient_view(ideal)
    rep.add("field", field.name)
    rep.add("generators", _gens(ideal))
    witness = None
    if args.witness is not None:
        witness = parse_ideal(args.witness, ideal.ring, degree_bound=args.bound)
    elif is_power:
        s = args.s if args.s is not None else _default_s(args.d, args.n)
        try:
            w = witness_ideal(args.d, args.n, s, field)
        except DegenerateWitnessError as exc:
            raise UsageError(str(exc))
        rep.add("witness_exponent", s)
        witness = w.ideal
    rows = [("h_R", view.hilbert)]
    usable = False
    if witness is not None:
        wview = quotient_view(witness)
        rows.append(("h_S", wview.hilbert))
        inside = witness.is_subset_of(ideal)
        gor = is_gorenstein(wview)
        rep.add("witness_generators", _gens(witness))
        rep.add("witness_inside", inside)
        rep.add("witness_gorenstein", gor)
        usable = inside and gor
        if field.char == 0:
            rep.check("witness-is-gorenstein", gor)
            rep.check("witness-inside-ideal", inside)
        elif not usable:
            rep.flag(f"witness fails over {field.name}: "
                     + ("not inside the ideal" if not inside else "not Gorenstein")
                     + " (positive characteristic failure reproduced)")
    rep.hilbert_table("Hilbert functions", rows)
    cb = colength_bounds(view, witness if usable else None)
    rep.add("length", cb.length)
    rep.add("lower_bound", cb.lower)
    rep.add("upper_bound", cb.upper)
    rep.add("certified", cb.certified)
    if cb.certified:
        rep.add("gorenstein_colength", cb.lower)
    if is_power and field.char == 0 and witness is not None and args.witness is None:
        prev = length(power_of_maximal(ideal.ring, args.n - 1))
        rep.check("witness-length-identity", usable and cb.upper == prev)
        rep.check("colength-certified", cb.certified and cb.lower == prev)


def cmd_witness(args, rep: Report) -> None:
    _require(args, "d", "n")
    field = _field(args)
    s = args.s if args.s is not None else _default_s(args.d, args.n)
    try:
        w = witness_ideal(args.d, args.n, s, field)
    except DegenerateWitnessError as exc:
        raise UsageError(str(exc))
    except ValueError as exc:
        raise UsageError(str(exc))
    rep.add("field", field.name)
    rep.add("exponent", s)
    rep.add("generators", _gens(w.ideal))
    rep.add("length", w.length)
    rep.add("max_degree", w.max_degree)
    rep.add("expected_max_degree", w.expected_max_degree)
    rep.add("inside_power", w.contained_in_power)
    rep.add("gorenstein", w.gorenstein)
    rep.hilbert_table("Hilbert function", [("h_S", w.hilbert)])
    if field.char == 0:
        rep.check("witness-socle-degree", w.max_degree == w.expected_max_degree)
        rep.check("witness-is-gorenstein", w.gorenstein)
    elif not w.contained_in_power:
        rep.flag(f"witness not inside m^{args.n} over {field.name} (positive characteristic failure reproduced)")


def cmd_rrr(args, rep: Report) -> None:
    field = _field(args)
    if args.exponents is not None:
        ns = _int_list(args.exponents)
    else:
        _require(args, "d", "n")
        ns = [args.n] * args.d
    m = args.m if args.m is not None else 1
    rep.add("exponents", ns)
    rep.add("m", m)
    rep.add("field", field.name)
    try:
        r = rrr_min_degree(ns, m, field)
    except ValueError as exc:
        raise UsageError(str(exc))
    except VerificationError as exc:
        rep.check("annihilator-degree-bound", False, str(exc))
        return
    rep.add("socle_degree", r.t)
    rep.add("min_degree", r.min_degree)
    rep.add("bound", r.bound)
    rep.add("degenerate", r.degenerate)
    if field.char == 0:
        rep.check("annihilator-degree-bound", r.holds)
    elif not r.holds:
        rep.flag(f"bound violated over {field.name}: degree {r.min_degree} < {r.bound}")


def _link_report(rep: Report, d: int, n: int, s: int, field) -> None:
    try:
        w = witness_ideal(d, n, s, field)
    except DegenerateWitnessError as exc:
        raise UsageError(str(exc))
    ring = w.ideal.ring
    mn = power_of_maximal(ring, n)
    rep.add("exponent", s)
    rep.add("link_generators", _gens(w.ideal))
    if not w.gorenstein or not w.ideal.is_subset_of(mn):
        rep.check("link-is-gorenstein-inside-source", False)
        return
    step = make_link(w.ideal, mn)
    rep.add("target_generators", _gens(step.target))
    rep.check("double-link-contains-source", step.double_link_contains_source)
    k = (d - 1) * (n - 1) - s
    if link_threshold(d, n) <= s <= (d - 1) * (n - 1):
        target = power_of_maximal(ring, k) if k > 0 else Ideal(ring, [ring.one()])
        rep.add("expected_target", f"m^{max(k, 0)}")
        rep.check("power-link-exponent", ideal_equal(step.target, target))
    else:
        rep.flag(f"s={s} outside the admissible range; link computed but not asserted")


def cmd_link(args, rep: Report) -> None:
    _require(args, "d", "n")
    field = _field(args)
    s = args.s if args.s is not None else _default_s(args.d, args.n)
    _link_report(rep, args.d, args.n, s, field)


def cmd_selflink(args, rep: Report) -> None:
    _require(args, "d", "n")
    s = (args.d - 2) * (args.n - 1) - 1
    if s < 0:
        raise UsageError("self-linkage needs (d-2)(n-1) >= 1")
    field = _field(args)
    _link_report(rep, args.d, args.n, s, field)
    w = witness_ideal(args.d, args.n, s, field)
    mn = power_of_maximal(w.ideal.ring, args.n)
    rep.check("self-link", ideal_equal(colon(w.ideal, mn), mn))


def cmd_chain(args, rep: Report) -> None:
    _require(args, "d", "n")
    field = _field(args)
    try:
        steps = chain_to_ci(args.d, args.n, field)
    except VerificationError as exc:
        rep.check("chain-to-complete-intersection", False, str(exc))
        return
    rep.add("steps", [f"m^{args.n - k} -> m^{args.n - k - 1} via ({', '.join(_gens(st.gorenstein_link))})"
                      for k, st in enumerate(steps)])
    rep.check("chain-length", len(steps) == args.n - 1)
    rep.check("chain-steps-gorenstein", all(st.certified_gorenstein for st in steps))
    rep.check("double-link-contains-source", all(st.double_link_contains_source for st in steps))


def cmd_sop(args, rep: Report) -> None:
    _require(args, "exponents")
    field = _field(args)
    try:
        ctx = SopContext(tuple(_int_list(args.exponents)), field)
    except ValueError as exc:
        raise UsageError(str(exc))
    n = args.n if args.n is not None else 2
    r = sop_verify(ctx, n, args.s)
    rep.add("exponents", list(r.exponents))
    rep.add("n", n)
    rep.add("s", r.s)
    rep.add("rank", r.rank_e)
    rep.add("length_scaling", [f"k={k}: {a} {'=' if a == b else '!='} {b}"
                               for k, (a, b) in sorted(r.length_scaling.items())])
    rep.add("lower_bound", r.lower)
    rep.add("upper_bound", r.upper)
    rep.check("parameter-ideal-colength", r.rank_matches)
    rep.check("length-scaling", r.length_scaling_ok)
    rep.check("witness-base-change", r.witness_base_change)
    rep.check("sop-trace-is-previous-power", r.trace_is_previous_power)
    if field.char == 0:
        rep.check("sop-colength-certified", r.colength_certified)
    if r.link_exponent is not None:
        rep.check("sop-power-link-exponent", r.link_exponent)


def _monomial_ideal2(text: str) -> MonomialIdeal2:
    ring = PolyRing(2, QQ)
    points = []
    for f in parse_polynomials(text, ring):
        if len(f.terms) != 1:
            raise UsageError(f"codim2 generators must be monomials, got {f}")
        points.append(next(iter(f.terms)))
    ideal = MonomialIdeal2(points)
    if not ideal.is_primary or ideal.is_unit():
        raise UsageError(f"{ideal} is not a proper (x, y)-primary monomial ideal")
    return ideal


def cmd_codim2(args, rep: Report) -> None:
    _require(args, "gens")
    ideal = _monomial_ideal2(args.gens)
    rep.add("ideal", str(ideal))
    action = args.action
    if action == "closure":
        poly = newton_polygon(ideal)
        clo = integral_closure(ideal)
        rep.add("newton_vertices", [f"({a},{b})" for a, b in poly.vertices])
        rep.add("complement_area", str(poly.complement_area))
        rep.add("closure", str(clo))
        rep.add("integrally_closed", clo == ideal)
        rep.check("closure-idempotent", integral_closure(clo) == clo)
    elif action == "hd":
        tree = base_point_tree(ideal)
        inv = invariants(ideal)
        area2 = 2 * newton_polygon(ideal).complement_area
        rep.add("base_point_orders", list(tree.orders))
        rep.add("hd_length", hd_length(ideal))
        rep.add("closure_colength", inv.closure_colength)
        rep.add("multiplicity", multiplicity(ideal))
        rep.add("twice_complement_area", str(area2))
        rep.check("hd-length-equals-closure-colength", hd_length(ideal) == inv.closure_colength)
        rep.check("multiplicity-equals-twice-area", multiplicity(ideal) == area2)
    elif action == "reduce":
        red = minimal_reduction(ideal, seed=args.seed, field=_field(args))
        rep.add("f", str(red.f))
        rep.add("g", str(red.g))
        rep.add("reduction_number", red.r)
        rep.add("truncation_degree", red.truncation_degree)
        rep.add("loewy_length", red.loewy_length)
        rep.add("colength", red.colength)
        rep.add("multiplicity", multiplicity(ideal))
        rep.add("attempts", red.attempts)
        rep.check("reduction-colength-is-multiplicity", red.colength == multiplicity(ideal))
    else:
        red = minimal_reduction(ideal, seed=args.seed)
        tr = theorem_t_report(ideal, red)
        for key in ("multiplicity", "order", "mu", "colength", "closure_colength", "socle_dimension",
                    "hd_length", "gorenstein_colength", "colength_bound", "single_base_point"):
            rep.add(key, getattr(tr, key))
        rep.add("twice_area", str(tr.twice_area))
        for anchor, ok in tr.checks.items():
            rep.check(anchor, ok)


def cmd_verify_all(args, rep: Report) -> None:
    only = _int_list(args.only) if args.only else None
    if only and any(k < 1 or k > len(acceptance.CRITERIA) for k in only):
        raise UsageError(f"criteria are numbered 1..{len(acceptance.CRITERIA)}")
    results = acceptance.run_all(only)
    for r in results:
        rep.add(f"criterion_{r.number}", r.line())
        note = "; ".join(r.failures[:3])
        rep.check(f"criterion-{r.number}", r.passed, note)
        if r.number == 2:
            rep.add("char2_observed", r.details["observed"])
            rep.add("char2_expected", r.details["expected"])
            rep.add("char2_expected_is_o_sequence", r.details["expected_is_o_sequence"])
        if args.timing:
            rep.timing = rep.timing or {}
            rep.timing[f"criterion_{r.number}"] = round(r.seconds, 3)


COMMANDS = {
    "hilbert": (cmd_hilbert, "Hilbert function, length and socle of T/I"),
    "trace": (cmd_trace, "trace ideal of the canonical module of T/I"),
    "colength": (cmd_colength, "Gorenstein colength bounds of T/I"),
    "witness": (cmd_witness, "the witness ideal (x_i^n) : l^s"),
    "rrr": (cmd_rrr, "least degree annihilated by a power of the linear form"),
    "link": (cmd_link, "link m^n through the witness ideal"),
    "selflink": (cmd_selflink, "self-linkage of m^n"),
    "chain": (cmd_chain, "link m^n down to m"),
    "sop": (cmd_sop, "monomial system of parameters checks"),
    "codim2": (cmd_codim2, "two-variable monomial ideals"),
    "verify-all": (cmd_verify_all, "run the full acceptance suite"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, help="number of variables")
    common.add_argument("--n", type=int, help="power / exponent")
    common.add_argument("--s", type=int, help="exponent of the linear form")
    common.add_argument("--field", default="q", help="q (rationals) or f:<p>")
    common.add_argument("--gens", help="comma separated generators")
    common.add_argument("--bound", type=int, help="degree bound override")
    common.add_argument("--seed", type=int, default=0, help="seed for random choices")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--timing", action="store_true", help="include wall-clock timings")

    parser = argparse.ArgumentParser(prog="artinlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "codim2":
            p.add_argument("action", choices=("closure", "hd", "reduce", "report"))
        if name in ("rrr", "sop"):
            p.add_argument("--exponents", help="comma separated exponents")
        if name == "rrr":
            p.add_argument("--m", type=int, help="power of the linear form")
        if name == "colength":
            p.add_argument("--witness", help="generators of a Gorenstein witness inside I")
        if name == "verify-all":
            p.add_argument("--only", help="comma separated criterion numbers")
    return parser


def run(argv: list[str]) -> tuple[Report | None, int, str]:
    """Run a command; returns the report, the exit code and any error text."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return None, int(exc.code or 0), ""
    rep = Report(shlex.join(["artinlab"] + list(argv)))
    start = time.perf_counter()
    try:
        COMMANDS[args.command][0](args, rep)
    except (UsageError, ParseError, ArtinlabError, ValueError) as exc:
        if isinstance(exc, VerificationError):
            rep.check("verification", False, str(exc))
        else:
            return None, 2, f"artinlab {args.command}: error: {exc}"
    if args.timing:
        rep.timing = rep.timing or {}
        rep.timing["total"] = round(time.perf_counter() - start, 3)
    rep.fmt = args.format
    return rep, rep.exit_code, ""


def main(argv: list[str] | None = None) -> int:
    rep, code, err = run(sys.argv[1:] if argv is None else argv)
    if err:
        print(err, file=sys.stderr)
    if rep is not None:
        sys.stdout.write(rep.render(rep.fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
