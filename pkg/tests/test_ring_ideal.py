import itertools
from math import comb

import pytest

from artinlab.errors import DegreeBoundError, InhomogeneousError, TruncationError
from artinlab.field import GF, QQ
from artinlab.ideal import (
    Ideal,
    colon,
    ideal_equal,
    ideal_power,
    ideal_product,
    ideal_slice,
    ideal_sum,
    is_o_sequence,
    length,
    macaulay_bound,
    maximal_ideal,
    membership,
    min_generators,
    monomial_ideal,
    order,
    power_of_maximal,
    quotient_view,
    socle,
)
from artinlab.ring import PolyRing


def ring2():
    r = PolyRing(2)
    return r, r.gens()


def monomial_hilbert(exps, nvars, top):
    """Standard monomials of a monomial ideal, counted by brute force."""
    h = []
    for deg in range(top + 1):
        count = 0
        for m in itertools.product(range(deg + 1), repeat=nvars):
            if sum(m) != deg:
                continue
            if not any(all(a >= b for a, b in zip(m, g)) for g in exps):
                count += 1
        h.append(count)
    while h and h[-1] == 0:
        h.pop()
    return tuple(h)


# --- polynomials ---------------------------------------------------------------


def test_polynomial_printing_and_arithmetic():
    r, (x, y) = ring2()
    f = x ** 2 - 3 * x * y + y ** 2
    assert str(f) == "x^2 - 3*x*y + y^2"
    assert (x + y) * (x - y) == x ** 2 - y ** 2
    assert f.is_homogeneous() and f.homogeneous_degree == 2
    assert not (x + y ** 2).is_homogeneous()
    assert r.monomials(2) == [(2, 0), (1, 1), (0, 2)]


def test_variable_names():
    assert PolyRing(3).names == ("x", "y", "z")
    assert PolyRing(5).names == ("x1", "x2", "x3", "x4", "x5")


def test_prime_field_coefficients_reduce():
    r = PolyRing(2, GF(2))
    x, y = r.gens()
    assert (x + y) ** 2 == x ** 2 + y ** 2


# --- slices, quotients, membership ----------------------------------------------------


def test_slice_examples():
    r, (x, y) = ring2()
    i = Ideal(r, [x ** 2, y ** 2])
    assert ideal_slice(i, 2).nrows == 2
    assert ideal_slice(i, 1).nrows == 0
    assert ideal_slice(i, 3).nrows == 4


def test_slice_above_bound_is_an_error():
    r, (x, y) = ring2()
    i = Ideal(r, [x ** 2], degree_bound=3)
    with pytest.raises(DegreeBoundError):
        i.slice(9)


def test_quotient_view_examples():
    r, _ = ring2()
    v = quotient_view(power_of_maximal(r, 3))
    assert v.hilbert == (1, 2, 3) and v.length == 6
    r3 = PolyRing(3)
    v = quotient_view(monomial_ideal(r3, [(3, 0, 0), (0, 3, 0), (0, 0, 3)]))
    assert v.max_degree == 6 and v.length == 27
    assert quotient_view(maximal_ideal(PolyRing(4))).hilbert == (1,)


def test_non_artinian_is_marked_truncated():
    r, (x, y) = ring2()
    v = quotient_view(Ideal(r, [x ** 2, x * y]))
    assert v.truncated and v.max_degree is None
    with pytest.raises(TruncationError):
        length(Ideal(r, [x ** 2, x * y]))


def test_membership_examples():
    r, (x, y) = ring2()
    i = Ideal(r, [x ** 2, y ** 2])
    assert membership(x ** 2 * y, i)
    assert not membership(x * y, i)
    assert membership(r.zero(), i)
    with pytest.raises(InhomogeneousError):
        membership(x + y ** 2, i)


@pytest.mark.parametrize("exps", [
    [(2, 0), (0, 3)],
    [(3, 0), (1, 1), (0, 4)],
    [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0)],
    [(4, 0, 0), (0, 3, 0), (0, 0, 2), (1, 1, 1)],
])
def test_hilbert_function_matches_monomial_count(exps):
    r = PolyRing(len(exps[0]))
    v = quotient_view(monomial_ideal(r, exps))
    assert v.hilbert == monomial_hilbert(exps, r.nvars, 12)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_length_of_maximal_power(d, n):
    r = PolyRing(d)
    expected = sum(comb(d - 1 + i, i) for i in range(n))
    assert length(power_of_maximal(r, n)) == expected
    exps = [m for m in itertools.product(range(n + 1), repeat=d) if sum(m) == n]
    assert sum(monomial_hilbert(exps, d, n)) == expected


# --- arithmetic -----------------------------------------------------------------------


def test_sum_and_product():
    r, (x, y) = ring2()
    assert ideal_equal(ideal_sum(Ideal(r, [x]), Ideal(r, [y])), maximal_ideal(r))
    m = maximal_ideal(r)
    assert ideal_equal(ideal_product(m, m), power_of_maximal(r, 2))
    p = ideal_power(Ideal(r, [x ** 2, y ** 2]), 2)
    q = Ideal(r, [x ** 4, x ** 2 * y ** 2, y ** 4])
    assert all(p.rank(i) == q.rank(i) for i in range(10))
    assert ideal_equal(ideal_product(power_of_maximal(r, 2), m), power_of_maximal(r, 3))
    assert not ideal_equal(Ideal(r, [x ** 2, y ** 2]), power_of_maximal(r, 2))


def test_colon_examples():
    r, (x, y) = ring2()
    got = colon(Ideal(r, [x ** 2, y ** 2]), Ideal(r, [x]))
    assert ideal_equal(got, Ideal(r, [x, y ** 2]))
    r3 = PolyRing(3)
    ci = monomial_ideal(r3, [(3, 0, 0), (0, 3, 0), (0, 0, 3)])
    c = colon(ci, Ideal(r3, [r3.linear_sum()]))
    assert ci.is_subset_of(c)
    assert quotient_view(c).h(3) == quotient_view(ci).h(4) == 6
    for n in (2, 3, 4):
        assert ideal_equal(colon(power_of_maximal(r, n), maximal_ideal(r)), power_of_maximal(r, n - 1))
    with pytest.raises(ValueError):
        colon(ci, Ideal(r3, [r3.one()]))


def test_colon_matches_monomial_oracle():
    r3 = PolyRing(3)
    a_exps = [(3, 0, 0), (0, 2, 0), (0, 0, 3), (1, 1, 1)]
    b_exps = [(1, 0, 1), (0, 1, 0)]
    got = colon(monomial_ideal(r3, a_exps), monomial_ideal(r3, b_exps))
    inside = lambda m, gens: any(all(p >= q for p, q in zip(m, g)) for g in gens)
    for deg in range(8):
        for m in r3.monomials(deg):
            expect = all(inside(tuple(p + q for p, q in zip(m, b)), a_exps) for b in b_exps)
            assert got.contains(r3.monomial(m)) == expect, m


def test_colon_by_square_in_three_variables():
    r3 = PolyRing(3)
    ci = monomial_ideal(r3, [(2, 0, 0), (0, 2, 0), (0, 0, 2)])
    assert ideal_equal(colon(ci, power_of_maximal(r3, 2)), power_of_maximal(r3, 2))


def test_socle_examples():
    r, (x, y) = ring2()
    assert socle(power_of_maximal(r, 3))[0] == 3
    dim, basis = socle(Ideal(r, [x ** 2, y ** 2]))
    assert dim == 1 and basis == [x * y]
    assert socle(maximal_ideal(r))[0] == 1


def test_order_and_generators():
    r, (x, y) = ring2()
    assert order(Ideal(r, [x ** 3, x * y, y ** 3])) == 2
    assert min_generators(power_of_maximal(r, 2)) == 3
    assert min_generators(Ideal(r, [x ** 2, x * y, y ** 2, x ** 3])) == 3
    with pytest.raises(ValueError):
        order(Ideal(r, []))


def test_generators_are_canonical():
    r, (x, y) = ring2()
    a = Ideal(r, [x ** 2 + x * y, x * y, y ** 3]).mingens()
    b = Ideal(r, [x ** 2, 5 * x * y, y ** 3, x ** 2 * y]).mingens()
    assert a == b


def test_macaulay_bound():
    assert macaulay_bound(2, 1) == 3
    assert macaulay_bound(4, 2) == 5
    assert macaulay_bound(1, 5) == 1
    assert is_o_sequence((1, 3, 6, 10, 15))
    assert is_o_sequence((1, 3, 5, 3, 1))
    assert not is_o_sequence((1, 2, 5, 2, 1))
