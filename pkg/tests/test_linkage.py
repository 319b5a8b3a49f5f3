import pytest

from artinlab.gorenstein import complete_intersection, witness_ideal
from artinlab.ideal import Ideal, colon, ideal_equal, length, maximal_ideal, power_of_maximal
from artinlab.linkage import (
    SopContext,
    chain_to_ci,
    link_threshold,
    make_link,
    power_link_exponent,
    sop_verify,
    verify_p2,
)
from artinlab.ring import PolyRing


def test_self_link_of_square():
    r = PolyRing(3)
    step = make_link(complete_intersection(r, [2, 2, 2]), power_of_maximal(r, 2))
    assert ideal_equal(step.target, power_of_maximal(r, 2))
    assert step.double_link_contains_source and not step.terminal_unit


def test_link_of_cube_through_witness():
    w = witness_ideal(3, 3, 2)
    step = make_link(w.ideal, power_of_maximal(w.ideal.ring, 3))
    assert ideal_equal(step.target, power_of_maximal(w.ideal.ring, 2))


def test_link_by_itself_is_terminal():
    r = PolyRing(2)
    ci = complete_intersection(r, [2, 3])
    step = make_link(ci, ci)
    assert step.terminal_unit and step.target.is_unit()


def test_make_link_rejects_bad_input():
    r = PolyRing(2)
    x, y = r.gens()
    with pytest.raises(ValueError):
        make_link(Ideal(r, [x, y ** 2]), power_of_maximal(r, 2))
    with pytest.raises(ValueError):
        make_link(power_of_maximal(r, 3), power_of_maximal(r, 2))


def test_link_step_invariants():
    for d, n in ((3, 2), (3, 3), (2, 3)):
        for step in chain_to_ci(d, n):
            c = step.gorenstein_link
            assert c.is_subset_of(step.source) and c.is_subset_of(step.target)
            assert step.source.is_subset_of(colon(c, step.target))


def test_colon_by_power_examples():
    r3 = PolyRing(3)
    assert verify_p2((2, 2, 2), r3.linear_sum(), 2)
    r2 = PolyRing(2)
    assert verify_p2((3, 3), r2.linear_sum() ** 2, 1)
    assert verify_p2((2, 2, 2), r3.one(), 4)
    with pytest.raises(ValueError):
        verify_p2((2, 2, 2), r3.linear_sum(), 4)


def test_power_link_examples():
    assert power_link_exponent(3, 2, 1)
    assert power_link_exponent(3, 2, 0)
    assert power_link_exponent(2, 3, 0)
    with pytest.raises(ValueError):
        power_link_exponent(3, 3, 0)  # below the threshold 1
    assert link_threshold(2, 5) == 0 and link_threshold(4, 3) == 3


def test_witness_generators_for_d3_n2():
    w = witness_ideal(3, 2, 1)
    r = w.ideal.ring
    x, y, z = r.gens()
    expect = Ideal(r, [x ** 2, y ** 2, z ** 2, x * y - x * z, x * z - y * z])
    assert ideal_equal(w.ideal, expect)
    assert ideal_equal(colon(w.ideal, power_of_maximal(r, 2)), maximal_ideal(r))


@pytest.mark.parametrize("d,n,steps", [(3, 3, 2), (2, 4, 3), (3, 1, 0), (4, 2, 1)])
def test_chain_lengths(d, n, steps):
    chain = chain_to_ci(d, n)
    assert len(chain) == steps
    if chain:
        assert ideal_equal(chain[-1].target, maximal_ideal(chain[-1].target.ring))


def test_chain_in_two_variables_uses_powers_of_variables():
    for step, i in zip(chain_to_ci(2, 4), (4, 3, 2)):
        r = step.gorenstein_link.ring
        assert ideal_equal(step.gorenstein_link, complete_intersection(r, [i, i]))


# --- systems of parameters -------------------------------------------------------------


def test_sop_squares_in_two_variables():
    ctx = SopContext((2, 2))
    assert ctx.rank_e == 4 and ctx.verify_rank()
    rep = sop_verify(ctx, 2)
    assert rep.ok and rep.colength_certified
    assert rep.lower == rep.upper == rep.expected_colength == 4


def test_sop_length_scaling():
    rep = sop_verify(SopContext((1, 1, 2)), 2)
    assert rep.rank_e == 2
    assert rep.length_scaling[2] == (8, 8)
    assert rep.ok


def test_sop_identity_substitution_matches_maximal_powers():
    for n in (2, 3):
        rep = sop_verify(SopContext((1, 1)), n)
        assert rep.ok
        r = PolyRing(2)
        assert rep.lower == rep.upper == length(power_of_maximal(r, n - 1))


def test_sop_rejects_zero_exponent():
    with pytest.raises(ValueError):
        SopContext((2, 0))


def test_sop_weighted_grading():
    ctx = SopContext((1, 2))
    assert ctx.ring.weights == (2, 1)
    assert all(f.is_homogeneous() for f in ctx.images())
