from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from artinlab import GF, QQ, InhomogeneousError, ParseError
from artinlab.parse import infer_nvars, make_ring, parse_ideal, parse_polynomial, parse_polynomials, tokenize
from artinlab.ring import PolyRing


def test_tokenize_positions():
    toks = tokenize("x^2 + 3*y")
    assert [(t.kind, t.text, t.pos) for t in toks] == [
        ("var", "x", 0), ("op", "^", 1), ("int", "2", 2), ("op", "+", 4),
        ("int", "3", 6), ("op", "*", 7), ("var", "y", 8), ("end", "", 9),
    ]


def test_basic_polynomial():
    R = make_ring(3)
    x, y, z = R.gens()
    f = parse_polynomial("x^2 - 1/2*y*z + 3", R)
    assert f == x ** 2 - Fraction(1, 2) * y * z + 3


def test_indexed_names_are_aliases():
    R = make_ring(3)
    assert parse_polynomial("x1^2*x3", R) == parse_polynomial("x^2*z", R)


def test_like_terms_combine():
    R = make_ring(2)
    assert parse_polynomial("x*y + y*x - 2*x*y", R).is_zero()


def test_infer_nvars():
    assert infer_nvars("x^2, y") == 2
    assert infer_nvars("w") == 4
    assert infer_nvars("x1, x7") == 7
    assert infer_nvars("3") == 1


def test_parse_ideal_infers_ring():
    ideal = parse_ideal("x1^2, x5")
    assert ideal.ring.nvars == 5


def test_parse_ideal_field():
    ideal = parse_ideal("x^2 + 3*y^2, y^3", field=GF(5))
    assert ideal.ring.field == GF(5)


@pytest.mark.parametrize("text, pos", [
    ("x + q", 4),
    ("x^", 2),
    ("x + $", 4),
    ("2/0*x", 2),
    ("x y", 2),
    ("x +", 3),
])
def test_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, make_ring(2))
    assert info.value.position == pos
    assert f"position {pos}" in str(info.value)


def test_coefficient_undefined_mod_p():
    with pytest.raises(ParseError):
        parse_polynomial("1/2*x", make_ring(2, GF(2)))
    assert parse_polynomial("1/2*x", make_ring(2, GF(3))) == parse_polynomial("2*x", make_ring(2, GF(3)))


def test_inhomogeneous_generator():
    with pytest.raises(InhomogeneousError, match="generator 2"):
        parse_ideal("x^2, y^2 + x")


def test_parse_polynomials_list():
    R = make_ring(2)
    fs = parse_polynomials("x, y^2, x*y", R)
    assert len(fs) == 3


coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=7)
monos = st.tuples(*[st.integers(0, 3)] * 3)


@given(st.dictionaries(monos, coeffs, max_size=6))
def test_round_trip_qq(terms):
    R = PolyRing(3, QQ)
    f = R.poly(terms)
    assert parse_polynomial(str(f), R) == f


@given(st.dictionaries(monos, st.integers(0, 6), max_size=6))
def test_round_trip_gf7(terms):
    R = PolyRing(3, GF(7))
    f = R.poly(terms)
    assert parse_polynomial(str(f), R) == f
