import itertools
from fractions import Fraction

import pytest

from artinlab.errors import DimensionError, FieldMismatchError
from artinlab.field import GF, QQ, parse_field
from artinlab.linalg import (
    DenseMatrix,
    Span,
    bulk_rank,
    kernel_basis,
    left_kernel,
    rank,
    row_space_membership,
)


def mat(rows, field=QQ, ncols=None):
    return DenseMatrix.from_rows(field, [[field(x) for x in r] for r in rows], ncols)


def brute_rank(rows, p):
    """Rank over GF(p) from the size of the row space, p^rank."""
    ncols = len(rows[0]) if rows else 0
    space = set()
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        space.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % p for j in range(ncols)))
    size, r = len(space), 0
    while size > 1:
        size //= p
        r += 1
    return r


# --- fields -------------------------------------------------------------------


def test_field_parsing_and_names():
    assert parse_field("q") is QQ or parse_field("q") == QQ
    assert parse_field("f:7") == GF(7)
    assert GF(7).name == "GF(7)" and QQ.name == "QQ"
    with pytest.raises(ValueError):
        parse_field("f:8")


def test_rationals_are_reduced():
    x = QQ(Fraction(6, -4))
    assert x == Fraction(-3, 2)
    assert x.denominator == 2
    assert QQ("0") == 0


def test_prime_field_residues():
    f = GF(5)
    assert f(7) == 2 and f(-1) == 4
    assert f(f.inv(3) * 3) == 1


# --- the three public operations, worked examples ---------------------------------


def test_rank_examples():
    assert rank(mat([[1, 0], [0, 1]])) == 2
    assert rank(mat([[1, 2], [2, 4]])) == 1
    assert rank(mat([[1, 1], [1, 1]], GF(2))) == 1


def test_kernel_examples():
    assert kernel_basis(mat([[1, 1]])) == [(1, -1)] or kernel_basis(mat([[1, 1]])) == [(-1, 1)]
    assert kernel_basis(mat([[1, 0], [0, 1]])) == []
    assert kernel_basis(mat([[1, 1], [1, 1]], GF(2))) == [(1, 1)]


def test_membership_examples():
    assert row_space_membership(mat([[1, 0]]), (2, 0))
    assert not row_space_membership(mat([[1, 0]]), (0, 1))
    assert row_space_membership(mat([], ncols=2), (0, 0))
    with pytest.raises(DimensionError):
        row_space_membership(mat([[1, 0]]), (1, 0, 0))


def test_mixed_fields_rejected():
    a = mat([[1, 0]])
    b = mat([[1, 0]], GF(3))
    with pytest.raises(FieldMismatchError):
        a.vstack(b)


# --- oracles ---------------------------------------------------------------------


@pytest.mark.parametrize("p", [2, 3])
def test_rank_matches_row_space_count(p):
    rows_list = [
        [[1, 2, 0], [2, 1, 0], [0, 0, 1]],
        [[1, 1, 1, 1], [1, 0, 1, 0], [0, 1, 0, 1]],
        [[0, 0], [0, 0]],
        [[1, 2, 1], [1, 2, 1], [2, 1, 2]],
    ]
    for rows in rows_list:
        m = mat(rows, GF(p))
        assert rank(m) == brute_rank([[x % p for x in r] for r in rows], p)


def test_bulk_rank_agrees_with_span():
    rows = [{0: 3, 2: Fraction(1, 2)}, {1: 1, 2: 7}, {0: 6, 1: 2, 2: 15}, {}]
    assert bulk_rank(QQ, rows, 3) == Span.from_vectors(QQ, 3, rows).rank == 2
    rows5 = [{0: 1, 1: 2}, {0: 2, 1: 4}, {2: 1}]
    assert bulk_rank(GF(5), rows5, 3) == Span.from_vectors(GF(5), 3, rows5).rank == 2


def test_span_is_canonical():
    a = Span.from_vectors(QQ, 3, [{0: 2, 1: 4}, {1: 1, 2: 1}])
    b = Span.from_vectors(QQ, 3, [{1: 3, 2: 3}, {0: 1, 1: 1, 2: -1}])
    assert a == b
    assert a.echelon_rows() == [{0: 1, 2: -2}, {1: 1, 2: 1}]


def test_left_kernel_relations():
    images = [{0: 1}, {1: 1}, {0: 1, 1: 1}]
    ker = left_kernel(QQ, images, 2)
    assert len(ker) == 1
    c = ker[0]
    total = {}
    for j, x in c.items():
        for k, y in images[j].items():
            total[k] = total.get(k, 0) + x * y
    assert all(v == 0 for v in total.values())
