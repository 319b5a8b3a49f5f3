"""Property tests for invariants that must hold on every input."""

from hypothesis import given, strategies as st

from artinlab import GF, QQ, DenseMatrix, PolyRing, kernel_basis, rank
from artinlab.codim2 import MonomialIdeal2, hd_length, integral_closure, multiplicity
from artinlab.gorenstein import is_gorenstein, trace_ideal
from artinlab.ideal import Ideal, colon, ideal_equal, ideal_product, monomial_ideal, quotient_view

FIELDS = st.sampled_from([QQ, GF(2), GF(5), GF(101)])


@st.composite
def matrices(draw):
    field = draw(FIELDS)
    nrows = draw(st.integers(0, 6))
    ncols = draw(st.integers(1, 6))
    rows = [[field(draw(st.integers(-4, 4))) for _ in range(ncols)] for _ in range(nrows)]
    return DenseMatrix.from_rows(field, rows, ncols)


@given(matrices())
def test_rank_nullity(m):
    ker = kernel_basis(m)
    assert rank(m) + len(ker) == m.ncols
    assert all(not any(m.mul_vector(v)) for v in ker)


@given(matrices(), st.randoms(use_true_random=False))
def test_row_permutation_invariance(m, rnd):
    order = list(range(m.nrows))
    rnd.shuffle(order)
    pm = m.permuted(order)
    assert rank(pm) == rank(m)
    assert kernel_basis(pm) == kernel_basis(m)
    assert pm.span().echelon_rows() == m.span().echelon_rows()


@st.composite
def artinian_monomial_ideals(draw, nvars=None, top=4):
    nv = nvars or draw(st.sampled_from([2, 3]))
    ring = PolyRing(nv, QQ)
    exps = []
    for v in range(nv):
        e = [0] * nv
        e[v] = draw(st.integers(1, top))
        exps.append(e)
    extra = draw(st.lists(st.tuples(*[st.integers(0, top - 1)] * nv), max_size=3))
    exps += [list(e) for e in extra if any(e)]
    return monomial_ideal(ring, exps)


@st.composite
def small_ideals(draw):
    """Artinian monomial ideal plus up to two binomial forms."""
    base = draw(artinian_monomial_ideals(top=3))
    ring = base.ring
    gens = list(base.generators)
    for _ in range(draw(st.integers(0, 2))):
        monos = ring.monomials(draw(st.integers(1, 3)))
        a = draw(st.sampled_from(monos))
        b = draw(st.sampled_from(monos))
        gens.append(ring.poly({a: 1}) + ring.poly({b: draw(st.sampled_from([-1, 1, 2]))}))
    return Ideal(ring, gens)


@given(small_ideals())
def test_hilbert_plus_rank_is_dimension(ideal):
    view = quotient_view(ideal)
    for i, h in enumerate(view.hilbert):
        assert h + ideal.rank(i) == ideal.ring.dim(i)


@given(small_ideals())
def test_gorenstein_iff_trace_unit(ideal):
    view = quotient_view(ideal)
    g = is_gorenstein(view)
    assert trace_ideal(view).is_unit() == g
    if g:
        h = tuple(view.hilbert)
        assert h == tuple(reversed(h))


@st.composite
def monomial_triples(draw):
    i = draw(artinian_monomial_ideals())
    ring = i.ring
    nv = ring.nvars
    small = st.lists(st.tuples(*[st.integers(0, 2)] * nv).filter(any), min_size=1, max_size=2)
    j = monomial_ideal(ring, draw(small))
    k = monomial_ideal(ring, draw(small))
    return i, j, k


@given(monomial_triples())
def test_colon_monotone_and_associative(triple):
    i, j, k = triple
    ij = colon(i, j)
    assert i.is_subset_of(ij)
    assert ideal_equal(colon(ij, k), colon(i, ideal_product(j, k)))


@st.composite
def primary2(draw, box=6):
    a = draw(st.integers(1, box))
    b = draw(st.integers(1, box))
    extra = draw(st.lists(st.tuples(st.integers(0, box), st.integers(0, box)), max_size=4))
    return MonomialIdeal2([(a, 0), (0, b)] + [p for p in extra if p != (0, 0)])


@given(primary2(), primary2())
def test_closure_idempotent_and_multiplicative(a, b):
    ca = integral_closure(a)
    assert integral_closure(ca) == ca
    assert integral_closure(a * b) == ca * integral_closure(b)


@given(primary2())
def test_closure_contains_ideal_and_keeps_invariants(a):
    ca = integral_closure(a)
    assert all(ca.contains(p) for p in a.generators)
    assert multiplicity(ca) == multiplicity(a)
    assert hd_length(a) == ca.colength()
    assert multiplicity(a) + len(a.generators) - 1 <= 2 * a.colength()
