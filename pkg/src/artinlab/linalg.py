"""Exact row reduction.

:class:`Span` is the workhorse: an incrementally maintained reduced row
echelon basis of a subspace of ``field^ncols`` with sparse (dict) rows. Since
the reduced echelon form of a subspace is unique, two spans are equal exactly
when their pivot rows are equal, which gives bit-stable output.

:class:`DenseMatrix` with :func:`rank`, :func:`kernel_basis` and
:func:`row_space_membership` is the small public surface built on top.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionError, FieldMismatchError
from .field import Field, same_field

SparseVec = dict  # column -> nonzero scalar


class Span:
    """Reduced row echelon basis, built one vector at a time.

    Pivot rows are kept fully reduced: each has a 1 at its pivot column and
    zeros at every other pivot column. Pivots are the smallest column of the
    row, so the row order by pivot is the usual echelon order.
    """

    __slots__ = ("field", "ncols", "rows")

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: dict[int, SparseVec] = {}

    @classmethod
    def full(cls, field: Field, ncols: int) -> "Span":
        s = cls(field, ncols)
        s.rows = {c: {c: 1} for c in range(ncols)}
        return s

    @classmethod
    def from_vectors(cls, field: Field, ncols: int, vectors: Iterable[SparseVec]) -> "Span":
        s = cls(field, ncols)
        for v in vectors:
            s.add(v)
        return s

    def copy(self) -> "Span":
        s = Span(self.field, self.ncols)
        s.rows = {c: dict(r) for c, r in self.rows.items()}
        return s

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def is_full(self) -> bool:
        return len(self.rows) == self.ncols

    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def non_pivots(self) -> list[int]:
        return [c for c in range(self.ncols) if c not in self.rows]

    def reduce(self, v: SparseVec) -> SparseVec:
        """Return ``v`` minus its projection onto the span (zero at all pivots)."""
        rows = self.rows
        hits = [c for c in v if c in rows]
        if not hits:
            return dict(v)
        out = dict(v)
        p = self.field.char
        for c in hits:
            a = out.pop(c)
            for k, b in rows[c].items():
                if k == c:
                    continue
                x = out.get(k, 0) - a * b
                if p:
                    x %= p
                if x:
                    out[k] = x
                else:
                    out.pop(k, None)
        return out

    def contains(self, v: SparseVec) -> bool:
        return not self.reduce(v)

    def add(self, v: SparseVec) -> bool:
        """Insert ``v``; return True when it enlarged the span."""
        r = self.reduce(v)
        if not r:
            return False
        self._insert_reduced(r)
        return True

    def _insert_reduced(self, r: SparseVec) -> None:
        p = self.field.char
        c0 = min(r)
        lead = r[c0]
        if lead != 1:
            inv = self.field.inv(lead)
            if p:
                r = {k: x * inv % p for k, x in r.items()}
            else:
                r = {k: x * inv for k, x in r.items()}
        for row in self.rows.values():
            a = row.get(c0)
            if a is None:
                continue
            del row[c0]
            for k, b in r.items():
                if k == c0:
                    continue
                x = row.get(k, 0) - a * b
                if p:
                    x %= p
                if x:
                    row[k] = x
                else:
                    row.pop(k, None)
        self.rows[c0] = r

    def echelon_rows(self) -> list[SparseVec]:
        return [self.rows[c] for c in sorted(self.rows)]

    def kernel(self) -> list[SparseVec]:
        """Basis of ``{x : row . x = 0 for all rows}``, one vector per free column.

        The vector for free column ``f`` has a 1 at ``f`` and ``-row[f]`` at the
        pivot of each row, so the basis is dual to the free columns.
        """
        p = self.field.char
        free = self.non_pivots()
        by_col: dict[int, list[tuple[int, object]]] = {}
        for c, row in self.rows.items():
            for k, x in row.items():
                if k != c:
                    by_col.setdefault(k, []).append((c, x))
        out = []
        for f in free:
            v = {f: 1}
            for c, x in by_col.get(f, ()):
                v[c] = (-x) % p if p else -x
            out.append(v)
        return out

    def __eq__(self, other):
        if not isinstance(other, Span):
            return NotImplemented
        return (
            self.field == other.field
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Span({self.field.name}, ncols={self.ncols}, rank={self.rank})"


def left_kernel(field: Field, images: Sequence[SparseVec], ncols: int) -> list[SparseVec]:
    """Canonical basis of ``{c : sum_j c_j images[j] = 0}``.

    Reduces the augmented matrix ``[images | identity]``; rows of the result
    whose pivot falls in the identity block are the kernel, already in
    reduced echelon form with respect to the source coordinates.
    """
    n = len(images)
    aug = Span(field, ncols + n)
    for j, v in enumerate(images):
        w = dict(v)
        w[ncols + j] = 1
        aug.add(w)
    out = []
    for c in sorted(aug.rows):
        if c >= ncols:
            out.append({k - ncols: x for k, x in aug.rows[c].items()})
    return out


def subspace_intersection(field: Field, a: Span, b: Span) -> Span:
    """Intersection of two subspaces of the same ambient space."""
    if a.ncols != b.ncols:
        raise DimensionError("ambient dimensions differ")
    ra = a.echelon_rows()
    rb = b.echelon_rows()
    # c . [ra; rb] = 0  =>  c_a . ra lies in both spans
    rel = left_kernel(field, ra + rb, a.ncols)
    out = Span(field, a.ncols)
    p = field.char
    for c in rel:
        v: SparseVec = {}
        for j, x in c.items():
            if j >= len(ra):
                continue
            for k, y in ra[j].items():
                z = v.get(k, 0) + x * y
                if p:
                    z %= p
                if z:
                    v[k] = z
                else:
                    v.pop(k, None)
        out.add(v)
    return out


# --- public dense surface -------------------------------------------------


@dataclass(frozen=True)
class DenseMatrix:
    """Row-major matrix over a single field."""

    field: Field
    nrows: int
    ncols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.nrows * self.ncols:
            raise DimensionError("entry count does not match shape")
        for x in self.entries:
            self.field.check(x)

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence], ncols: int | None = None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise DimensionError("ragged rows")
            flat.extend(field(x) for x in r)
        return cls(field, len(rows), ncols, tuple(flat))

    @classmethod
    def from_span(cls, span: Span) -> "DenseMatrix":
        rows = []
        for r in span.echelon_rows():
            dense = [0] * span.ncols
            for k, x in r.items():
                dense[k] = x
            rows.append(dense)
        return cls.from_rows(span.field, rows, span.ncols)

    def row(self, i: int) -> tuple:
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def rows(self) -> list[tuple]:
        return [self.row(i) for i in range(self.nrows)]

    def sparse_rows(self) -> list[SparseVec]:
        return [{k: x for k, x in enumerate(r) if x} for r in self.rows()]

    def span(self) -> Span:
        return Span.from_vectors(self.field, self.ncols, self.sparse_rows())

    def vstack(self, other: "DenseMatrix") -> "DenseMatrix":
        same_field(self.field, other.field)
        if self.ncols != other.ncols:
            raise DimensionError("column counts differ")
        return DenseMatrix(self.field, self.nrows + other.nrows, self.ncols,
                           self.entries + other.entries)

    def mul_vector(self, v: Sequence) -> tuple:
        if len(v) != self.ncols:
            raise DimensionError("vector length does not match column count")
        p = self.field.char
        out = []
        for r in self.rows():
            s = sum(a * b for a, b in zip(r, v))
            out.append(s % p if p else self.field.normalize(s))
        return tuple(out)

    def permuted(self, order: Sequence[int]) -> "DenseMatrix":
        return DenseMatrix.from_rows(self.field, [self.row(i) for i in order], self.ncols)


def rank(m: DenseMatrix) -> int:
    return m.span().rank


def kernel_basis(m: DenseMatrix) -> list[tuple]:
    """Basis of the right kernel in reduced echelon form (canonical)."""
    ker = Span.from_vectors(m.field, m.ncols, m.span().kernel())
    out = []
    for r in ker.echelon_rows():
        dense = [0] * m.ncols
        for k, x in r.items():
            dense[k] = m.field.normalize(x)
        out.append(tuple(dense))
    return out


def row_space_membership(m: DenseMatrix, v: Sequence) -> bool:
    if len(v) != m.ncols:
        raise DimensionError(f"vector of length {len(v)} against {m.ncols} columns")
    vec = {}
    for k, x in enumerate(v):
        x = m.field(x)
        if x:
            vec[k] = x
    return m.span().contains(vec)


def check_same_field(a: DenseMatrix, b: DenseMatrix) -> None:
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field.name} vs {b.field.name}")


def bulk_rank(field: Field, rows: Sequence[SparseVec], ncols: int) -> int:
    """Rank of many sparse rows at once, for matrices too big for :class:`Span`.

    Backed by FLINT: exact integer rank over QQ (rows are cleared of
    denominators first, which does not change the rank) and ``nmod_mat`` over
    GF(p). Agrees with ``Span.from_vectors(...).rank`` on every input.
    """
    import flint

    rows = [r for r in rows if r]
    if not rows or ncols == 0:
        return 0
    if field.char:
        mat = flint.nmod_mat(len(rows), ncols, field.char)
        for i, r in enumerate(rows):
            for j, c in r.items():
                mat[i, j] = int(c) % field.char
        return mat.rank()
    mat = flint.fmpz_mat(len(rows), ncols)
    for i, r in enumerate(rows):
        den = 1
        for c in r.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        for j, c in r.items():
            mat[i, j] = int(c * den)
    return mat.rank()
