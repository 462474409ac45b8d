"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`; vectors are tuples of fractions.
Matrices are immutable and dense, but products skip zero entries so the
sparse coboundary matrices assembled elsewhere stay cheap to multiply.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL_RE = re.compile(r"^\s*([+\-−]?\d+)\s*(?:/\s*(\d+))?\s*$")


class DimensionError(ValueError):
    pass


class ContainmentError(ValueError):
    """Raised when a subspace is not contained in another; carries a witness."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


def to_fraction(value) -> Fraction:
    """Parse an int, Fraction, or ``"p/q"`` string into a Fraction.

    Floats and decimal strings are rejected so that inputs stay exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.match(value)
        if not m:
            raise ValueError(f"malformed rational: {value!r}")
        num = int(m.group(1).replace("−", "-"))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ValueError(f"zero denominator: {value!r}")
        return Fraction(num, den)
    raise ValueError(f"not a rational: {value!r}")


def format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------- vectors

def vec(values: Iterable) -> Vector:
    return tuple(to_fraction(v) for v in values)


def zeros(n: int) -> Vector:
    return (ZERO,) * n


def unit(n: int, i: int) -> Vector:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def vadd(a: Sequence, b: Sequence) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Sequence, b: Sequence) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vscale(c, a: Sequence) -> Vector:
    return tuple(c * x for x in a)


def vsum(vectors: Iterable[Sequence], n: int) -> Vector:
    acc = [ZERO] * n
    for v in vectors:
        for i, x in enumerate(v):
            if x:
                acc[i] += x
    return tuple(acc)


def is_zero_vec(v: Sequence) -> bool:
    return not any(v)


def support(v: Sequence):
    """Nonzero (index, value) pairs of a vector."""
    return [(i, x) for i, x in enumerate(v) if x]


# ---------------------------------------------------------------- matrices

@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    data: tuple  # tuple of row tuples

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise DimensionError(f"entries do not match shape {self.rows}x{self.cols}")

    # construction
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        data = tuple(tuple(to_fraction(x) for x in r) for r in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        cols = len(columns)
        data = tuple(tuple(columns[j][i] for j in range(cols)) for i in range(rows))
        return cls(rows, cols, data)

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(unit(n, i) for i in range(n)))

    @classmethod
    def from_sparse(cls, rows: int, cols: int, entries: dict) -> "Matrix":
        grid = [[ZERO] * cols for _ in range(rows)]
        for (i, j), x in entries.items():
            grid[i][j] = x
        return cls(rows, cols, tuple(tuple(r) for r in grid))

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a block matrix; every block row must share heights."""
        out = []
        for brow in blocks:
            height = brow[0].rows
            for b in brow:
                if b.rows != height:
                    raise DimensionError("block heights differ within a block row")
            for i in range(height):
                out.append(tuple(x for b in brow for x in b.data[i]))
        cols = sum(b.cols for b in blocks[0]) if blocks else 0
        return cls(len(out), cols, tuple(out))

    @classmethod
    def diag(cls, *blocks: "Matrix") -> "Matrix":
        rows = sum(b.rows for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = [[ZERO] * cols for _ in range(rows)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b.data[i][j]
            r0 += b.rows
            c0 += b.cols
        return cls(rows, cols, tuple(tuple(r) for r in out))

    # access
    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.data)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def submatrix(self, rows: range | Sequence[int], cols: range | Sequence[int]) -> "Matrix":
        rows = list(rows)
        cols = list(cols)
        return Matrix(len(rows), len(cols), tuple(tuple(self.data[i][j] for j in cols) for i in rows))

    def to_lists(self):
        return [list(r) for r in self.data]

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.data)

    def nonzero_entries(self):
        return [(i, j, x) for i, r in enumerate(self.data) for j, x in enumerate(r) if x]

    # arithmetic
    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(zip(*self.data)) if self.rows else tuple(() for _ in range(self.cols)))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(vadd(a, b) for a, b in zip(self.data, other.data)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols, tuple(vsub(a, b) for a, b in zip(self.data, other.data)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(tuple(-x for x in r) for r in self.data))

    def scale(self, c) -> "Matrix":
        c = to_fraction(c)
        return Matrix(self.rows, self.cols, tuple(vscale(c, r) for r in self.data))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        other_rows = [support(r) for r in other.data]
        out = []
        for r in self.data:
            acc = [ZERO] * other.cols
            for k, a in enumerate(r):
                if a:
                    for j, b in other_rows[k]:
                        acc[j] += a * b
            out.append(tuple(acc))
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for matrix with {self.cols} columns")
        nz = support(v)
        return tuple(sum((r[j] * x for j, x in nz), ZERO) for r in self.data)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


# ---------------------------------------------------------------- elimination

def _rref(rows: list[list[Fraction]], ncols: int):
    """Gauss-Jordan in place; returns the list of pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [x / piv for x in rows[r]]
        prow = rows[r]
        nz = [(j, x) for j, x in enumerate(prow) if x]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                row = rows[i]
                for j, x in nz:
                    row[j] -= f * x
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix):
    """Reduced row echelon form as (nonzero rows, pivot columns)."""
    rows = [list(r) for r in m.data]
    pivots = _rref(rows, m.cols)
    return [tuple(rows[i]) for i in range(len(pivots))], pivots


def rank(m: Matrix) -> int:
    """Exact rank by fraction-free (Bareiss) elimination on integer rows."""
    rows = []
    for r in m.data:
        if not any(r):
            continue
        den = 1
        for x in r:
            den = den * x.denominator // gcd(den, x.denominator)
        rows.append([int(x * den) for x in r])
    ncols = m.cols
    rk = 0
    prev = 1
    for c in range(ncols):
        p = next((i for i in range(rk, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[rk], rows[p] = rows[p], rows[rk]
        piv = rows[rk][c]
        for i in range(rk + 1, len(rows)):
            ri = rows[i]
            a = ri[c]
            prow = rows[rk]
            rows[i] = [(piv * ri[j] - a * prow[j]) // prev for j in range(ncols)]
        prev = piv
        rk += 1
        if rk == len(rows):
            break
    return rk


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^n stored by its canonical reduced-echelon basis."""

    ambient_dim: int
    basis: tuple

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        rows = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
            rows.append([to_fraction(x) for x in v])
        pivots = _rref(rows, ambient_dim)
        return cls(ambient_dim, tuple(tuple(rows[i]) for i in range(len(pivots))))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(unit(n, i) for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _pivots(self):
        return [next(j for j, x in enumerate(b) if x) for b in self.basis]

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of v after eliminating the pivot columns of the basis."""
        r = list(v)
        for b, p in zip(self.basis, self._pivots()):
            c = r[p]
            if c:
                for j, x in enumerate(b):
                    if x:
                        r[j] -= c * x
        return tuple(r)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def matrix(self) -> Matrix:
        """Basis vectors as the columns of a matrix."""
        return Matrix.from_columns(list(self.basis), self.ambient_dim)


def kernel(m: Matrix) -> Subspace:
    rows, pivots = rref(m)
    pivset = set(pivots)
    free = [j for j in range(m.cols) if j not in pivset]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in zip(rows, pivots):
            v[p] = -r[f]
        basis.append(v)
    return Subspace.span(basis, m.cols)


def image(m: Matrix) -> Subspace:
    return Subspace.span(m.columns(), m.rows)


def contains(s: Subspace, v: Sequence) -> bool:
    if len(v) != s.ambient_dim:
        raise DimensionError(f"vector of length {len(v)} in ambient dimension {s.ambient_dim}")
    return is_zero_vec(s.reduce(vec(v)))


def is_subspace(inner: Subspace, outer: Subspace) -> bool:
    return all(contains(outer, b) for b in inner.basis)


def quotient_dim(outer: Subspace, inner: Subspace) -> int:
    if outer.ambient_dim != inner.ambient_dim:
        raise DimensionError("subspaces live in different ambient spaces")
    for b in inner.basis:
        if not contains(outer, b):
            raise ContainmentError("inner subspace is not contained in outer", b)
    return outer.dim - inner.dim


def solve(m: Matrix, b: Sequence) -> Vector | None:
    """Some x with m x = b, or None when b is outside the column span."""
    if len(b) != m.rows:
        raise DimensionError(f"right-hand side of length {len(b)} for {m.rows} rows")
    b = vec(b)
    rows = [list(r) + [b[i]] for i, r in enumerate(m.data)]
    pivots = _rref(rows, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for r, p in zip(rows, pivots):
        x[p] = r[m.cols]
    return tuple(x)
