from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from rotabaxter.linalg import (
    ContainmentError,
    DimensionError,
    Matrix,
    Subspace,
    contains,
    format_fraction,
    image,
    is_subspace,
    kernel,
    quotient_dim,
    rank,
    rref,
    solve,
    to_fraction,
)

small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def matrices(draw, max_dim=5):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    rows = [[draw(small) for _ in range(c)] for _ in range(r)]
    return Matrix.from_rows(rows, c)


def sym(m: Matrix):
    return sympy.Matrix(m.rows, m.cols, lambda i, j: sympy.Rational(m[i, j].numerator, m[i, j].denominator))


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_rank_matches_sympy(m):
    assert rank(m) == sym(m).rank()


@settings(max_examples=80, deadline=None)
@given(matrices())
def test_kernel_is_annihilated_and_has_complementary_dimension(m):
    k = kernel(m)
    assert k.dim == m.cols - rank(m)
    for v in k.basis:
        assert not any(m.apply(v))


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_solve_recovers_a_preimage(m, data):
    x = [data.draw(small) for _ in range(m.cols)]
    b = m.apply(x)
    y = solve(m, b)
    assert y is not None and m.apply(y) == b


def test_solve_detects_inconsistency():
    m = Matrix.from_rows([[1, 0], [0, 0]])
    assert solve(m, (0, 1)) is None


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_rows_are_canonical(m):
    rows, pivots = rref(m)
    for r, p in zip(rows, pivots):
        assert r[p] == 1
        for other, q in zip(rows, pivots):
            if other is not r:
                assert other[p] == 0
    assert len(pivots) == rank(m)


@settings(max_examples=50, deadline=None)
@given(matrices(4), matrices(4))
def test_product_associates_with_application(a, b):
    if a.cols != b.rows:
        return
    v = tuple(Fraction(i + 1) for i in range(b.cols))
    assert (a @ b).apply(v) == a.apply(b.apply(v))
    assert (a @ b).T == b.T @ a.T


def test_subspace_canonical_basis_is_order_independent():
    a = Subspace.span([(1, 2, 0), (0, 1, 1)], 3)
    b = Subspace.span([(1, 3, 1), (0, -2, -2), (1, 2, 0)], 3)
    assert a == b and a.dim == 2
    assert contains(a, (2, 5, 1)) and (1, 0, 0) not in a


def test_image_kernel_and_quotient():
    m = Matrix.from_rows([[1, 1, 0], [0, 0, 0]])
    assert image(m).dim == 1 and kernel(m).dim == 2
    assert is_subspace(image(m), Subspace.full(2))
    assert quotient_dim(Subspace.full(2), image(m)) == 1
    with pytest.raises(ContainmentError) as e:
        quotient_dim(image(m), Subspace.full(2))
    assert len(e.value.witness) == 2


def test_rational_parsing():
    assert to_fraction("-3/6") == Fraction(-1, 2)
    assert to_fraction(4) == 4
    assert to_fraction(" 7 ") == 7
    for bad in ("1/0", "0.5", "x", 1.5, True, None):
        with pytest.raises(ValueError):
            to_fraction(bad)
    assert format_fraction(Fraction(6, -4)) == "-3/2"
    assert format_fraction(Fraction(5)) == "5"


def test_shape_errors():
    with pytest.raises(DimensionError):
        solve(Matrix.identity(2), (1,))
    with pytest.raises(DimensionError):
        Subspace.span([(1, 2)], 3)
    with pytest.raises(Exception):
        Matrix.identity(2) @ Matrix.identity(3)


def test_block_and_diag():
    a = Matrix.identity(2)
    z = Matrix.zero(2, 1)
    b = Matrix.block([[a, z], [Matrix.zero(1, 2), Matrix.identity(1)]])
    assert b == Matrix.identity(3) == Matrix.diag(a, Matrix.identity(1))
    assert Matrix.from_sparse(2, 2, {(0, 1): 3}).nonzero_entries() == [(0, 1, Fraction(3))]
