from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rotabaxter.cochains import (
    AltBlock,
    BudgetExceeded,
    Layout,
    evaluate_at,
    permutation_sign,
)

small = st.fractions(min_value=-2, max_value=2, max_denominator=2)


@st.composite
def blocks(draw):
    alt = draw(st.integers(1, 4))
    k = draw(st.integers(0, alt))
    extras = tuple(draw(st.lists(st.integers(1, 2), max_size=2)))
    target = draw(st.integers(1, 2))
    offset = draw(st.integers(0, 3))
    return AltBlock(alt, k, extras, target, offset)


@settings(max_examples=60, deadline=None)
@given(blocks())
def test_decode_inverts_base_index(b):
    for pos in range(b.offset, b.offset + b.size):
        tup, extras, c = b.decode(pos)
        assert b.base_index(tup, extras) + c == pos


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=0, max_size=5, unique=True))
def test_permutation_sign_matches_inversion_count(idx):
    sign, st_ = permutation_sign(idx)
    inv = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    assert sign == (-1) ** inv and st_ == tuple(sorted(idx))


def test_permutation_sign_repeat():
    assert permutation_sign([1, 0, 1]) == (0, None)


@settings(max_examples=40, deadline=None)
@given(blocks(), st.data())
def test_values_are_alternating(b, data):
    coords = [data.draw(small) for _ in range(b.offset + b.size)]
    if b.k < 2:
        return
    tup = data.draw(st.lists(st.integers(0, b.alt_dim - 1), min_size=b.k, max_size=b.k, unique=True))
    extras = tuple(0 for _ in b.extra_dims)
    base = b.value(coords, tuple(tup), extras)
    for perm in permutations(range(b.k)):
        sign, _ = permutation_sign(list(perm))
        v = b.value(coords, tuple(tup[p] for p in perm), extras)
        assert v == tuple(sign * x for x in base)
    rep = list(tup)
    rep[1] = rep[0]
    assert not any(b.value(coords, tuple(rep), extras))


@settings(max_examples=40, deadline=None)
@given(blocks(), st.data())
def test_evaluate_at_is_multilinear_and_matches_basis_values(b, data):
    coords = [data.draw(small) for _ in range(b.offset + b.size)]
    vecs = [[data.draw(small) for _ in range(b.alt_dim)] for _ in range(b.k)]
    extras = [[data.draw(small) for _ in range(d)] for d in b.extra_dims]
    got = evaluate_at(b, coords, vecs, extras)
    # expand over every ordered tuple of basis indices by hand
    expected = [Fraction(0)] * b.target_dim
    from itertools import product

    for idx in product(range(b.alt_dim), repeat=b.k):
        coef = Fraction(1)
        for v, i in zip(vecs, idx):
            coef *= v[i]
        for eidx in product(*[range(d) for d in b.extra_dims]):
            ec = coef
            for v, i in zip(extras, eidx):
                ec *= v[i]
            if ec:
                val = b.value(coords, idx, eidx)
                expected = [x + ec * y for x, y in zip(expected, val)]
    assert list(got) == expected


def test_layout_split_join_and_budget():
    lay = Layout.build(2, [("a", 3, 2, (), 1), ("b", 2, 1, (2,), 2)])
    assert lay.sizes() == (3, 8) and lay.size == 11
    coords = tuple(range(11))
    assert lay.join(lay.split(coords)) == coords
    assert lay.join({"b": coords[3:]}) == (0, 0, 0) + coords[3:]
    with pytest.raises(ValueError):
        lay.join({"a": (1,)})
    with pytest.raises(BudgetExceeded) as e:
        Layout.build(2, [("a", 3, 2, (), 1), ("b", 2, 1, (2,), 2)], budget=10)
    assert e.value.sizes == {"a": 3, "b": 8}
