import dataclasses
import random

import pytest

from rotabaxter.cohomology import Cochain, rb_scheme, scheme
from rotabaxter.extensions import CocycleError
from rotabaxter.lie2 import (
    check_skeletal_rb2,
    check_skeletal_rrb2,
    cocycle_to_rb2,
    cocycle_to_rrb2,
    rb2_to_3cocycle,
    rrb2_to_3cocycle,
)
from rotabaxter.linalg import kernel
from rotabaxter.report import AxiomError
from rotabaxter.structures import adjoint_rrb_rep

from instances import f1, random_instances, random_rb_instances


def _random_cocycle(sch, rng):
    v = [0] * sch.dim
    for b in kernel(sch.complex.D(3)).basis:
        c = rng.randint(-2, 2)
        v = [x + c * y for x, y in zip(v, b)]
    return Cochain(sch, v)


def test_relative_roundtrip():
    rng = random.Random(41)
    for a, r in random_instances(41, 10):
        c = _random_cocycle(scheme(a, r, 3), rng)
        s = cocycle_to_rrb2(a, r, c)
        assert check_skeletal_rrb2(s).valid
        a2, r2, c2 = rrb2_to_3cocycle(s)
        assert (a2, r2) == (a, r) and c2.coords == c.coords


def test_rb_roundtrip():
    rng = random.Random(42)
    for a, r in random_rb_instances(42, 10):
        c = _random_cocycle(rb_scheme(a, r, 3), rng)
        s = cocycle_to_rb2(a, r, c)
        assert check_skeletal_rb2(s).valid
        a2, r2, c2 = rb2_to_3cocycle(s)
        assert (a2, r2) == (a, r) and c2.coords == c.coords


def test_zero_cocycle_gives_strict_structure():
    a = f1()
    r = adjoint_rrb_rep(a)
    sch = scheme(a, r, 3)
    s = cocycle_to_rrb2(a, r, Cochain(sch, [0] * sch.dim))
    assert check_skeletal_rrb2(s).valid
    assert not any(s.l3) and not any(s.T2) and not any(s.rho2)


def test_perturbed_T2_breaks_the_third_condition():
    a, r = random_rb_instances(42, 2)[1]
    sch = rb_scheme(a, r, 3)
    s = cocycle_to_rb2(a, r, Cochain(sch, [0] * sch.dim))
    bumped = dataclasses.replace(s, T2=(1,) + tuple(s.T2[1:]))
    report = check_skeletal_rb2(bumped)
    assert "rb_condition_iii" in report.axioms()
    with pytest.raises(AxiomError):
        rb2_to_3cocycle(bumped)


def test_non_cocycle_and_wrong_complex_are_rejected():
    a, r = next((a, r) for a, r in random_instances(41, 10) if not scheme(a, r, 3).complex.D(3).is_zero())
    sch = scheme(a, r, 3)
    d = sch.complex.D(3)
    bad = next(v for v in ([1 if i == j else 0 for i in range(sch.dim)] for j in range(sch.dim))
               if any(d.apply(v)))
    with pytest.raises(CocycleError):
        cocycle_to_rrb2(a, r, Cochain(sch, bad))
    with pytest.raises(ValueError):
        cocycle_to_rrb2(a, r, Cochain(scheme(a, r, 2), [0] * scheme(a, r, 2).dim))
