from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rotabaxter.lie import (
    LieAlgebra,
    LinearRep,
    PreLieAlgebra,
    adjoint_rep,
    check_jacobi,
    check_left_symmetry,
    check_prelie_rep,
    check_representation,
    commutator_lie,
    dual_rep,
    semidirect_lie,
)
from rotabaxter.linalg import DimensionError, Matrix
from rotabaxter.report import AxiomError
from rotabaxter.structures import (
    RBAlgebra,
    RRBAlgebra,
    adjoint_rrb_rep,
    check_derivation,
    check_rb,
    check_rb_homomorphism,
    check_rrb,
    check_rrb_homomorphism,
    check_rrb_representation,
    coadjoint_rrb_rep,
    derivation_via_semidirect,
    dual_rrb_rep,
    from_associative,
    induced_prelie,
    induced_prelie_rep,
    rb_rep_to_rrb_rep,
    rb_to_rrb,
    adjoint_rb_rep,
    rrb_from_r_matrix,
    semidirect_rb,
    semidirect_rrb,
)

from instances import aff1, catalog, end_example, f1, f2, random_instances, random_rb_instances

F = Fraction


def test_aff1_identity_operator_residual():
    g = aff1()
    a = RRBAlgebra.unchecked(g, adjoint_rep(g), Matrix.identity(2))
    report = check_rrb(a)
    assert not report.valid
    [v] = report.violations
    # residual is left minus right: [e1, e2] - T(ad_{e1} e2 - ad_{e2} e1) = e2 - 2 e2
    assert v.witness == (0, 1) and v.residual == (0, -1)
    with pytest.raises(AxiomError):
        RRBAlgebra(g, adjoint_rep(g), Matrix.identity(2))


def test_aff1_identity_rota_baxter_residual():
    report = check_rb(RBAlgebra.unchecked(aff1(), Matrix.identity(2)))
    [v] = report.violations
    # [e1, e2] - T([e1, e2] + [e1, e2]) = e2 - 2 e2
    assert v.witness == (0, 1) and v.residual == (0, -1)


def test_fixtures_are_valid():
    assert check_rrb(f1()).valid
    assert check_rb(f2()).valid
    assert check_rrb_representation(adjoint_rrb_rep(f1())).valid
    assert check_rrb_representation(coadjoint_rrb_rep(f1())).valid


def test_catalog_satisfies_jacobi_and_adjoint_is_rep():
    for g in catalog().values():
        assert check_jacobi(g).valid
        assert check_representation(adjoint_rep(g)).valid
        assert check_representation(dual_rep(adjoint_rep(g))).valid


def test_broken_jacobi_is_reported():
    with pytest.raises(AxiomError) as e:
        LieAlgebra.from_brackets(3, {(0, 1): (1, 0, 0), (1, 2): (0, 1, 0)})
    [v] = e.value.report.violations
    assert v.axiom == "jacobi" and v.witness == (0, 1, 2) and v.residual == (1, 0, 0)


def test_dual_of_dual_is_original():
    for g in catalog().values():
        r = adjoint_rep(g)
        assert dual_rep(dual_rep(r)) == r
    r = adjoint_rrb_rep(f1())
    d = dual_rrb_rep(dual_rrb_rep(r))
    assert d.curlyT == r.curlyT and d.mu == r.mu and d.rho_h == r.rho_h


def test_shape_errors():
    g = aff1()
    with pytest.raises(DimensionError):
        RRBAlgebra(g, adjoint_rep(g), Matrix.zero(2, 3))
    with pytest.raises(DimensionError):
        RBAlgebra(g, Matrix.zero(2, 1))


def test_semidirect_products_are_valid():
    for a, r in random_instances(11, 12):
        assert check_rrb(semidirect_rrb(a, r)).valid
    for a, r in random_rb_instances(12, 12):
        assert check_rb(semidirect_rb(a, r)).valid


def test_rb_as_relative_rb_with_adjoint_rep():
    for a, r in random_rb_instances(13, 10):
        assert check_rrb(rb_to_rrb(a)).valid
        assert check_rrb_representation(rb_rep_to_rrb_rep(r)).valid


def test_induced_prelie_structures():
    for a, r in random_instances(14, 15):
        pl = induced_prelie(a)
        assert check_left_symmetry(pl).valid
        assert check_prelie_rep(induced_prelie_rep(a, r)).valid
    # V is one-dimensional, so the commutator of u . v = rho(Tu) v vanishes
    a = f1()
    assert commutator_lie(induced_prelie(a)).is_abelian()


def test_left_symmetry_failure():
    # x . x = y, y . x = x is not left-symmetric
    with pytest.raises(AxiomError):
        PreLieAlgebra.from_products(2, {(0, 0): (0, 1), (1, 0): (1, 0)})


def test_r_matrix_on_aff1():
    g = aff1()
    r = Matrix.from_rows([[0, 1], [-1, 0]])
    cand, report = rrb_from_r_matrix(g, r)
    # every antisymmetric r on a 2-dimensional algebra solves the classical Yang-Baxter equation
    assert report.valid and cand.T == r
    with pytest.raises(ValueError):
        rrb_from_r_matrix(g, Matrix.identity(2))


def test_end_example():
    data = end_example()
    assert check_rrb(data.algebra).valid
    # curlyT = [[1], [0]] has zero kernel on W = k, so Hom(H, ker) = 0
    assert data.algebra.v_dim == 0
    assert data.algebra.g.dim == len(data.end_basis) == 3


def test_derivations_inner_and_rejected():
    a = f1()
    zero_g, zero_v = Matrix.zero(2, 2), Matrix.zero(1, 1)
    assert check_derivation(a, zero_g, zero_v).valid
    bad = check_derivation(a, Matrix.identity(2), zero_v)
    assert not bad.valid
    assert bool(derivation_via_semidirect(a, Matrix.identity(2), zero_v)) == bad.valid


def test_homomorphisms():
    a = f1()
    ident = check_rrb_homomorphism(a, a, Matrix.identity(2), Matrix.identity(1))
    assert ident.valid
    assert not check_rrb_homomorphism(a, a, Matrix.identity(2), Matrix.zero(1, 1)).valid
    b = f2()
    assert check_rb_homomorphism(b, b, Matrix.identity(2)).valid
    assert not check_rb_homomorphism(b, b, Matrix.from_rows([[0, 1], [1, 0]])).valid


def test_from_associative_upper_triangular():
    # 2x2 upper triangular matrices with basis E11, E12, E22 and T(x) = x_22 E12
    mult = [[(1, 0, 0), (0, 1, 0), (0, 0, 0)],
            [(0, 0, 0), (0, 0, 0), (0, 1, 0)],
            [(0, 0, 0), (0, 0, 0), (0, 0, 1)]]
    T = Matrix.from_rows([[0, 0, 0], [0, 0, 1], [0, 0, 0]])
    # the algebra acting on itself by left multiplication, with curlyT = T
    left = [Matrix.from_columns([mult[k][j] for j in range(3)], 3) for k in range(3)]
    a, r = from_associative(mult, T, left, T)
    assert check_rb(a).valid
    with pytest.raises(AxiomError):
        from_associative(mult, Matrix.identity(3), left, Matrix.identity(3))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_random_instances_validate(seed):
    for a, r in random_instances(seed, 1):
        assert check_rrb(a).valid and check_rrb_representation(r).valid


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=4, max_size=4))
def test_rb_operators_on_aff1_match_brute_force_identity(entries):
    g = aff1()
    T = Matrix.from_rows([entries[:2], entries[2:]])
    verdict = check_rb(RBAlgebra.unchecked(g, T)).valid
    e1, e2 = (1, 0), (0, 1)
    lhs = g.bracket(T.apply(e1), T.apply(e2))
    rhs = T.apply(tuple(x + y for x, y in zip(g.bracket(T.apply(e1), e2), g.bracket(e1, T.apply(e2)))))
    assert verdict == (tuple(lhs) == tuple(rhs))
    if verdict:
        assert check_rrb(rb_to_rrb(RBAlgebra(g, T))).valid
        assert check_rrb_representation(rb_rep_to_rrb_rep(adjoint_rb_rep(RBAlgebra(g, T)))).valid


def test_semidirect_lie_dimension():
    g = aff1()
    s = semidirect_lie(LinearRep.trivial(g, 2))
    assert s.dim == 4 and check_jacobi(s).valid
