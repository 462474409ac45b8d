"""Relative Rota-Baxter Lie algebras, Rota-Baxter Lie algebras, and their representations.

Concatenated spaces always list the base summand first: g then H, V then W.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from itertools import combinations
from typing import Sequence

from .lie import (
    LieAlgebra,
    LinearRep,
    PreLieAlgebra,
    PreLieRep,
    _basis,
    adjoint_rep,
    dual_rep,
    semidirect_lie,
)
from .linalg import (
    DimensionError,
    Matrix,
    Subspace,
    kernel,
    solve,
    support,
    unit,
    vadd,
    vec,
    vscale,
    vsub,
    vsum,
    zeros,
)
from .report import AxiomError, ValidationReport


def _combo(mats, x, rows, cols) -> Matrix:
    acc = Matrix.zero(rows, cols)
    for i, a in support(x):
        acc = acc + mats[i].scale(a)
    return acc


# ---------------------------------------------------------------- algebras

@dataclass(frozen=True)
class RRBAlgebra:
    """((g, [,]), (V, rho), T) with T: V -> g."""

    g: LieAlgebra
    rep: LinearRep
    T: Matrix
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        if self.rep.algebra != self.g:
            raise ValueError("representation is not over the given Lie algebra")
        if self.T.shape != (self.g.dim, self.rep.space_dim):
            raise DimensionError(f"T has shape {self.T.shape}, expected {(self.g.dim, self.rep.space_dim)}")
        if validate:
            report = check_rrb(self)
            if not report.valid:
                raise AxiomError("relative Rota-Baxter operator", report)

    @classmethod
    def unchecked(cls, g, rep, T) -> "RRBAlgebra":
        return cls(g, rep, T, validate=False)

    @property
    def v_dim(self) -> int:
        return self.rep.space_dim

    def rho(self, x: Sequence, u: Sequence):
        return self.rep.apply(x, u)


def check_rrb(a: RRBAlgebra) -> ValidationReport:
    """[Tu, Tv] = T(rho(Tu)v - rho(Tv)u); residual is left minus right."""
    report = ValidationReport()
    e = _basis(a.v_dim)
    for i in range(a.v_dim):
        for j in range(i, a.v_dim):
            tu, tv = a.T.apply(e[i]), a.T.apply(e[j])
            lhs = a.g.bracket(tu, tv)
            rhs = a.T.apply(vsub(a.rho(tu, e[j]), a.rho(tv, e[i])))
            report.expect("relative_rota_baxter", (i, j), vsub(lhs, rhs))
    return report


@dataclass(frozen=True)
class RBAlgebra:
    g: LieAlgebra
    T: Matrix
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        if self.T.shape != (self.g.dim, self.g.dim):
            raise DimensionError("Rota-Baxter operator must be square of size dim g")
        if validate:
            report = check_rb(self)
            if not report.valid:
                raise AxiomError("Rota-Baxter operator", report)

    @classmethod
    def unchecked(cls, g, T) -> "RBAlgebra":
        return cls(g, T, validate=False)


def check_rb(a: RBAlgebra) -> ValidationReport:
    """[Tx, Ty] = T([Tx, y] + [x, Ty]); residual is left minus right."""
    report = ValidationReport()
    e = _basis(a.g.dim)
    br = a.g.bracket
    for i in range(a.g.dim):
        for j in range(i, a.g.dim):
            tx, ty = a.T.apply(e[i]), a.T.apply(e[j])
            rhs = a.T.apply(vadd(br(tx, e[j]), br(e[i], ty)))
            report.expect("rota_baxter", (i, j), vsub(br(tx, ty), rhs))
    return report


# ---------------------------------------------------------------- representations

@dataclass(frozen=True)
class RRBRepresentation:
    """Coefficients [W --curlyT--> H, rho_h, rho_w, mu] over an RRB algebra."""

    base: RRBAlgebra
    curlyT: Matrix
    rho_h: LinearRep
    rho_w: LinearRep
    mu: tuple  # mu[k]: H -> W, one per basis vector of V
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        g = self.base.g
        if self.rho_h.algebra != g or self.rho_w.algebra != g:
            raise ValueError("coefficient representations are not over the base Lie algebra")
        if self.curlyT.shape != (self.h_dim, self.w_dim):
            raise DimensionError(f"curlyT has shape {self.curlyT.shape}, expected {(self.h_dim, self.w_dim)}")
        if len(self.mu) != self.base.v_dim:
            raise DimensionError("need one mu matrix per basis vector of V")
        for m in self.mu:
            if m.shape != (self.w_dim, self.h_dim):
                raise DimensionError(f"mu matrix of shape {m.shape}, expected {(self.w_dim, self.h_dim)}")
        if validate:
            report = check_rrb_representation(self)
            if not report.valid:
                raise AxiomError("relative Rota-Baxter representation", report)

    @classmethod
    def unchecked(cls, base, curlyT, rho_h, rho_w, mu) -> "RRBRepresentation":
        return cls(base, curlyT, rho_h, rho_w, tuple(mu), validate=False)

    @property
    def h_dim(self) -> int:
        return self.rho_h.space_dim

    @property
    def w_dim(self) -> int:
        return self.rho_w.space_dim

    def mu_of(self, u: Sequence) -> Matrix:
        return _combo(self.mu, u, self.w_dim, self.h_dim)

    def mu_apply(self, u: Sequence, alpha: Sequence):
        out = zeros(self.w_dim)
        for k, c in support(u):
            out = vadd(out, vscale(c, self.mu[k].apply(alpha)))
        return out


def check_rrb_representation(r: RRBRepresentation) -> ValidationReport:
    from .lie import check_representation

    a = r.base
    report = ValidationReport()
    report.merge(check_representation(r.rho_h), "rho_h.")
    report.merge(check_representation(r.rho_w), "rho_w.")
    for i in range(a.g.dim):
        for k in range(a.v_dim):
            lhs = r.mu_of(a.rep.action[i].column(k))
            rhs = r.rho_w.action[i] @ r.mu[k] - r.mu[k] @ r.rho_h.action[i]
            report.expect("rep3_mu_equivariance", (i, k), lhs - rhs)
    for k in range(a.v_dim):
        tu = a.T.column(k)
        lhs = r.rho_h.act(tu) @ r.curlyT
        rhs = r.curlyT @ r.rho_w.act(tu) + r.curlyT @ r.mu[k] @ r.curlyT
        report.expect("rep4_operator_compatibility", (k,), lhs - rhs)
    return report


@dataclass(frozen=True)
class RBRepresentation:
    """[W; curlyT, rho_w] over a Rota-Baxter Lie algebra."""

    base: RBAlgebra
    curlyT: Matrix
    rho_w: LinearRep
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        if self.rho_w.algebra != self.base.g:
            raise ValueError("representation is not over the base Lie algebra")
        if self.curlyT.shape != (self.w_dim, self.w_dim):
            raise DimensionError("curlyT must be square on W")
        if validate:
            report = check_rb_representation(self)
            if not report.valid:
                raise AxiomError("Rota-Baxter representation", report)

    @classmethod
    def unchecked(cls, base, curlyT, rho_w) -> "RBRepresentation":
        return cls(base, curlyT, rho_w, validate=False)

    @property
    def w_dim(self) -> int:
        return self.rho_w.space_dim


def check_rb_representation(r: RBRepresentation) -> ValidationReport:
    from .lie import check_representation

    report = ValidationReport().merge(check_representation(r.rho_w), "rho_w.")
    a = r.base
    ct = r.curlyT
    for i in range(a.g.dim):
        rt = r.rho_w.act(a.T.column(i))
        lhs = rt @ ct
        rhs = ct @ rt + ct @ r.rho_w.action[i] @ ct
        report.expect("rb_rep_operator_compatibility", (i,), lhs - rhs)
    return report


# ---------------------------------------------------------------- constructions

def adjoint_rrb_rep(a: RRBAlgebra) -> RRBRepresentation:
    """[V --T--> g, ad, rho, rhobar] with rhobar(u)(x) = -rho(x)u."""
    n, m = a.g.dim, a.v_dim
    mu = []
    for k in range(m):
        cols = [vscale(-1, a.rep.action[i].column(k)) for i in range(n)]
        mu.append(Matrix.from_columns(cols, m))
    return RRBRepresentation(a, a.T, adjoint_rep(a.g), a.rep, tuple(mu))


def dual_rrb_rep(r: RRBRepresentation) -> RRBRepresentation:
    """[H* --(-curlyT^*)--> W*, rho_w^*, rho_h^*, mu^*] with mu^*(u) = -mu(u)^T."""
    return RRBRepresentation(
        r.base,
        -r.curlyT.T,
        dual_rep(r.rho_w),
        dual_rep(r.rho_h),
        tuple(-m.T for m in r.mu),
    )


def coadjoint_rrb_rep(a: RRBAlgebra) -> RRBRepresentation:
    return dual_rrb_rep(adjoint_rrb_rep(a))


def zero_rrb_rep(a: RRBAlgebra, h_dim: int, w_dim: int) -> RRBRepresentation:
    return RRBRepresentation(
        a, Matrix.zero(h_dim, w_dim), LinearRep.trivial(a.g, h_dim), LinearRep.trivial(a.g, w_dim),
        tuple(Matrix.zero(w_dim, h_dim) for _ in range(a.v_dim)),
    )


def direct_sum_rrb_rep(r1: RRBRepresentation, r2: RRBRepresentation) -> RRBRepresentation:
    from .lie import direct_sum_rep

    if r1.base != r2.base:
        raise ValueError("representations over different bases")
    return RRBRepresentation(
        r1.base,
        Matrix.diag(r1.curlyT, r2.curlyT),
        direct_sum_rep(r1.rho_h, r2.rho_h),
        direct_sum_rep(r1.rho_w, r2.rho_w),
        tuple(Matrix.diag(x, y) for x, y in zip(r1.mu, r2.mu)),
    )


def twisted_semidirect(a: RRBAlgebra, r: RRBRepresentation,
                       omega=None, varpi=None, chi=None, validate: bool = True) -> RRBAlgebra:
    """The RRB structure on (g+H, V+W), optionally twisted by a 2-cochain.

    ``omega(i, j)``, ``varpi(i, k)``, ``chi(k)`` return coordinate vectors in
    H, W, H for basis indices of g and V.
    """
    if r.base != a:
        raise ValueError("representation is not over the given relative Rota-Baxter algebra")
    n, m, p, q = a.g.dim, a.v_dim, r.h_dim, r.w_dim
    base_lie = semidirect_lie(r.rho_h)
    table = [list(row) for row in base_lie.constants]
    if omega is not None:
        for i in range(n):
            for j in range(n):
                if i != j:
                    table[i][j] = vadd(table[i][j], zeros(n) + tuple(omega(i, j)))
    total_lie = LieAlgebra.from_table(n + p, table, validate=validate)

    action = []
    for i in range(n):
        low = Matrix.from_columns([tuple(varpi(i, k)) if varpi else zeros(q) for k in range(m)], q)
        action.append(Matrix.block([[a.rep.action[i], Matrix.zero(m, q)],
                                    [low, r.rho_w.action[i]]]))
    for s in range(p):
        low = Matrix.from_columns([vscale(-1, r.mu[k].column(s)) for k in range(m)], q)
        action.append(Matrix.block([[Matrix.zero(m, m), Matrix.zero(m, q)],
                                    [low, Matrix.zero(q, q)]]))
    total_rep = LinearRep(total_lie, m + q, tuple(action), validate=validate)

    low = Matrix.from_columns([tuple(chi(k)) if chi else zeros(p) for k in range(m)], p)
    op = Matrix.block([[a.T, Matrix.zero(n, q)], [low, r.curlyT]])
    return RRBAlgebra(total_lie, total_rep, op, validate=validate)


def semidirect_rrb(a: RRBAlgebra, r: RRBRepresentation) -> RRBAlgebra:
    return twisted_semidirect(a, r)


def twisted_semidirect_rb(a: RBAlgebra, r: RBRepresentation, omega=None, chi=None,
                          validate: bool = True) -> RBAlgebra:
    if r.base != a:
        raise ValueError("representation is not over the given Rota-Baxter algebra")
    n, q = a.g.dim, r.w_dim
    table = [list(row) for row in semidirect_lie(r.rho_w).constants]
    if omega is not None:
        for i in range(n):
            for j in range(n):
                if i != j:
                    table[i][j] = vadd(table[i][j], zeros(n) + tuple(omega(i, j)))
    total = LieAlgebra.from_table(n + q, table, validate=validate)
    low = Matrix.from_columns([tuple(chi(k)) if chi else zeros(q) for k in range(n)], q)
    op = Matrix.block([[a.T, Matrix.zero(n, q)], [low, r.curlyT]])
    return RBAlgebra(total, op, validate=validate)


def semidirect_rb(a: RBAlgebra, r: RBRepresentation) -> RBAlgebra:
    return twisted_semidirect_rb(a, r)


def induced_prelie(a: RRBAlgebra) -> PreLieAlgebra:
    """u . v = rho(Tu) v on V."""
    m = a.v_dim
    table = [[a.rep.act(a.T.column(i)).column(j) for j in range(m)] for i in range(m)]
    return PreLieAlgebra.from_table(m, table)


def induced_prelie_rep(a: RRBAlgebra, r: RRBRepresentation) -> PreLieRep:
    """theta = rho_w o T and vartheta(u) = -mu(u) o curlyT on W."""
    if r.base != a:
        raise ValueError("representation is not over the given relative Rota-Baxter algebra")
    theta = tuple(r.rho_w.act(a.T.column(k)) for k in range(a.v_dim))
    vartheta = tuple(-(r.mu[k] @ r.curlyT) for k in range(a.v_dim))
    return PreLieRep(induced_prelie(a), r.w_dim, theta, vartheta)


def rb_to_rrb(a: RBAlgebra) -> RRBAlgebra:
    return RRBAlgebra(a.g, adjoint_rep(a.g), a.T)


def rb_rep_to_rrb_rep(r: RBRepresentation) -> RRBRepresentation:
    """[W --curlyT--> W; rho_w, rho_w, rho_w] over (g, ad, T)."""
    base = rb_to_rrb(r.base)
    return RRBRepresentation(base, r.curlyT, r.rho_w, r.rho_w, r.rho_w.action)


def adjoint_rb_rep(a: RBAlgebra) -> RBRepresentation:
    return RBRepresentation(a, a.T, adjoint_rep(a.g))


def dual_rb_rep(r: RBRepresentation) -> RBRepresentation:
    return RBRepresentation(r.base, -r.curlyT.T, dual_rep(r.rho_w))


def coadjoint_rb_rep(a: RBAlgebra) -> RBRepresentation:
    return dual_rb_rep(adjoint_rb_rep(a))


def zero_rb_rep(a: RBAlgebra, w_dim: int) -> RBRepresentation:
    return RBRepresentation(a, Matrix.zero(w_dim, w_dim), LinearRep.trivial(a.g, w_dim))


def rrb_from_r_matrix(g: LieAlgebra, r: Matrix):
    """Candidate (g, coadjoint, r#) for an antisymmetric r, with its verdict."""
    if r.shape != (g.dim, g.dim) or not (r + r.T).is_zero():
        raise ValueError("r must be an antisymmetric dim g x dim g matrix")
    cand = RRBAlgebra.unchecked(g, dual_rep(adjoint_rep(g)), r)
    return cand, check_rrb(cand)


# ---------------------------------------------------------------- End(W -> H)

@dataclass(frozen=True)
class EndComplexData:
    algebra: RRBAlgebra
    end_basis: tuple  # pairs (A0, A1) spanning End(W -> H)
    ker_basis: Matrix  # columns span ker curlyT inside W


def end_complex_rrb(curlyT: Matrix) -> EndComplexData:
    """The RRB algebra (End(W -> H), (Hom(H, ker curlyT), varsigma), Omega)."""
    p, q = curlyT.shape
    # (A0, A1) flattened row-major: A0 (p x p) then A1 (q x q)
    dim = p * p + q * q

    def unpack(v):
        a0 = Matrix.from_rows([v[i * p:(i + 1) * p] for i in range(p)], p)
        off = p * p
        a1 = Matrix.from_rows([v[off + i * q: off + (i + 1) * q] for i in range(q)], q)
        return a0, a1

    def pack(a0, a1):
        return tuple(x for r in a0.data for x in r) + tuple(x for r in a1.data for x in r)

    cols = []
    for t in range(dim):
        a0, a1 = unpack(unit(dim, t))
        c = a0 @ curlyT - curlyT @ a1
        cols.append(tuple(x for r in c.data for x in r))
    constraint = Matrix.from_columns(cols, p * q)
    end_space = kernel(constraint)
    basis = [unpack(b) for b in end_space.basis]
    coords_matrix = end_space.matrix()
    n = len(basis)

    def end_coords(a0, a1):
        x = solve(coords_matrix, pack(a0, a1))
        if x is None:
            raise ArithmeticError("bracket left End(W -> H)")
        return x

    table = [[end_coords(basis[i][0] @ basis[j][0] - basis[j][0] @ basis[i][0],
                         basis[i][1] @ basis[j][1] - basis[j][1] @ basis[i][1])
              for j in range(n)] for i in range(n)]
    g = LieAlgebra.from_table(n, table)

    ker = kernel(curlyT)
    K = ker.matrix() if ker.dim else Matrix.zero(q, 0)
    k = ker.dim
    # Hom(H, ker curlyT) ~ k x p matrices Psi, Phi = K Psi; basis is row-major elementary Psi
    m = k * p

    def phi_of(t):
        psi = Matrix.from_rows([unit(m, t)[i * p:(i + 1) * p] for i in range(k)], p) if k else Matrix.zero(0, p)
        return K @ psi

    def psi_coords(phi):
        out = []
        for c in range(p):
            x = solve(K, phi.column(c)) if k else ()
            if x is None:
                raise ArithmeticError("action left Hom(H, ker curlyT)")
            out.append(x)
        # row-major over (row of Psi, column of Psi)
        return tuple(out[c][r] for r in range(k) for c in range(p))

    phis = [phi_of(t) for t in range(m)]
    action = []
    for a0, a1 in basis:
        cols = [psi_coords(a1 @ phi - phi @ a0) for phi in phis]
        action.append(Matrix.from_columns(cols, m))
    rep = LinearRep(g, m, tuple(action))
    omega_cols = [end_coords(Matrix.zero(p, p), phi @ curlyT) for phi in phis]
    omega = Matrix.from_columns(omega_cols, n)
    return EndComplexData(RRBAlgebra(g, rep, omega), tuple(basis), K)


# ---------------------------------------------------------------- derivations and homomorphisms

def _lie_derivation_report(report, g: LieAlgebra, f: Matrix, name="lie_derivation"):
    e = _basis(g.dim)
    for i, j in combinations(range(g.dim), 2):
        lhs = f.apply(g.constants[i][j])
        rhs = vadd(g.bracket(f.apply(e[i]), e[j]), g.bracket(e[i], f.apply(e[j])))
        report.expect(name, (i, j), vsub(lhs, rhs))


def check_derivation(a: RRBAlgebra, f_g: Matrix, f_V: Matrix) -> ValidationReport:
    if f_g.shape != (a.g.dim, a.g.dim) or f_V.shape != (a.v_dim, a.v_dim):
        raise DimensionError("derivation components have the wrong shape")
    report = ValidationReport()
    _lie_derivation_report(report, a.g, f_g)
    report.expect("der1_commutes_with_T", (), a.T @ f_V - f_g @ a.T)
    e = _basis(a.g.dim)
    ev = _basis(a.v_dim)
    for i in range(a.g.dim):
        for k in range(a.v_dim):
            lhs = f_V.apply(a.rho(e[i], ev[k]))
            rhs = vadd(a.rho(e[i], f_V.apply(ev[k])), a.rho(f_g.apply(e[i]), ev[k]))
            report.expect("der2_action", (i, k), vsub(lhs, rhs))
    return report


def check_rb_derivation(a: RBAlgebra, f: Matrix) -> ValidationReport:
    if f.shape != (a.g.dim, a.g.dim):
        raise DimensionError("derivation must be square of size dim g")
    report = ValidationReport()
    _lie_derivation_report(report, a.g, f)
    report.expect("commutes_with_T", (), f @ a.T - a.T @ f)
    return report


def derivation_via_semidirect(a: RRBAlgebra, f_g: Matrix, f_V: Matrix) -> ValidationReport:
    """Check diag(f_g, f_V) against the RB algebra (g x| V, [[0, T], [0, 0]])."""
    n, m = a.g.dim, a.v_dim
    op = Matrix.block([[Matrix.zero(n, n), a.T], [Matrix.zero(m, n), Matrix.zero(m, m)]])
    rb = RBAlgebra(semidirect_lie(a.rep), op)
    return check_rb_derivation(rb, Matrix.diag(f_g, f_V))


def check_rrb_homomorphism(a: RRBAlgebra, b: RRBAlgebra, phi: Matrix, varphi: Matrix) -> ValidationReport:
    if phi.shape != (b.g.dim, a.g.dim) or varphi.shape != (b.v_dim, a.v_dim):
        raise DimensionError("homomorphism components have the wrong shape")
    report = ValidationReport()
    e = _basis(a.g.dim)
    for i, j in combinations(range(a.g.dim), 2):
        lhs = phi.apply(a.g.constants[i][j])
        rhs = b.g.bracket(phi.apply(e[i]), phi.apply(e[j]))
        report.expect("lie_homomorphism", (i, j), vsub(lhs, rhs))
    report.expect("operator_intertwining", (), b.T @ varphi - phi @ a.T)
    ev = _basis(a.v_dim)
    for i in range(a.g.dim):
        for k in range(a.v_dim):
            lhs = varphi.apply(a.rho(e[i], ev[k]))
            rhs = b.rho(phi.apply(e[i]), varphi.apply(ev[k]))
            report.expect("action_intertwining", (i, k), vsub(lhs, rhs))
    return report


def check_rb_homomorphism(a: RBAlgebra, b: RBAlgebra, phi: Matrix) -> ValidationReport:
    if phi.shape != (b.g.dim, a.g.dim):
        raise DimensionError("homomorphism has the wrong shape")
    report = ValidationReport()
    e = _basis(a.g.dim)
    for i, j in combinations(range(a.g.dim), 2):
        lhs = phi.apply(a.g.constants[i][j])
        rhs = b.g.bracket(phi.apply(e[i]), phi.apply(e[j]))
        report.expect("lie_homomorphism", (i, j), vsub(lhs, rhs))
    report.expect("operator_intertwining", (), b.T @ phi - phi @ a.T)
    return report


# ---------------------------------------------------------------- associative input

def check_associative_data(mult, T: Matrix, module_action: Sequence[Matrix], curlyT: Matrix) -> ValidationReport:
    """Associativity, the weight-zero Rota-Baxter identity, module axioms and
    T(x) curlyT(u) = curlyT(x curlyT(u) + T(x) u)."""
    n = len(mult)
    mult = [[vec(mult[i][j]) for j in range(n)] for i in range(n)]

    def mul(x, y):
        return vsum([vscale(a * b, mult[i][j]) for i, a in support(x) for j, b in support(y)], n)

    e = _basis(n)
    report = ValidationReport()
    for i in range(n):
        for j in range(n):
            for k in range(n):
                report.expect("associativity", (i, j, k),
                              vsub(mul(mult[i][j], e[k]), mul(e[i], mult[j][k])))
    for i in range(n):
        for j in range(n):
            tx, ty = T.apply(e[i]), T.apply(e[j])
            report.expect("rota_baxter_associative", (i, j),
                          vsub(mul(tx, ty), T.apply(vadd(mul(tx, e[j]), mul(e[i], ty)))))
    w = curlyT.rows
    L = list(module_action)

    def left(x):
        return _combo(L, x, w, w)

    for i in range(n):
        for j in range(n):
            report.expect("module", (i, j), left(mult[i][j]) - L[i] @ L[j])
    for i in range(n):
        lt = left(T.column(i))
        report.expect("module_compatibility", (i,), lt @ curlyT - curlyT @ (L[i] @ curlyT + lt))
    return report


def from_associative(mult, T: Matrix, module_action: Sequence[Matrix], curlyT: Matrix):
    """Commutator Rota-Baxter Lie algebra and representation from associative data."""
    n = len(mult)
    if T.shape != (n, n):
        raise DimensionError("T must be square of the algebra dimension")
    if len(module_action) != n or any(m.shape != curlyT.shape for m in module_action):
        raise DimensionError("module action matrices must match curlyT")
    report = check_associative_data(mult, T, module_action, curlyT)
    if not report.valid:
        raise AxiomError("Rota-Baxter associative data", report)
    table = [[vsub(vec(mult[i][j]), vec(mult[j][i])) for j in range(n)] for i in range(n)]
    g = LieAlgebra.from_table(n, table)
    a = RBAlgebra(g, T)
    rep = LinearRep(g, curlyT.rows, tuple(module_action))
    return a, RBRepresentation(a, curlyT, rep)


__all__ = [
    "RRBAlgebra", "RBAlgebra", "RRBRepresentation", "RBRepresentation", "EndComplexData",
    "check_rrb", "check_rb", "check_rrb_representation", "check_rb_representation",
    "adjoint_rrb_rep", "dual_rrb_rep", "coadjoint_rrb_rep", "zero_rrb_rep", "direct_sum_rrb_rep",
    "semidirect_rrb", "twisted_semidirect", "semidirect_rb", "twisted_semidirect_rb",
    "induced_prelie", "induced_prelie_rep", "rb_to_rrb", "rb_rep_to_rrb_rep",
    "adjoint_rb_rep", "dual_rb_rep", "coadjoint_rb_rep", "zero_rb_rep", "rrb_from_r_matrix",
    "end_complex_rrb", "check_derivation", "check_rb_derivation", "derivation_via_semidirect",
    "check_rrb_homomorphism", "check_rb_homomorphism", "check_associative_data", "from_associative",
    "Subspace",
]
