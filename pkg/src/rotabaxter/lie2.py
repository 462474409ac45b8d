"""Skeletal (relative) Rota-Baxter Lie 2-algebras and their 3-cocycles.

Both differentials vanish. Multilinear data is stored in the same block layouts
as cochains: ``l3`` as wedge^3 g0 -> g1, ``rho2`` as wedge^2 g0 (x) V0 -> V1 and
``T2`` as wedge^2 V0 -> g1. The dictionary with the degree-3 cocycle is

    f_h = l3,   f_w = -rho2,   theta = -T2,
    rho_h(x) = l2(x, -),   rho_w = rho0 on V1,   mu(u)a = -rho1(a)u,   curlyT = T1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cochains import AltBlock, evaluate_at
from .cohomology import Cochain, rb_scheme, scheme
from .extensions import CocycleError
from .lie import LieAlgebra, LinearRep, check_antisymmetry, check_jacobi, check_representation
from .linalg import DimensionError, Matrix, unit, vadd, vscale, vsub, vsum, zeros
from .report import AxiomError, ValidationReport
from .structures import RBAlgebra, RBRepresentation, RRBAlgebra, RRBRepresentation


def _neg(v):
    return tuple(-x for x in v)


@dataclass(frozen=True)
class SkeletalRRB2:
    g0_dim: int
    g1_dim: int
    v0_dim: int
    v1_dim: int
    l2_gg: tuple  # l2_gg[i][j] = l2(x_i, x_j) in g0
    l2_gh: tuple  # matrices of l2(x_i, -) on g1
    l3: tuple
    rho0_v0: tuple
    rho0_v1: tuple
    rho1: tuple  # rho1[a]: V0 -> V1 for the basis vector a of g1
    rho2: tuple
    T0: Matrix
    T1: Matrix
    T2: tuple

    @property
    def l3_block(self) -> AltBlock:
        return AltBlock(self.g0_dim, 3, (), self.g1_dim)

    @property
    def rho2_block(self) -> AltBlock:
        return AltBlock(self.g0_dim, 2, (self.v0_dim,), self.v1_dim)

    @property
    def T2_block(self) -> AltBlock:
        return AltBlock(self.v0_dim, 2, (), self.g1_dim)

    def check_shapes(self):
        n, h, m, q = self.g0_dim, self.g1_dim, self.v0_dim, self.v1_dim
        problems = []
        if len(self.l2_gg) != n or any(len(r) != n or any(len(v) != n for v in r) for r in self.l2_gg):
            problems.append("l2_gg")
        for name, mats, count, shape in [("l2_gh", self.l2_gh, n, (h, h)), ("rho0_v0", self.rho0_v0, n, (m, m)),
                                         ("rho0_v1", self.rho0_v1, n, (q, q)), ("rho1", self.rho1, h, (q, m))]:
            if len(mats) != count or any(x.shape != shape for x in mats):
                problems.append(name)
        for name, coords, block in [("l3", self.l3, self.l3_block), ("rho2", self.rho2, self.rho2_block),
                                    ("T2", self.T2, self.T2_block)]:
            if len(coords) != block.size:
                problems.append(name)
        if self.T0.shape != (n, m):
            problems.append("T0")
        if self.T1.shape != (h, q):
            problems.append("T1")
        if problems:
            raise DimensionError("shape mismatch in " + ", ".join(problems))

    # evaluation helpers
    def g0(self) -> LieAlgebra:
        return LieAlgebra.unchecked(self.g0_dim, self.l2_gg)

    def l2(self, x, y):
        return self.g0().bracket(x, y)

    def l2_act(self, x, alpha):
        out = zeros(self.g1_dim)
        for i, c in enumerate(x):
            if c:
                out = vadd(out, vscale(c, self.l2_gh[i].apply(alpha)))
        return out

    def l3_at(self, x, y, z):
        return evaluate_at(self.l3_block, self.l3, [x, y, z])

    def rho0(self, x, which: str) -> Matrix:
        mats = self.rho0_v0 if which == "v0" else self.rho0_v1
        dim = self.v0_dim if which == "v0" else self.v1_dim
        acc = Matrix.zero(dim, dim)
        for i, c in enumerate(x):
            if c:
                acc = acc + mats[i].scale(c)
        return acc

    def rho1_of(self, alpha) -> Matrix:
        acc = Matrix.zero(self.v1_dim, self.v0_dim)
        for a, c in enumerate(alpha):
            if c:
                acc = acc + self.rho1[a].scale(c)
        return acc

    def rho2_of(self, x, y) -> Matrix:
        cols = [evaluate_at(self.rho2_block, self.rho2, [x, y], [unit(self.v0_dim, k)])
                for k in range(self.v0_dim)]
        return Matrix.from_columns(cols, self.v1_dim)

    def T2_at(self, u, v):
        return evaluate_at(self.T2_block, self.T2, [u, v])


def check_skeletal_rrb2(s: SkeletalRRB2) -> ValidationReport:
    s.check_shapes()
    n, h, m = s.g0_dim, s.g1_dim, s.v0_dim
    g0 = s.g0()
    report = ValidationReport()
    report.merge(check_antisymmetry(g0))
    report.merge(check_jacobi(g0))
    report.merge(check_representation(LinearRep.unchecked(g0, h, s.l2_gh)), "g1_action.")
    e = [unit(n, i) for i in range(n)]

    # Jacobiator: l3 is closed
    for x in combinations(range(n), 4):
        terms = []
        for i in range(4):
            rest = [e[y] for p, y in enumerate(x) if p != i]
            terms.append(vscale(-1 if i % 2 else 1, s.l2_act(e[x[i]], s.l3_at(*rest))))
        for i, j in combinations(range(4), 2):
            rest = [e[y] for p, y in enumerate(x) if p not in (i, j)]
            terms.append(vscale(-1 if (i + j) % 2 else 1, s.l3_at(s.l2(e[x[i]], e[x[j]]), *rest)))
        report.expect("jacobiator", x, vsum(terms, h))

    # the representation is a homomorphism into End(V1 -> V0)
    report.merge(check_representation(LinearRep.unchecked(g0, m, s.rho0_v0)), "rho0_v0.")
    report.merge(check_representation(LinearRep.unchecked(g0, s.v1_dim, s.rho0_v1)), "rho0_v1.")
    for i in range(n):
        for a in range(h):
            lhs = s.rho1_of(s.l2_gh[i].column(a))
            rhs = s.rho0_v1[i] @ s.rho1[a] - s.rho1[a] @ s.rho0_v0[i]
            report.expect("rho1_equivariance", (i, a), lhs - rhs)
    for x, y, z in combinations(range(n), 3):
        lhs = Matrix.zero(s.v1_dim, m)
        rhs = Matrix.zero(s.v1_dim, m)
        for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
            lhs = lhs + s.rho2_of(s.l2(e[p], e[q]), e[r])
            phi = s.rho2_of(e[q], e[r])
            rhs = rhs + s.rho0_v1[p] @ phi - phi @ s.rho0_v0[p]
        lhs = lhs + s.rho1_of(s.l3_at(e[x], e[y], e[z]))
        report.expect("rho2_coherence", (x, y, z), lhs - rhs)

    # operator conditions
    ev = [unit(m, k) for k in range(m)]
    T0 = s.T0
    for i in range(m):
        for j in range(i, m):
            tu, tv = T0.column(i), T0.column(j)
            val = vsub(T0.apply(vsub(s.rho0(tu, "v0").column(j), s.rho0(tv, "v0").column(i))), s.l2(tu, tv))
            report.expect("rb_condition_i", (i, j), val)
    for b in range(s.v1_dim):
        for k in range(m):
            t1 = s.T1.column(b)
            tv = T0.column(k)
            inner = vsub(s.rho1_of(t1).column(k), s.rho0(tv, "v1").column(b))
            # l2(T1 xi, T0 v) = -l2(T0 v, T1 xi)
            val = vadd(s.T1.apply(inner), s.l2_act(tv, t1))
            report.expect("rb_condition_ii", (b, k), val)

    def term(v1, v2, v3):
        t2 = s.T2_at(v2, v3)
        out = s.l2_act(T0.apply(v1), t2)
        moved = vsub(s.rho0(T0.apply(v1), "v0").apply(v2), s.rho0(T0.apply(v2), "v0").apply(v1))
        out = vadd(out, s.T2_at(v3, moved))
        inner = vadd(s.rho1_of(t2).apply(v1), s.rho2_of(T0.apply(v2), T0.apply(v3)).apply(v1))
        return vadd(out, s.T1.apply(inner))

    for i in range(m):
        for j in range(m):
            for k in range(m):
                a, b, c = ev[i], ev[j], ev[k]
                val = vsum([term(a, b, c), term(b, c, a), term(c, a, b),
                            s.l3_at(T0.apply(a), T0.apply(b), T0.apply(c))], h)
                report.expect("rb_condition_iii", (i, j, k), val)
    return report


def _require_valid(s, check, what):
    report = check(s)
    if not report.valid:
        raise AxiomError(what, report)


def rrb2_to_3cocycle(s: SkeletalRRB2):
    """(base, coeffs, cocycle) with f_h = l3, f_w = -rho2, theta = -T2."""
    _require_valid(s, check_skeletal_rrb2, "skeletal relative Rota-Baxter Lie 2-algebra")
    g0 = LieAlgebra(s.g0_dim, s.l2_gg)
    base = RRBAlgebra(g0, LinearRep(g0, s.v0_dim, s.rho0_v0), s.T0)
    mu = tuple(Matrix.from_columns([_neg(s.rho1[a].column(k)) for a in range(s.g1_dim)], s.v1_dim)
               for k in range(s.v0_dim))
    coeffs = RRBRepresentation(base, s.T1, LinearRep(g0, s.g1_dim, s.l2_gh),
                               LinearRep(g0, s.v1_dim, s.rho0_v1), mu)
    c = Cochain.from_blocks(scheme(base, coeffs, 3),
                            {"f_h": s.l3, "f_w": _neg(s.rho2), "theta": _neg(s.T2)})
    if any(c.coboundary().coords):
        raise CocycleError("constructed cochain is not closed", [
            name for name, v in c.coboundary().blocks().items() if any(v)])
    return base, coeffs, c


def cocycle_to_rrb2(base: RRBAlgebra, coeffs: RRBRepresentation, c: Cochain) -> SkeletalRRB2:
    """Inverse of ``rrb2_to_3cocycle``: rho1(a)u = -mu(u)a, rho2 = -f_w, T2 = -theta."""
    cx = c.scheme.complex
    if c.scheme.degree != 3 or getattr(cx, "base", None) != base or getattr(cx, "coeffs", None) != coeffs:
        raise ValueError("expected a degree-3 cochain of the given base and coefficients")
    image = c.coboundary()
    if any(image.coords):
        raise CocycleError("not a cocycle", [name for name, v in image.blocks().items() if any(v)])
    b = c.blocks()
    m, q, h = base.v_dim, coeffs.w_dim, coeffs.h_dim
    rho1 = tuple(Matrix.from_columns([_neg(coeffs.mu[k].column(a)) for k in range(m)], q) for a in range(h))
    s = SkeletalRRB2(base.g.dim, h, m, q, base.g.constants, coeffs.rho_h.action, b["f_h"],
                     base.rep.action, coeffs.rho_w.action, rho1, _neg(b["f_w"]), base.T,
                     coeffs.curlyT, _neg(b["theta"]))
    _require_valid(s, check_skeletal_rrb2, "skeletal relative Rota-Baxter Lie 2-algebra")
    return s


# ---------------------------------------------------------------- Rota-Baxter case

@dataclass(frozen=True)
class SkeletalRB2:
    g0_dim: int
    g1_dim: int
    l2_gg: tuple
    l2_gh: tuple
    l3: tuple
    T0: Matrix
    T1: Matrix
    T2: tuple

    def to_relative(self) -> SkeletalRRB2:
        """The same data as a relative structure over the adjoint representation.

        rho1(a)x = l2(a, x) = -l2(x, a), rho2(x, y)z = -l3(x, y, z).
        """
        n, h = self.g0_dim, self.g1_dim
        if len(self.l2_gh) != n or any(x.shape != (h, h) for x in self.l2_gh):
            raise DimensionError("shape mismatch in l2_gh")
        rho1 = tuple(Matrix.from_columns([_neg(self.l2_gh[k].column(a)) for k in range(n)], h) for a in range(h))
        l3_block = AltBlock(n, 3, (), h)
        if len(self.l3) != l3_block.size:
            raise DimensionError("shape mismatch in l3")
        rho2_block = AltBlock(n, 2, (n,), h)
        rho2 = [0] * rho2_block.size
        for (x, y), (z,) in rho2_block.keys():
            val = evaluate_at(l3_block, self.l3, [unit(n, x), unit(n, y), unit(n, z)])
            b = rho2_block.base_index((x, y), (z,))
            rho2[b:b + h] = _neg(val)
        ad = tuple(LieAlgebra.unchecked(n, self.l2_gg).ad(unit(n, i)) for i in range(n))
        return SkeletalRRB2(n, h, n, h, self.l2_gg, self.l2_gh, self.l3, ad, self.l2_gh, rho1,
                            tuple(rho2), self.T0, self.T1, self.T2)


def check_skeletal_rb2(s: SkeletalRB2) -> ValidationReport:
    return check_skeletal_rrb2(s.to_relative())


def rb2_to_3cocycle(s: SkeletalRB2):
    """(base, rep, cocycle) with f = l3, theta = -T2 and rho_{g1}(x)a = l2(x, a)."""
    _require_valid(s, check_skeletal_rb2, "skeletal Rota-Baxter Lie 2-algebra")
    g0 = LieAlgebra(s.g0_dim, s.l2_gg)
    base = RBAlgebra(g0, s.T0)
    rep = RBRepresentation(base, s.T1, LinearRep(g0, s.g1_dim, s.l2_gh))
    c = Cochain.from_blocks(rb_scheme(base, rep, 3), {"f": s.l3, "theta": _neg(s.T2)})
    if any(c.coboundary().coords):
        raise CocycleError("constructed cochain is not closed", [
            name for name, v in c.coboundary().blocks().items() if any(v)])
    return base, rep, c


def cocycle_to_rb2(a: RBAlgebra, r: RBRepresentation, c: Cochain) -> SkeletalRB2:
    cx = c.scheme.complex
    if c.scheme.degree != 3 or getattr(cx, "a", None) != a or getattr(cx, "r", None) != r:
        raise ValueError("expected a degree-3 cochain of the given Rota-Baxter algebra and representation")
    image = c.coboundary()
    if any(image.coords):
        raise CocycleError("not a cocycle", [name for name, v in image.blocks().items() if any(v)])
    b = c.blocks()
    s = SkeletalRB2(a.g.dim, r.w_dim, a.g.constants, r.rho_w.action, b["f"], a.T, r.curlyT, _neg(b["theta"]))
    _require_valid(s, check_skeletal_rb2, "skeletal Rota-Baxter Lie 2-algebra")
    return s
