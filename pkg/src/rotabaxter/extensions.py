"""Abelian extensions and their 2-cocycles, for RRB and RB algebras.

Extensions always live on the concatenated spaces g + H and V + W with the
canonical inclusion and projection; a section is a pair of matrices whose top
blocks are identities.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cochains import AltBlock
from .cohomology import Cochain, rb_scheme, scheme
from .lie import LinearRep
from .linalg import Matrix, unit, vsub, zeros
from .report import ValidationReport
from .structures import (
    RBAlgebra,
    RBRepresentation,
    RRBAlgebra,
    RRBRepresentation,
    check_rb_homomorphism,
    check_rrb_homomorphism,
    twisted_semidirect,
    twisted_semidirect_rb,
)


class CocycleError(ValueError):
    """The input cochain is not a cocycle; ``blocks`` names the failing output blocks."""

    def __init__(self, message: str, blocks):
        super().__init__(f"{message}: violated blocks {', '.join(blocks)}")
        self.blocks = list(blocks)


class SectionError(ValueError):
    pass


class IsomorphismError(ValueError):
    def __init__(self, message: str, report: ValidationReport):
        super().__init__(message)
        self.report = report


def _require_cocycle(c: Cochain):
    image = c.coboundary()
    if any(image.coords):
        bad = [name for name, v in image.blocks().items() if any(v)]
        raise CocycleError("not a cocycle", bad)


# ---------------------------------------------------------------- relative case

@dataclass(frozen=True)
class TwoCocycle:
    """(omega, varpi, chi) in the degree-2 block layout."""

    omega: tuple
    varpi: tuple
    chi: tuple

    def to_cochain(self, base: RRBAlgebra, coeffs: RRBRepresentation) -> Cochain:
        return Cochain.from_blocks(scheme(base, coeffs, 2),
                                   {"f_h": self.omega, "f_w": self.varpi, "theta": self.chi})

    @classmethod
    def from_cochain(cls, c: Cochain) -> "TwoCocycle":
        b = c.blocks()
        return cls(b["f_h"], b["f_w"], b["theta"])

    @classmethod
    def zero(cls, base: RRBAlgebra, coeffs: RRBRepresentation) -> "TwoCocycle":
        return cls.from_cochain(Cochain(scheme(base, coeffs, 2), zeros(scheme(base, coeffs, 2).dim)))


@dataclass(frozen=True)
class AbelianExtension:
    total: RRBAlgebra
    base: RRBAlgebra
    h_dim: int
    w_dim: int


def extension_from_cocycle(base: RRBAlgebra, coeffs: RRBRepresentation, z: TwoCocycle) -> AbelianExtension:
    c = z.to_cochain(base, coeffs)
    _require_cocycle(c)
    lay = c.scheme.layout
    total = twisted_semidirect(
        base, coeffs,
        omega=lambda i, j: lay["f_h"].value(c.coords, (i, j)),
        varpi=lambda i, k: lay["f_w"].value(c.coords, (i,), (k,)),
        chi=lambda k: lay["theta"].value(c.coords, (k,)),
    )
    return AbelianExtension(total, base, coeffs.h_dim, coeffs.w_dim)


def canonical_section(e: AbelianExtension):
    n, m = e.base.g.dim, e.base.v_dim
    return (Matrix.block([[Matrix.identity(n)], [Matrix.zero(e.h_dim, n)]]),
            Matrix.block([[Matrix.identity(m)], [Matrix.zero(e.w_dim, m)]]))


def _check_section(s: Matrix, n: int, extra: int, what: str):
    if s.shape != (n + extra, n):
        raise SectionError(f"{what} section has shape {s.shape}, expected {(n + extra, n)}")
    if s.submatrix(range(n), range(n)) != Matrix.identity(n):
        raise SectionError(f"{what} section does not compose with the projection to the identity")


def check_extension(e: AbelianExtension) -> ValidationReport:
    """Structural conditions on an extension in concatenated form."""
    n, m, p, q = e.base.g.dim, e.base.v_dim, e.h_dim, e.w_dim
    g, rep, T = e.total.g, e.total.rep, e.total.T
    report = ValidationReport()
    for a in range(n + p):
        for b in range(n + p):
            br = g.constants[a][b]
            if a >= n and b >= n:
                report.expect("h_abelian", (a, b), br)
            pa = unit(n, a) if a < n else zeros(n)
            pb = unit(n, b) if b < n else zeros(n)
            report.expect("projection_bracket", (a, b), vsub(br[:n], e.base.g.bracket(pa, pb)))
        for k in range(m + q):
            out = rep.action[a].column(k)
            if k >= m:
                report.expect("w_invariant", (a, k), out[:m])
                if a >= n:
                    report.expect("h_acts_trivially_on_w", (a, k), out)
            else:
                expect = e.base.rep.action[a].column(k) if a < n else zeros(m)
                report.expect("projection_action", (a, k), vsub(out[:m], expect))
    for k in range(m + q):
        col = T.column(k)
        if k >= m:
            report.expect("operator_restriction", (k,), col[:n])
        else:
            report.expect("operator_projection", (k,), vsub(col[:n], e.base.T.column(k)))
    return report


def induced_coeff_rep_from_extension(e: AbelianExtension, section) -> RRBRepresentation:
    """rho_h(x)a = [s x, a], rho_w(x)xi = rep(s x)xi, mu(u)a = -rep(a) s(u), curlyT = operator on W."""
    sg, sv = section
    n, m, p, q = e.base.g.dim, e.base.v_dim, e.h_dim, e.w_dim
    _check_section(sg, n, p, "Lie algebra")
    _check_section(sv, m, q, "representation")
    g, rep = e.total.g, e.total.rep
    rho_h, rho_w = [], []
    for i in range(n):
        x = sg.column(i)
        rho_h.append(Matrix.from_columns([g.bracket(x, unit(n + p, n + a))[n:] for a in range(p)], p))
        act = rep.act(x)
        rho_w.append(Matrix.from_columns([act.column(m + b)[m:] for b in range(q)], q))
    mu = []
    for k in range(m):
        su = sv.column(k)
        mu.append(Matrix.from_columns([tuple(-x for x in rep.action[n + a].apply(su)[m:]) for a in range(p)], q))
    curly = Matrix.from_columns([e.total.T.column(m + b)[n:] for b in range(q)], p)
    return RRBRepresentation(e.base, curly, LinearRep(e.base.g, p, tuple(rho_h)),
                             LinearRep(e.base.g, q, tuple(rho_w)), tuple(mu))


def cocycle_from_extension(e: AbelianExtension, section) -> TwoCocycle:
    sg, sv = section
    coeffs = induced_coeff_rep_from_extension(e, section)
    base, g, rep, T = e.base, e.total.g, e.total.rep, e.total.T
    n, m, p, q = base.g.dim, base.v_dim, e.h_dim, e.w_dim
    sch = scheme(base, coeffs, 2)
    lay = sch.layout
    coords = [0] * sch.dim

    def put(block: AltBlock, tup, extras, values):
        b = block.base_index(tup, extras)
        for c, x in enumerate(values):
            coords[b + c] = x

    for (i, j), _ in lay["f_h"].keys():
        val = vsub(g.bracket(sg.column(i), sg.column(j)), sg.apply(base.g.constants[i][j]))
        put(lay["f_h"], (i, j), (), val[n:])
    for (i,), (k,) in lay["f_w"].keys():
        val = vsub(rep.apply(sg.column(i), sv.column(k)), sv.apply(base.rep.action[i].column(k)))
        put(lay["f_w"], (i,), (k,), val[m:])
    for (k,), _ in lay["theta"].keys():
        val = vsub(T.apply(sv.column(k)), sg.apply(base.T.column(k)))
        put(lay["theta"], (k,), (), val[n:])
    c = Cochain(sch, coords)
    _require_cocycle(c)
    return TwoCocycle.from_cochain(c)


@dataclass(frozen=True)
class ExtensionIsomorphism:
    kappa: Matrix
    lambda_: Matrix

    def to_json(self):
        from .serialize import matrix_to_json

        return {"kappa": matrix_to_json(self.kappa), "lambda": matrix_to_json(self.lambda_)}


def _degree_one(base, coeffs, N: Matrix, S: Matrix) -> Cochain:
    sch = scheme(base, coeffs, 1)
    lay = sch.layout
    coords = [0] * sch.dim
    for (i,), _ in lay["f_h"].keys():
        b = lay["f_h"].base_index((i,), ())
        for c in range(coeffs.h_dim):
            coords[b + c] = N[c, i]
    for _, (k,) in lay["f_w"].keys():
        b = lay["f_w"].base_index((), (k,))
        for c in range(coeffs.w_dim):
            coords[b + c] = S[c, k]
    return Cochain(sch, coords)


def iso_from_coboundary(base: RRBAlgebra, coeffs: RRBRepresentation, z1: TwoCocycle, z2: TwoCocycle,
                        witness) -> ExtensionIsomorphism:
    """kappa(x, a) = (x, N x + a), lambda(u, xi) = (u, S u + xi) when z1 - z2 = D(N, S)."""
    N, S = witness
    n, m, p, q = base.g.dim, base.v_dim, coeffs.h_dim, coeffs.w_dim
    if N.shape != (p, n) or S.shape != (q, m):
        raise ValueError("witness maps have the wrong shape")
    c1, c2 = z1.to_cochain(base, coeffs), z2.to_cochain(base, coeffs)
    diff = vsub(vsub(c1.coords, c2.coords), _degree_one(base, coeffs, N, S).coboundary().coords)
    if any(diff):
        bad = [name for name, v in c1.scheme.layout.split(diff).items() if any(v)]
        raise CocycleError("witness does not satisfy z1 - z2 = D(N, S)", bad)
    kappa = Matrix.block([[Matrix.identity(n), Matrix.zero(n, p)], [N, Matrix.identity(p)]])
    lam = Matrix.block([[Matrix.identity(m), Matrix.zero(m, q)], [S, Matrix.identity(q)]])
    e1 = extension_from_cocycle(base, coeffs, z1)
    e2 = extension_from_cocycle(base, coeffs, z2)
    report = check_rrb_homomorphism(e1.total, e2.total, kappa, lam)
    if not report.valid:
        raise IsomorphismError("maps do not intertwine the two extensions", report)
    return ExtensionIsomorphism(kappa, lam)


def verify_isomorphism(base, coeffs, z1: TwoCocycle, z2: TwoCocycle, kappa: Matrix, lam: Matrix) -> ValidationReport:
    e1 = extension_from_cocycle(base, coeffs, z1)
    e2 = extension_from_cocycle(base, coeffs, z2)
    return check_rrb_homomorphism(e1.total, e2.total, kappa, lam)


# ---------------------------------------------------------------- Rota-Baxter case

@dataclass(frozen=True)
class TwoCocycleRB:
    omega: tuple
    chi: tuple

    def to_cochain(self, a: RBAlgebra, r: RBRepresentation) -> Cochain:
        return Cochain.from_blocks(rb_scheme(a, r, 2), {"f": self.omega, "theta": self.chi})

    @classmethod
    def from_cochain(cls, c: Cochain) -> "TwoCocycleRB":
        b = c.blocks()
        return cls(b["f"], b["theta"])


@dataclass(frozen=True)
class AbelianExtensionRB:
    total: RBAlgebra
    base: RBAlgebra
    w_dim: int


def extension_from_cocycle_rb(a: RBAlgebra, r: RBRepresentation, z: TwoCocycleRB) -> AbelianExtensionRB:
    c = z.to_cochain(a, r)
    _require_cocycle(c)
    lay = c.scheme.layout
    total = twisted_semidirect_rb(
        a, r,
        omega=lambda i, j: lay["f"].value(c.coords, (i, j)),
        chi=lambda k: lay["theta"].value(c.coords, (k,)),
    )
    return AbelianExtensionRB(total, a, r.w_dim)


def canonical_section_rb(e: AbelianExtensionRB) -> Matrix:
    n = e.base.g.dim
    return Matrix.block([[Matrix.identity(n)], [Matrix.zero(e.w_dim, n)]])


def induced_rep_from_extension_rb(e: AbelianExtensionRB, section: Matrix) -> RBRepresentation:
    n, q = e.base.g.dim, e.w_dim
    _check_section(section, n, q, "Lie algebra")
    g = e.total.g
    rho = [Matrix.from_columns([g.bracket(section.column(i), unit(n + q, n + b))[n:] for b in range(q)], q)
           for i in range(n)]
    curly = Matrix.from_columns([e.total.T.column(n + b)[n:] for b in range(q)], q)
    return RBRepresentation(e.base, curly, LinearRep(e.base.g, q, tuple(rho)))


def cocycle_from_extension_rb(e: AbelianExtensionRB, section: Matrix) -> TwoCocycleRB:
    r = induced_rep_from_extension_rb(e, section)
    base, g, T = e.base, e.total.g, e.total.T
    n = base.g.dim
    sch = rb_scheme(base, r, 2)
    lay = sch.layout
    coords = [0] * sch.dim
    for (i, j), _ in lay["f"].keys():
        val = vsub(g.bracket(section.column(i), section.column(j)), section.apply(base.g.constants[i][j]))
        b = lay["f"].base_index((i, j), ())
        coords[b:b + e.w_dim] = val[n:]
    for (k,), _ in lay["theta"].keys():
        val = vsub(T.apply(section.column(k)), section.apply(base.T.column(k)))
        b = lay["theta"].base_index((k,), ())
        coords[b:b + e.w_dim] = val[n:]
    c = Cochain(sch, coords)
    _require_cocycle(c)
    return TwoCocycleRB.from_cochain(c)


def iso_from_coboundary_rb(a: RBAlgebra, r: RBRepresentation, z1: TwoCocycleRB, z2: TwoCocycleRB,
                           N: Matrix) -> Matrix:
    """kappa(x, a) = (x, a + N x) when z1 - z2 = D_RB(N)."""
    n, q = a.g.dim, r.w_dim
    if N.shape != (q, n):
        raise ValueError("witness map has the wrong shape")
    sch1 = rb_scheme(a, r, 1)
    lay = sch1.layout
    coords = [0] * sch1.dim
    for (i,), _ in lay["f"].keys():
        b = lay["f"].base_index((i,), ())
        for c in range(q):
            coords[b + c] = N[c, i]
    dn = Cochain(sch1, coords).coboundary()
    c1, c2 = z1.to_cochain(a, r), z2.to_cochain(a, r)
    diff = vsub(vsub(c1.coords, c2.coords), dn.coords)
    if any(diff):
        bad = [name for name, v in c1.scheme.layout.split(diff).items() if any(v)]
        raise CocycleError("witness does not satisfy z1 - z2 = D(N)", bad)
    kappa = Matrix.block([[Matrix.identity(n), Matrix.zero(n, q)], [N, Matrix.identity(q)]])
    e1 = extension_from_cocycle_rb(a, r, z1)
    e2 = extension_from_cocycle_rb(a, r, z2)
    report = check_rb_homomorphism(e1.total, e2.total, kappa)
    if not report.valid:
        raise IsomorphismError("map does not intertwine the two extensions", report)
    return kappa


def check_extension_rb(e: AbelianExtensionRB) -> ValidationReport:
    n, q = e.base.g.dim, e.w_dim
    g, T = e.total.g, e.total.T
    report = ValidationReport()
    for a in range(n + q):
        for b in range(n + q):
            br = g.constants[a][b]
            if a >= n and b >= n:
                report.expect("w_abelian", (a, b), br)
            pa = unit(n, a) if a < n else zeros(n)
            pb = unit(n, b) if b < n else zeros(n)
            report.expect("projection_bracket", (a, b), vsub(br[:n], e.base.g.bracket(pa, pb)))
    for k in range(n + q):
        col = T.column(k)
        if k >= n:
            report.expect("operator_restriction", (k,), col[:n])
        else:
            report.expect("operator_projection", (k,), vsub(col[:n], e.base.T.column(k)))
    return report
