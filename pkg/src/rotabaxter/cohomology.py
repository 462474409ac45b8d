"""Cohomology dimensions, cochain membership, the long exact sequence, the map Xi, and subcomplex embeddings."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .cochains import DEFAULT_BUDGET, Layout, assemble, basis_arg, evaluate, lv_apply
from .complexes import AdjointComplex, CochainComplex, PreLieComplex, RBComplex, RRBComplex
from .lie import PreLieRep
from .linalg import Matrix, Subspace, image, kernel, rank, solve, vec, vsub
from .report import ValidationReport
from .structures import (
    RBAlgebra,
    RBRepresentation,
    RRBAlgebra,
    RRBRepresentation,
    adjoint_rb_rep,
    induced_prelie_rep,
    rb_rep_to_rrb_rep,
    rb_to_rrb,
    semidirect_rrb,
)


@lru_cache(maxsize=64)
def rrb_complex(base: RRBAlgebra, coeffs: RRBRepresentation, budget: int | None = DEFAULT_BUDGET) -> RRBComplex:
    return RRBComplex(base, coeffs, budget)


@lru_cache(maxsize=64)
def rb_complex(a: RBAlgebra, r: RBRepresentation, budget: int | None = DEFAULT_BUDGET) -> RBComplex:
    return RBComplex(a, r, budget)


# ---------------------------------------------------------------- schemes and cochains

@dataclass(frozen=True)
class CochainScheme:
    complex: CochainComplex
    degree: int

    @property
    def layout(self) -> Layout:
        return self.complex.layout(self.degree)

    @property
    def dim(self) -> int:
        return self.layout.size


def scheme(base: RRBAlgebra, coeffs: RRBRepresentation, degree: int,
           budget: int | None = DEFAULT_BUDGET) -> CochainScheme:
    return CochainScheme(rrb_complex(base, coeffs, budget), degree)


def rb_scheme(a: RBAlgebra, r: RBRepresentation, degree: int,
              budget: int | None = DEFAULT_BUDGET) -> CochainScheme:
    return CochainScheme(rb_complex(a, r, budget), degree)


@dataclass(frozen=True)
class Cochain:
    scheme: CochainScheme
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", vec(self.coords))
        if len(self.coords) != self.scheme.dim:
            raise ValueError(f"cochain of length {len(self.coords)} in degree {self.scheme.degree}"
                             f" with {self.scheme.dim} coordinates")

    @classmethod
    def from_blocks(cls, sch: CochainScheme, blocks: dict) -> "Cochain":
        return cls(sch, sch.layout.join(blocks))

    def blocks(self) -> dict:
        return self.scheme.layout.split(self.coords)

    def coboundary(self) -> "Cochain":
        d = self.scheme.complex.D(self.scheme.degree)
        return Cochain(CochainScheme(self.scheme.complex, self.scheme.degree + 1), d.apply(self.coords))

    def __sub__(self, other: "Cochain") -> "Cochain":
        _same_scheme(self, other)
        return Cochain(self.scheme, vsub(self.coords, other.coords))


def _same_scheme(c1: Cochain, c2: Cochain):
    if c1.scheme.complex is not c2.scheme.complex or c1.scheme.degree != c2.scheme.degree:
        raise ValueError("cochains live in different degrees or complexes")


def cochain_dim(sch: CochainScheme) -> int:
    return sch.dim


def _rrb(sch: CochainScheme) -> RRBComplex:
    if not isinstance(sch.complex, RRBComplex):
        raise TypeError("operation needs a relative Rota-Baxter cochain scheme")
    return sch.complex


def delta_matrix(sch: CochainScheme) -> Matrix:
    return _rrb(sch).delta(sch.degree)


def partial_matrix(sch: CochainScheme) -> Matrix:
    return _rrb(sch).partial(sch.degree)


def hT_matrix(sch: CochainScheme) -> Matrix:
    return _rrb(sch).h_T(sch.degree)


def coboundary_matrix(sch: CochainScheme) -> Matrix:
    return sch.complex.D(sch.degree)


def adjoint_complex_matrix(a: RRBAlgebra, degree: int, budget: int | None = DEFAULT_BUDGET) -> Matrix:
    return AdjointComplex(a, budget).D(degree)


def rb_coboundary_matrix(a: RBAlgebra, r: RBRepresentation, degree: int,
                         budget: int | None = DEFAULT_BUDGET) -> Matrix:
    return rb_complex(a, r, budget).D(degree)


def prelie_coboundary(pr: PreLieRep, degree: int, budget: int | None = DEFAULT_BUDGET) -> Matrix:
    return PreLieComplex(pr, budget).D(degree)


def is_cocycle(c: Cochain) -> bool:
    return not any(coboundary_matrix(c.scheme).apply(c.coords))


def is_coboundary(c: Cochain) -> Cochain | None:
    """A preimage b with D(b) = c, or None."""
    n = c.scheme.degree
    if n == 0:
        return c if not any(c.coords) else None
    prev = CochainScheme(c.scheme.complex, n - 1)
    x = solve(coboundary_matrix(prev), c.coords)
    return None if x is None else Cochain(prev, x)


def cohomologous(c1: Cochain, c2: Cochain) -> Cochain | None:
    """A cochain b with c1 - c2 = D(b), or None."""
    _same_scheme(c1, c2)
    return is_coboundary(c1 - c2)


# ---------------------------------------------------------------- dimensions

def _theta_split(cx: CochainComplex, n: int):
    lay = cx.layout(n)
    sub = list(lay.span("theta")) if "theta" in lay.names() else []
    subset = set(sub)
    return sub, [i for i in range(lay.size) if i not in subset]


def sub_matrix(cx: CochainComplex, n: int) -> Matrix:
    """D(n) restricted to the theta blocks (the subcomplex)."""
    src, _ = _theta_split(cx, n)
    dst, _ = _theta_split(cx, n + 1)
    return cx.D(n).submatrix(dst, src)


def quotient_matrix(cx: CochainComplex, n: int) -> Matrix:
    """D(n) on the non-theta blocks (the quotient complex)."""
    _, src = _theta_split(cx, n)
    _, dst = _theta_split(cx, n + 1)
    return cx.D(n).submatrix(dst, src)


@dataclass(frozen=True)
class DegreeEntry:
    n: int
    dim_cochains: int
    dim_cocycles: int
    dim_coboundaries: int
    dim_H: int
    dim_H_sub: int
    dim_H_quot: int

    def to_json(self):
        return dict(self.__dict__)


@dataclass(frozen=True)
class CohomologyReport:
    degrees: tuple

    def to_json(self):
        return {"degrees": [d.to_json() for d in self.degrees]}

    def dim_H(self, n: int) -> int:
        return next(d.dim_H for d in self.degrees if d.n == n)


def _complex_dims(dims, mats, n):
    """(cocycles, coboundaries, H) at degree n from D(n-1), D(n)."""
    z = dims(n) - rank(mats(n))
    b = rank(mats(n - 1)) if n >= 1 else 0
    return z, b, z - b


def complex_report(cx: CochainComplex, max_degree: int) -> CohomologyReport:
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    for n in range(max_degree + 2):
        cx.layout(n)  # trigger the budget check before any assembly
    out = []
    for n in range(1, max_degree + 1):
        z, b, h = _complex_dims(cx.dim, cx.D, n)
        _, _, hs = _complex_dims(lambda k: len(_theta_split(cx, k)[0]), lambda k: sub_matrix(cx, k), n)
        _, _, hq = _complex_dims(lambda k: len(_theta_split(cx, k)[1]), lambda k: quotient_matrix(cx, k), n)
        out.append(DegreeEntry(n, cx.dim(n), z, b, h, hs, hq))
    return CohomologyReport(tuple(out))


def cohomology_dims(base: RRBAlgebra, coeffs: RRBRepresentation, max_degree: int,
                    budget: int | None = DEFAULT_BUDGET) -> CohomologyReport:
    return complex_report(rrb_complex(base, coeffs, budget), max_degree)


def rb_cohomology_dims(a: RBAlgebra, r: RBRepresentation, max_degree: int,
                       budget: int | None = DEFAULT_BUDGET) -> CohomologyReport:
    return complex_report(rb_complex(a, r, budget), max_degree)


def adjoint_cohomology_dims(a: RRBAlgebra, max_degree: int, budget: int | None = DEFAULT_BUDGET) -> CohomologyReport:
    return complex_report(AdjointComplex(a, budget), max_degree)


# ---------------------------------------------------------------- long exact sequence

@dataclass(frozen=True)
class CohomologyBasis:
    """Canonical representatives of ker(d_out) / im(d_in)."""

    ambient: int
    reps: tuple
    boundaries: Subspace

    @classmethod
    def of(cls, d_out: Matrix, d_in: Matrix) -> "CohomologyBasis":
        z = kernel(d_out)
        b = image(d_in)
        reps = []
        span = b
        for v in z.basis:
            if v not in span:
                reps.append(v)
                span = Subspace.span(span.basis + (v,), z.ambient_dim)
        return cls(z.ambient_dim, tuple(reps), b)

    @property
    def dim(self) -> int:
        return len(self.reps)

    def coords(self, v: Sequence):
        if not self.reps:
            return ()
        m = Matrix.from_columns(list(self.reps) + list(self.boundaries.basis), self.ambient)
        x = solve(m, v)
        if x is None:
            raise ValueError("vector is not a cocycle")
        return x[:len(self.reps)]

    def induced(self, f: Matrix, target: "CohomologyBasis") -> Matrix:
        cols = [target.coords(f.apply(r)) for r in self.reps]
        return Matrix.from_columns(cols, target.dim)


@dataclass
class LESNode:
    label: str
    degree: int
    dim: int
    dim_im: int
    dim_ker: int
    composite_zero: bool

    @property
    def exact(self) -> bool:
        return self.composite_zero and self.dim_im == self.dim_ker

    def to_json(self):
        return {"node": self.label, "degree": self.degree, "dim": self.dim, "dim_im": self.dim_im,
                "dim_ker": self.dim_ker, "exact": self.exact}


@dataclass
class LESReport:
    nodes: list = field(default_factory=list)
    maps: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return all(n.exact for n in self.nodes)

    def to_json(self):
        return {"exact": self.exact, "nodes": [n.to_json() for n in self.nodes]}


def les_report(base: RRBAlgebra, coeffs: RRBRepresentation, max_degree: int,
               budget: int | None = DEFAULT_BUDGET) -> LESReport:
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    cx = rrb_complex(base, coeffs, budget)
    for n in range(max_degree + 3):
        cx.layout(n)

    full = {n: CohomologyBasis.of(cx.D(n), cx.D(n - 1)) for n in range(1, max_degree + 1)}
    quot = {n: CohomologyBasis.of(cx.delta(n), cx.delta(n - 1)) for n in range(1, max_degree + 1)}
    sub = {n: CohomologyBasis.of(cx.partial(n), cx.partial(n - 1)) for n in range(1, max_degree + 2)}

    iota, proj, conn = {}, {}, {}
    for n in range(1, max_degree + 1):
        iota[n] = sub[n].induced(cx.inclusion(n), full[n])
        proj[n] = full[n].induced(cx.projection(n), quot[n])
        # D on the lift (alpha, 0) has theta part h_T(alpha)
        lift = cx.D(n) @ cx.projection(n).T
        theta_rows = range(cx.quotient_layout(n + 1).size, cx.dim(n + 1))
        conn[n] = quot[n].induced(lift.submatrix(theta_rows, range(lift.cols)), sub[n + 1])

    report = LESReport(maps={"iota": iota, "p": proj, "c": conn})

    def node(label, n, dim, incoming, outgoing):
        r_in = rank(incoming)
        r_out = rank(outgoing)
        zero = (outgoing @ incoming).is_zero()
        report.nodes.append(LESNode(label, n, dim, r_in, dim - r_out, zero))

    for n in range(1, max_degree + 1):
        c_prev = conn[n - 1] if n - 1 in conn else Matrix.zero(sub[n].dim, 0)
        node("H_sub", n, sub[n].dim, c_prev, iota[n])
        node("H", n, full[n].dim, iota[n], proj[n])
        node("H_quot", n, quot[n].dim, proj[n], conn[n])
    return report


def connecting_class(base: RRBAlgebra, coeffs: RRBRepresentation, alpha: Sequence, n: int,
                     budget: int | None = DEFAULT_BUDGET):
    """Coordinates of [h_T alpha] in the canonical basis of the sub-complex cohomology."""
    cx = rrb_complex(base, coeffs, budget)
    if any(cx.delta(n).apply(alpha)):
        raise ValueError("alpha is not a delta-cocycle")
    target = CohomologyBasis.of(cx.partial(n + 1), cx.partial(n))
    return target.coords(cx.h_T(n).apply(alpha))


# ---------------------------------------------------------------- derivations

def derivation_basis(a: RRBAlgebra, budget: int | None = DEFAULT_BUDGET):
    """Basis (f_g, f_V) of the derivations, read off the degree-1 cocycles of the adjoint complex."""
    cx = AdjointComplex(a, budget)
    lay = cx.layout(1)
    out = []
    for v in kernel(cx.D(1)).basis:
        fg = Matrix.from_columns([lay["f_g"].value(v, (i,)) for i in range(a.g.dim)], a.g.dim)
        fv = Matrix.from_columns([lay["f_v"].value(v, (), (k,)) for k in range(a.v_dim)], a.v_dim)
        out.append((fg, fv))
    return out


def rb_derivation_basis(a: RBAlgebra, budget: int | None = DEFAULT_BUDGET):
    """Derivations of g commuting with T, as degree-1 cocycles with adjoint coefficients."""
    cx = rb_complex(a, adjoint_rb_rep(a), budget)
    lay = cx.layout(1)
    return [Matrix.from_columns([lay["f"].value(v, (i,)) for i in range(a.g.dim)], a.g.dim)
            for v in kernel(cx.D(1)).basis]


# ---------------------------------------------------------------- Xi

def xi_matrix(base: RRBAlgebra, coeffs: RRBRepresentation, degree: int,
              budget: int | None = DEFAULT_BUDGET) -> Matrix:
    """Xi(omega)(v_1, ..., v_{n-1}, v_n) = mu(v_n) omega(v_1, ..., v_{n-1})."""
    cx = rrb_complex(base, coeffs, budget)
    src = cx.sub_layout(degree)
    pl = PreLieComplex(induced_prelie_rep(base, coeffs), budget)
    dst = pl.layout(degree)
    if src.size == 0:
        return Matrix.zero(dst.size, 0)
    th = src["theta"]

    def row(job):
        t, (v,) = job
        return lv_apply(coeffs.mu[v], evaluate(th, [basis_arg(i) for i in t]))

    return assemble(dst["f"].keys(), row, src.size)


def xi_commutes(base: RRBAlgebra, coeffs: RRBRepresentation, max_degree: int,
                budget: int | None = DEFAULT_BUDGET) -> ValidationReport:
    cx = rrb_complex(base, coeffs, budget)
    pl = PreLieComplex(induced_prelie_rep(base, coeffs), budget)
    report = ValidationReport()
    for n in range(1, max_degree + 1):
        lhs = pl.D(n) @ xi_matrix(base, coeffs, n, budget)
        rhs = xi_matrix(base, coeffs, n + 1, budget) @ cx.partial(n)
        report.expect("xi_chain_map", (n,), lhs - rhs)
    return report


# ---------------------------------------------------------------- embeddings

def _embedding(src: Layout, dst: Layout, place) -> Matrix:
    """Matrix sending each source basis coordinate to the signed targets listed by ``place``."""
    cols = []
    for name, b in src.blocks:
        for pos in range(b.offset, b.offset + b.size):
            tup, extras, c = b.decode(pos)
            col = [0] * dst.size
            for tname, ttup, textras, tc, sign in place(name, tup, extras, c):
                col[dst[tname].base_index(ttup, textras) + tc] += sign
            cols.append(vec(col))
    return Matrix.from_columns(cols, dst.size)


def _chain_map_report(src_cx, dst_cx, emb, max_degree, axiom) -> ValidationReport:
    report = ValidationReport()
    for n in range(1, max_degree + 1):
        lhs = dst_cx.D(n) @ emb(n)
        rhs = emb(n + 1) @ src_cx.D(n)
        report.expect(axiom, (n,), lhs - rhs)
    return report


def rrb_semidirect_embedding(base: RRBAlgebra, coeffs: RRBRepresentation, n: int,
                             budget: int | None = DEFAULT_BUDGET) -> Matrix:
    """Extension by zero into the adjoint complex of the semidirect product."""
    cx = rrb_complex(base, coeffs, budget)
    big = AdjointComplex(semidirect_rrb(base, coeffs), budget)
    ng, nv = base.g.dim, base.v_dim
    rename = {"f_h": ("f_g", ng), "f_w": ("f_v", nv), "theta": ("theta", ng)}

    def place(name, tup, extras, c):
        tname, shift = rename[name]
        return [(tname, tup, extras, shift + c, 1)]

    return _embedding(cx.layout(n), big.layout(n), place)


def rrb_semidirect_embedding_check(base: RRBAlgebra, coeffs: RRBRepresentation, max_degree: int,
                                   budget: int | None = DEFAULT_BUDGET) -> ValidationReport:
    cx = rrb_complex(base, coeffs, budget)
    big = AdjointComplex(semidirect_rrb(base, coeffs), budget)
    return _chain_map_report(cx, big, lambda n: rrb_semidirect_embedding(base, coeffs, n, budget),
                             max_degree, "semidirect_embedding_chain_map")


def rb_embedding(a: RBAlgebra, r: RBRepresentation, n: int, budget: int | None = DEFAULT_BUDGET) -> Matrix:
    """(f, theta) -> (f_h = f, f_w(x_1..x_{n-1}, v) = f(x_1..x_{n-1}, v), theta)."""
    src = rb_complex(a, r, budget).layout(n)
    dst = rrb_complex(rb_to_rrb(a), rb_rep_to_rrb_rep(r), budget).layout(n)

    def place(name, tup, extras, c):
        if name == "theta":
            return [("theta", tup, (), c, 1)]
        out = [("f_h", tup, (), c, 1)]
        k = len(tup)
        for p in range(k):
            rest = tup[:p] + tup[p + 1:]
            out.append(("f_w", rest, (tup[p],), c, -1 if (k - 1 - p) % 2 else 1))
        return out

    return _embedding(src, dst, place)


def rb_embedding_check(a: RBAlgebra, r: RBRepresentation, max_degree: int,
                       budget: int | None = DEFAULT_BUDGET) -> ValidationReport:
    src = rb_complex(a, r, budget)
    dst = rrb_complex(rb_to_rrb(a), rb_rep_to_rrb_rep(r), budget)
    return _chain_map_report(src, dst, lambda n: rb_embedding(a, r, n, budget), max_degree, "rb_embedding_chain_map")
