"""Lie algebras, their representations, and pre-Lie algebras by structure constants.

All objects fix an ordered basis (0-based). Brackets and products are stored
as ``c[i][j]``, the coordinate vector of ``[e_i, e_j]``.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from itertools import combinations
from typing import Mapping, Sequence

from .linalg import (
    ZERO,
    DimensionError,
    Matrix,
    commutator,
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


def _constants(dim: int, table) -> tuple:
    out = tuple(tuple(vec(table[i][j]) for j in range(dim)) for i in range(dim))
    for row in out:
        for v in row:
            if len(v) != dim:
                raise DimensionError("structure constant vector has the wrong length")
    return out


def _combine(basis_values, x: Sequence, y: Sequence, dim: int):
    """Bilinear extension of a table of basis values."""
    terms = []
    for i, a in support(x):
        for j, b in support(y):
            v = basis_values[i][j]
            if any(v):
                terms.append(vscale(a * b, v))
    return vsum(terms, dim)


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    constants: tuple
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        if len(self.constants) != self.dim or any(len(r) != self.dim for r in self.constants):
            raise DimensionError("structure constants do not match the dimension")
        if validate:
            report = check_antisymmetry(self).merge(check_jacobi(self))
            if not report.valid:
                raise AxiomError("Lie algebra", report)

    @classmethod
    def from_table(cls, dim: int, table, validate: bool = True) -> "LieAlgebra":
        return cls(dim, _constants(dim, table), validate)

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping, validate: bool = True) -> "LieAlgebra":
        """Build from ``{(i, j): coords}`` with i < j; the rest follows by antisymmetry."""
        table = [[zeros(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in brackets.items():
            v = vec(v)
            table[i][j] = v
            table[j][i] = vscale(-1, v)
        return cls(dim, tuple(tuple(r) for r in table), validate)

    @classmethod
    def unchecked(cls, dim: int, table) -> "LieAlgebra":
        return cls.from_table(dim, table, validate=False)

    @classmethod
    def abelian(cls, dim: int) -> "LieAlgebra":
        return cls.from_brackets(dim, {})

    def bracket_basis(self, i: int, j: int):
        return self.constants[i][j]

    def bracket(self, x: Sequence, y: Sequence):
        return _combine(self.constants, x, y, self.dim)

    def ad(self, x: Sequence) -> Matrix:
        cols = [self.bracket(x, e) for e in _basis(self.dim)]
        return Matrix.from_columns(cols, self.dim)

    def is_abelian(self) -> bool:
        return not any(any(v) for r in self.constants for v in r)

    def brackets(self):
        """Nonzero ``(i, j, coords)`` with i < j."""
        return [(i, j, self.constants[i][j]) for i, j in combinations(range(self.dim), 2)
                if any(self.constants[i][j])]


def _basis(n: int):
    return [unit(n, i) for i in range(n)]


def check_antisymmetry(g: LieAlgebra) -> ValidationReport:
    report = ValidationReport()
    for i in range(g.dim):
        for j in range(i, g.dim):
            report.expect("antisymmetry", (i, j), vadd(g.constants[i][j], g.constants[j][i]))
    return report


def check_jacobi(g: LieAlgebra) -> ValidationReport:
    """Jacobi identity on every increasing basis triple; residuals are coordinate vectors."""
    report = ValidationReport()
    e = _basis(g.dim)
    for i, j, k in combinations(range(g.dim), 3):
        r = vsum([
            g.bracket(e[i], g.constants[j][k]),
            g.bracket(e[j], g.constants[k][i]),
            g.bracket(e[k], g.constants[i][j]),
        ], g.dim)
        report.expect("jacobi", (i, j, k), r)
    return report


@dataclass(frozen=True)
class LinearRep:
    """A representation of ``algebra`` given by one matrix per basis element."""

    algebra: LieAlgebra
    space_dim: int
    action: tuple
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        if len(self.action) != self.algebra.dim:
            raise DimensionError("need one action matrix per basis element")
        for m in self.action:
            if m.shape != (self.space_dim, self.space_dim):
                raise DimensionError(f"action matrix of shape {m.shape}, expected square of size {self.space_dim}")
        if validate:
            report = check_representation(self)
            if not report.valid:
                raise AxiomError("representation", report)

    @classmethod
    def unchecked(cls, algebra, space_dim, action) -> "LinearRep":
        return cls(algebra, space_dim, tuple(action), validate=False)

    @classmethod
    def trivial(cls, algebra: LieAlgebra, space_dim: int) -> "LinearRep":
        return cls(algebra, space_dim, tuple(Matrix.zero(space_dim, space_dim) for _ in range(algebra.dim)))

    def act(self, x: Sequence) -> Matrix:
        """The matrix of rho(x) for a coordinate vector x."""
        acc = Matrix.zero(self.space_dim, self.space_dim)
        for i, a in support(x):
            acc = acc + self.action[i].scale(a)
        return acc

    def apply(self, x: Sequence, v: Sequence):
        out = zeros(self.space_dim)
        for i, a in support(x):
            out = vadd(out, vscale(a, self.action[i].apply(v)))
        return out


def check_representation(r: LinearRep) -> ValidationReport:
    report = ValidationReport()
    g = r.algebra
    for i, j in combinations(range(g.dim), 2):
        lhs = r.act(g.constants[i][j])
        rhs = commutator(r.action[i], r.action[j])
        report.expect("representation", (i, j), lhs - rhs)
    return report


def adjoint_rep(g: LieAlgebra) -> LinearRep:
    return LinearRep(g, g.dim, tuple(g.ad(e) for e in _basis(g.dim)))


def dual_rep(r: LinearRep) -> LinearRep:
    return LinearRep(r.algebra, r.space_dim, tuple(-m.T for m in r.action))


def direct_sum_rep(a: LinearRep, b: LinearRep) -> LinearRep:
    if a.algebra != b.algebra:
        raise ValueError("representations of different algebras")
    return LinearRep(a.algebra, a.space_dim + b.space_dim,
                     tuple(Matrix.diag(x, y) for x, y in zip(a.action, b.action)))


def semidirect_lie(r: LinearRep) -> LieAlgebra:
    """The Lie algebra g + V with [x+u, y+v] = [x,y] + rho(x)v - rho(y)u."""
    g = r.algebra
    n, m = g.dim, r.space_dim
    table = [[zeros(n + m) for _ in range(n + m)] for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            table[i][j] = g.constants[i][j] + zeros(m)
        for k in range(m):
            col = r.action[i].column(k)
            table[i][n + k] = zeros(n) + col
            table[n + k][i] = zeros(n) + vscale(-1, col)
    return LieAlgebra.from_table(n + m, table)


# ---------------------------------------------------------------- pre-Lie

@dataclass(frozen=True)
class PreLieAlgebra:
    dim: int
    constants: tuple  # constants[i][j] = coords of e_i . e_j
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        if len(self.constants) != self.dim or any(len(r) != self.dim for r in self.constants):
            raise DimensionError("product constants do not match the dimension")
        if validate:
            report = check_left_symmetry(self)
            if not report.valid:
                raise AxiomError("pre-Lie algebra", report)

    @classmethod
    def from_table(cls, dim, table, validate: bool = True) -> "PreLieAlgebra":
        return cls(dim, _constants(dim, table), validate)

    @classmethod
    def from_products(cls, dim, products: Mapping, validate: bool = True) -> "PreLieAlgebra":
        table = [[zeros(dim) for _ in range(dim)] for _ in range(dim)]
        for (i, j), v in products.items():
            table[i][j] = vec(v)
        return cls(dim, tuple(tuple(r) for r in table), validate)

    def mul(self, x: Sequence, y: Sequence):
        return _combine(self.constants, x, y, self.dim)


def check_left_symmetry(a: PreLieAlgebra) -> ValidationReport:
    """(xy)z - x(yz) = (yx)z - y(xz) on every ordered basis triple."""
    report = ValidationReport()
    e = _basis(a.dim)
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                assoc_ij = vsub(a.mul(a.constants[i][j], e[k]), a.mul(e[i], a.constants[j][k]))
                assoc_ji = vsub(a.mul(a.constants[j][i], e[k]), a.mul(e[j], a.constants[i][k]))
                report.expect("left_symmetry", (i, j, k), vsub(assoc_ij, assoc_ji))
    return report


def commutator_lie(a: PreLieAlgebra) -> LieAlgebra:
    table = [[vsub(a.constants[i][j], a.constants[j][i]) for j in range(a.dim)] for i in range(a.dim)]
    return LieAlgebra.from_table(a.dim, table)


@dataclass(frozen=True)
class PreLieRep:
    algebra: PreLieAlgebra
    space_dim: int
    theta: tuple
    vartheta: tuple
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        for ms in (self.theta, self.vartheta):
            if len(ms) != self.algebra.dim:
                raise DimensionError("need one matrix per basis element")
            for m in ms:
                if m.shape != (self.space_dim, self.space_dim):
                    raise DimensionError("pre-Lie representation matrix has the wrong shape")
        if validate:
            report = check_prelie_rep(self)
            if not report.valid:
                raise AxiomError("pre-Lie representation", report)

    @classmethod
    def unchecked(cls, algebra, space_dim, theta, vartheta) -> "PreLieRep":
        return cls(algebra, space_dim, tuple(theta), tuple(vartheta), validate=False)

    def theta_of(self, x: Sequence) -> Matrix:
        return _linear_combination(self.theta, x, self.space_dim)

    def vartheta_of(self, x: Sequence) -> Matrix:
        return _linear_combination(self.vartheta, x, self.space_dim)


def _linear_combination(mats, x, n) -> Matrix:
    acc = Matrix.zero(n, n)
    for i, a in support(x):
        acc = acc + mats[i].scale(a)
    return acc


def check_prelie_rep(pr: PreLieRep) -> ValidationReport:
    """theta is a rep of the commutator algebra, and
    theta(x)vt(y) - vt(y)theta(x) = vt(x.y) - vt(y)vt(x) on basis pairs."""
    a = pr.algebra
    report = ValidationReport()
    for i, j in combinations(range(a.dim), 2):
        bracket = vsub(a.constants[i][j], a.constants[j][i])
        lhs = pr.theta_of(bracket)
        report.expect("theta_representation", (i, j), lhs - commutator(pr.theta[i], pr.theta[j]))
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = pr.theta[i] @ pr.vartheta[j] - pr.vartheta[j] @ pr.theta[i]
            rhs = pr.vartheta_of(a.constants[i][j]) - pr.vartheta[j] @ pr.vartheta[i]
            report.expect("vartheta_compatibility", (i, j), lhs - rhs)
    return report


__all__ = [
    "LieAlgebra", "LinearRep", "PreLieAlgebra", "PreLieRep",
    "check_jacobi", "check_antisymmetry", "check_representation", "check_left_symmetry",
    "check_prelie_rep", "adjoint_rep", "dual_rep", "direct_sum_rep", "semidirect_lie",
    "commutator_lie", "ZERO",
]
