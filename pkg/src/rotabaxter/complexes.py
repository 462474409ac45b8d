"""Coboundary operators of the relative Rota-Baxter, adjoint, Rota-Baxter and pre-Lie complexes.

Signs follow the 1-based (-1)^{i+1}, (-1)^{i+j} conventions; with 0-based loop
indices these become (-1)^i and (-1)^{i+j}.
"""

from __future__ import annotations

from itertools import combinations

from .cochains import (
    DEFAULT_BUDGET,
    Layout,
    assemble,
    basis_arg,
    evaluate,
    lv_apply,
    lv_axpy,
    lv_zero,
    sparse,
)
from .lie import PreLieRep
from .linalg import Matrix, unit, vsub
from .structures import RBAlgebra, RBRepresentation, RRBAlgebra, RRBRepresentation


def _sgn(k: int) -> int:
    return -1 if k % 2 else 1


def _drop(x, *positions):
    return [y for p, y in enumerate(x) if p not in positions]


def _args(indices):
    return [basis_arg(i) for i in indices]


class CochainComplex:
    """Degreewise layouts and cached coboundary matrices D(n): C^n -> C^{n+1}."""

    def __init__(self, budget: int | None = DEFAULT_BUDGET):
        self.budget = budget
        self._layouts = {}
        self._d = {}

    def layout(self, n: int) -> Layout:
        if n not in self._layouts:
            self._layouts[n] = Layout.build(n, self._layout_specs(n), self.budget)
        return self._layouts[n]

    def dim(self, n: int) -> int:
        return self.layout(n).size

    def D(self, n: int) -> Matrix:
        if n < 0:
            raise ValueError("degree must be non-negative")
        if n not in self._d:
            rows, cols = self.dim(n + 1), self.dim(n)
            self._d[n] = Matrix.zero(rows, 0) if cols == 0 else self._coboundary(n)
        return self._d[n]

    def _layout_specs(self, n):
        raise NotImplementedError

    def _coboundary(self, n):
        raise NotImplementedError


# ---------------------------------------------------------------- general coefficients

class RRBComplex(CochainComplex):
    """The complex of an RRB algebra with coefficients in an RRB representation.

    Degree n >= 2 carries blocks f_h: wedge^n g -> H, f_w: wedge^{n-1} g (x) V -> W and
    theta: wedge^{n-1} V -> H. Degree 1 has f_h, f_w only; degree 0 is zero.
    """

    def __init__(self, base: RRBAlgebra, coeffs: RRBRepresentation, budget: int | None = DEFAULT_BUDGET):
        if coeffs.base != base:
            raise ValueError("coefficients are not over the given base")
        super().__init__(budget)
        self.base = base
        self.coeffs = coeffs
        self.n_g, self.n_v = base.g.dim, base.v_dim
        self.n_h, self.n_w = coeffs.h_dim, coeffs.w_dim

    def _layout_specs(self, n):
        if n == 0:
            return []
        specs = [("f_h", self.n_g, n, (), self.n_h), ("f_w", self.n_g, n - 1, (self.n_v,), self.n_w)]
        if n >= 2:
            specs.append(("theta", self.n_v, n - 1, (), self.n_h))
        return specs

    def quotient_layout(self, n) -> Layout:
        specs = [s for s in self._layout_specs(n) if s[0] != "theta"]
        return Layout.build(n, specs, self.budget)

    def sub_layout(self, n) -> Layout:
        specs = [s for s in self._layout_specs(n) if s[0] == "theta"]
        return Layout.build(n, specs, self.budget)

    # pieces -------------------------------------------------------

    def delta(self, n: int) -> Matrix:
        """delta: quotient(n) -> quotient(n+1)."""
        src, dst = self.quotient_layout(n), self.quotient_layout(n + 1)
        if src.size == 0:
            return Matrix.zero(dst.size, 0)
        g, rep, c = self.base.g, self.base.rep, self.coeffs
        FH, FW = src["f_h"], src["f_w"]

        def row(job):
            name, (x, extras) = job
            if name == "f_h":
                acc = lv_zero(self.n_h)
                for i in range(len(x)):
                    lv_axpy(acc, _sgn(i), lv_apply(c.rho_h.action[x[i]], evaluate(FH, _args(_drop(x, i)))))
                for i, j in combinations(range(len(x)), 2):
                    br = sparse(g.constants[x[i]][x[j]])
                    lv_axpy(acc, _sgn(i + j), evaluate(FH, [br] + _args(_drop(x, i, j))))
                return acc
            (v,) = extras
            acc = lv_zero(self.n_w)
            for i, j in combinations(range(len(x)), 2):
                br = sparse(g.constants[x[i]][x[j]])
                lv_axpy(acc, _sgn(i + j), evaluate(FW, [br] + _args(_drop(x, i, j)), [basis_arg(v)]))
            lv_axpy(acc, -_sgn(n - 1), lv_apply(c.mu[v], evaluate(FH, _args(x))))
            for i in range(len(x)):
                rest = _args(_drop(x, i))
                lv_axpy(acc, _sgn(i), lv_apply(c.rho_w.action[x[i]], evaluate(FW, rest, [basis_arg(v)])))
                moved = sparse(rep.action[x[i]].column(v))
                lv_axpy(acc, -_sgn(i), evaluate(FW, rest, [moved]))
            return acc

        jobs = [(name, key) for name in dst.names() for key in dst[name].keys()]
        return assemble(jobs, row, src.size)

    def partial(self, n: int) -> Matrix:
        """partial: sub(n) -> sub(n+1); the zero map out of degree <= 1."""
        src, dst = self.sub_layout(n), self.sub_layout(n + 1)
        if src.size == 0:
            return Matrix.zero(dst.size, 0)
        a, c = self.base, self.coeffs
        TH = src["theta"]

        def row(job):
            v = job
            acc = lv_zero(self.n_h)
            for i in range(len(v)):
                th = evaluate(TH, _args(_drop(v, i)))
                tv = a.T.column(v[i])
                lv_axpy(acc, _sgn(i), lv_apply(c.rho_h.act(tv), th))
                lv_axpy(acc, -_sgn(i), lv_apply(c.curlyT @ c.mu[v[i]], th))
            for i, j in combinations(range(len(v)), 2):
                ti, tj = a.T.column(v[i]), a.T.column(v[j])
                arg = vsub(a.rep.act(ti).column(v[j]), a.rep.act(tj).column(v[i]))
                lv_axpy(acc, _sgn(i + j), evaluate(TH, [sparse(arg)] + _args(_drop(v, i, j))))
            return acc

        jobs = [t for t, _ in dst["theta"].keys()]
        return assemble(jobs, row, src.size)

    def h_T(self, n: int) -> Matrix:
        """h_T: quotient(n) -> sub(n+1)."""
        src, dst = self.quotient_layout(n), self.sub_layout(n + 1)
        if src.size == 0:
            return Matrix.zero(dst.size, 0)
        a, c = self.base, self.coeffs
        FH, FW = src["f_h"], src["f_w"]

        def row(v):
            tvs = [sparse(a.T.column(k)) for k in v]
            acc = evaluate(FH, tvs)
            acc = lv_axpy(lv_zero(self.n_h), _sgn(n), acc)
            for i in range(len(v)):
                val = evaluate(FW, tvs[:i] + tvs[i + 1:], [basis_arg(v[i])])
                lv_axpy(acc, _sgn(i), lv_apply(c.curlyT, val))
            return acc

        jobs = [t for t, _ in dst["theta"].keys()] if dst.size else []
        return assemble(jobs, row, src.size)

    def _coboundary(self, n):
        d, p, h = self.delta(n), self.partial(n), self.h_T(n)
        zero = Matrix.zero(d.rows, p.cols)
        return Matrix.block([[d, zero], [h, p]])

    # inclusion and projection ------------------------------------

    def inclusion(self, n: int) -> Matrix:
        """iota: sub(n) -> full(n)."""
        full, sub = self.layout(n), self.sub_layout(n)
        cols = [unit(full.size, full["theta"].offset + k) for k in range(sub.size)]
        return Matrix.from_columns(cols, full.size)

    def projection(self, n: int) -> Matrix:
        """p: full(n) -> quotient(n)."""
        full, quo = self.layout(n), self.quotient_layout(n)
        rows = [unit(full.size, k) for k in range(quo.size)]
        return Matrix.from_rows(rows, full.size)


# ---------------------------------------------------------------- adjoint coefficients

class AdjointComplex(CochainComplex):
    """The complex of an RRB algebra with coefficients in itself (blocks f_g, f_v, theta)."""

    def __init__(self, a: RRBAlgebra, budget: int | None = DEFAULT_BUDGET):
        super().__init__(budget)
        self.a = a
        self.n_g, self.n_v = a.g.dim, a.v_dim

    def _layout_specs(self, n):
        if n == 0:
            return []
        specs = [("f_g", self.n_g, n, (), self.n_g), ("f_v", self.n_g, n - 1, (self.n_v,), self.n_v)]
        if n >= 2:
            specs.append(("theta", self.n_v, n - 1, (), self.n_g))
        return specs

    def _coboundary(self, n):
        src, dst = self.layout(n), self.layout(n + 1)
        a = self.a
        g, rep, T = a.g, a.rep, a.T
        FG, FV = src["f_g"], src["f_v"]
        TH = src["theta"] if n >= 2 else None
        ad = [g.ad(unit(self.n_g, i)) for i in range(self.n_g)]

        def rho_of(lv_x, v):
            # rho(x) e_v for a symbolic x in g
            out = lv_zero(self.n_v)
            for i in range(self.n_g):
                for r, c in sparse(rep.action[i].column(v)):
                    lv_axpy([out[r]], c, [lv_x[i]])
            return out

        def row(job):
            name, (x, extras) = job
            if name == "f_g":
                acc = lv_zero(self.n_g)
                for i in range(len(x)):
                    lv_axpy(acc, _sgn(i), lv_apply(ad[x[i]], evaluate(FG, _args(_drop(x, i)))))
                for i, j in combinations(range(len(x)), 2):
                    lv_axpy(acc, _sgn(i + j),
                            evaluate(FG, [sparse(g.constants[x[i]][x[j]])] + _args(_drop(x, i, j))))
                return acc
            if name == "f_v":
                (v,) = extras
                acc = lv_zero(self.n_v)
                for i, j in combinations(range(len(x)), 2):
                    lv_axpy(acc, _sgn(i + j), evaluate(FV, [sparse(g.constants[x[i]][x[j]])]
                                                       + _args(_drop(x, i, j)), [basis_arg(v)]))
                lv_axpy(acc, _sgn(n - 1), rho_of(evaluate(FG, _args(x)), v))
                for i in range(len(x)):
                    rest = _args(_drop(x, i))
                    lv_axpy(acc, _sgn(i), lv_apply(rep.action[x[i]], evaluate(FV, rest, [basis_arg(v)])))
                    lv_axpy(acc, -_sgn(i), evaluate(FV, rest, [sparse(rep.action[x[i]].column(v))]))
                return acc
            # theta block of degree n+1: h_T f + partial theta, on vs = x
            vs = x
            tvs = [sparse(T.column(k)) for k in vs]
            acc = lv_axpy(lv_zero(self.n_g), _sgn(n), evaluate(FG, tvs))
            for i in range(len(vs)):
                val = evaluate(FV, tvs[:i] + tvs[i + 1:], [basis_arg(vs[i])])
                lv_axpy(acc, _sgn(i), lv_apply(T, val))
            if TH is not None:
                for i in range(len(vs)):
                    th = evaluate(TH, _args(_drop(vs, i)))
                    tv = T.column(vs[i])
                    lv_axpy(acc, _sgn(i), lv_apply(g.ad(tv), th))
                    lv_axpy(acc, _sgn(i), lv_apply(T, rho_of(th, vs[i])))
                for i, j in combinations(range(len(vs)), 2):
                    ti, tj = T.column(vs[i]), T.column(vs[j])
                    arg = vsub(rep.act(ti).column(vs[j]), rep.act(tj).column(vs[i]))
                    lv_axpy(acc, _sgn(i + j), evaluate(TH, [sparse(arg)] + _args(_drop(vs, i, j))))
            return acc

        jobs = [(name, key) for name in dst.names() for key in dst[name].keys()]
        return assemble(jobs, row, src.size)


# ---------------------------------------------------------------- Rota-Baxter Lie algebras

class RBComplex(CochainComplex):
    """Blocks f: wedge^n g -> W and, for n >= 2, theta: wedge^{n-1} g -> W."""

    def __init__(self, a: RBAlgebra, r: RBRepresentation, budget: int | None = DEFAULT_BUDGET):
        if r.base != a:
            raise ValueError("representation is not over the given base")
        super().__init__(budget)
        self.a, self.r = a, r
        self.n_g, self.n_w = a.g.dim, r.w_dim

    def _layout_specs(self, n):
        if n == 0:
            return []
        specs = [("f", self.n_g, n, (), self.n_w)]
        if n >= 2:
            specs.append(("theta", self.n_g, n - 1, (), self.n_w))
        return specs

    def _coboundary(self, n):
        src, dst = self.layout(n), self.layout(n + 1)
        g, T = self.a.g, self.a.T
        rw, ct = self.r.rho_w, self.r.curlyT
        F = src["f"]
        TH = src["theta"] if n >= 2 else None

        def row(job):
            name, (x, _) = job
            if name == "f":
                acc = lv_zero(self.n_w)
                for i in range(len(x)):
                    lv_axpy(acc, _sgn(i), lv_apply(rw.action[x[i]], evaluate(F, _args(_drop(x, i)))))
                for i, j in combinations(range(len(x)), 2):
                    lv_axpy(acc, _sgn(i + j),
                            evaluate(F, [sparse(g.constants[x[i]][x[j]])] + _args(_drop(x, i, j))))
                return acc
            txs = [sparse(T.column(k)) for k in x]
            acc = lv_axpy(lv_zero(self.n_w), _sgn(n), evaluate(F, txs))
            for i in range(len(x)):
                args = txs[:i] + [basis_arg(x[i])] + txs[i + 1:]
                lv_axpy(acc, -_sgn(n), lv_apply(ct, evaluate(F, args)))
            if TH is not None:
                for i in range(len(x)):
                    th = evaluate(TH, _args(_drop(x, i)))
                    lv_axpy(acc, _sgn(i), lv_apply(rw.act(T.column(x[i])), th))
                    lv_axpy(acc, -_sgn(i), lv_apply(ct @ rw.action[x[i]], th))
                for i, j in combinations(range(len(x)), 2):
                    ei, ej = unit(self.n_g, x[i]), unit(self.n_g, x[j])
                    arg = vsub(g.bracket(T.column(x[i]), ej), g.bracket(T.column(x[j]), ei))
                    lv_axpy(acc, _sgn(i + j), evaluate(TH, [sparse(arg)] + _args(_drop(x, i, j))))
            return acc

        jobs = [(name, key) for name in dst.names() for key in dst[name].keys()]
        return assemble(jobs, row, src.size)


# ---------------------------------------------------------------- pre-Lie algebras

class PreLieComplex(CochainComplex):
    """C^n = Hom(wedge^{n-1} A (x) A, W) for n >= 1."""

    def __init__(self, pr: PreLieRep, budget: int | None = DEFAULT_BUDGET):
        super().__init__(budget)
        self.pr = pr
        self.n_a, self.n_w = pr.algebra.dim, pr.space_dim

    def _layout_specs(self, n):
        if n == 0:
            return []
        return [("f", self.n_a, n - 1, (self.n_a,), self.n_w)]

    def _coboundary(self, n):
        src, dst = self.layout(n), self.layout(n + 1)
        A, pr = self.pr.algebra, self.pr
        F = src["f"]

        def row(job):
            x, (y,) = job
            acc = lv_zero(self.n_w)
            for i in range(len(x)):
                rest = _args(_drop(x, i))
                lv_axpy(acc, _sgn(i), lv_apply(pr.theta[x[i]], evaluate(F, rest, [basis_arg(y)])))
                lv_axpy(acc, _sgn(i), lv_apply(pr.vartheta[y], evaluate(F, rest, [basis_arg(x[i])])))
                lv_axpy(acc, -_sgn(i), evaluate(F, rest, [sparse(A.constants[x[i]][y])]))
            for i, j in combinations(range(len(x)), 2):
                br = sparse(vsub(A.constants[x[i]][x[j]], A.constants[x[j]][x[i]]))
                lv_axpy(acc, _sgn(i + j), evaluate(F, [br] + _args(_drop(x, i, j)), [basis_arg(y)]))
            return acc

        return assemble(dst["f"].keys(), row, src.size)
