"""Fixtures and a seeded generator of small valid instances."""

from __future__ import annotations

import random

from rotabaxter.lie import LieAlgebra, LinearRep, adjoint_rep, direct_sum_rep, dual_rep
from rotabaxter.linalg import Matrix, rank
from rotabaxter.structures import (
    RBAlgebra,
    RRBAlgebra,
    RRBRepresentation,
    adjoint_rb_rep,
    adjoint_rrb_rep,
    check_rb,
    check_rb_representation,
    check_rrb,
    check_rrb_representation,
    coadjoint_rb_rep,
    coadjoint_rrb_rep,
    direct_sum_rrb_rep,
    zero_rb_rep,
    zero_rrb_rep,
)


def aff1() -> LieAlgebra:
    return LieAlgebra.from_brackets(2, {(0, 1): (0, 1)})


def f0():
    g = LieAlgebra.abelian(2)
    a = RRBAlgebra(g, LinearRep.trivial(g, 1), Matrix.zero(2, 1))
    return a, zero_rrb_rep(a, 1, 1)


def f1() -> RRBAlgebra:
    g = aff1()
    rep = LinearRep(g, 1, (Matrix.from_rows([[1]]), Matrix.from_rows([[0]])))
    return RRBAlgebra(g, rep, Matrix.from_rows([[0], [1]]))


def f2() -> RBAlgebra:
    return RBAlgebra(aff1(), Matrix.from_rows([[0, 0], [1, 0]]))


def end_example():
    from rotabaxter.structures import end_complex_rrb

    return end_complex_rrb(Matrix.from_rows([[1], [0]]))


# ---------------------------------------------------------------- catalog

def catalog():
    out = {
        "ab1": LieAlgebra.abelian(1),
        "ab2": LieAlgebra.abelian(2),
        "ab3": LieAlgebra.abelian(3),
        "aff1": aff1(),
        "heis": LieAlgebra.from_brackets(3, {(0, 1): (0, 0, 1)}),
        "sl2": LieAlgebra.from_brackets(3, {(0, 1): (0, 2, 0), (0, 2): (0, 0, -2), (1, 2): (1, 0, 0)}),
        "r3": LieAlgebra.from_brackets(3, {(0, 1): (0, 1, 0), (0, 2): (0, 1, 1)}),
        "aff1+1": LieAlgebra.from_brackets(3, {(0, 1): (0, 1, 0)}),
    }
    return out


def reps_for(name: str, g: LieAlgebra, rng: random.Random):
    reps = [LinearRep.trivial(g, 1), adjoint_rep(g), dual_rep(adjoint_rep(g))]
    if name in ("aff1", "aff1+1", "r3", "ab1", "ab2", "ab3"):
        # characters vanishing on the derived algebra
        derived = {k for _, _, v in g.brackets() for k, x in enumerate(v) if x}
        lam = [0 if i in derived else rng.randint(-2, 2) for i in range(g.dim)]
        char = LinearRep(g, 1, tuple(Matrix.from_rows([[x]]) for x in lam))
        reps.append(char)
        reps.append(direct_sum_rep(char, LinearRep.trivial(g, 1)))
    if g.dim == 1:
        reps.append(direct_sum_rep(adjoint_rep(g), LinearRep(g, 1, (Matrix.from_rows([[2]]),))))
    return [r for r in reps if r.space_dim <= 3]


def _random_matrix(rng, rows, cols, density=0.5):
    return Matrix.from_rows([[rng.choice((-1, 1, 2)) if rng.random() < density else 0
                              for _ in range(cols)] for _ in range(rows)], cols)


def _rank_one(rng, rows, cols):
    x = [rng.randint(-1, 1) for _ in range(rows)]
    y = [rng.randint(-1, 1) for _ in range(cols)]
    return Matrix.from_rows([[a * b for b in y] for a in x], cols)


def find_operator(rng, g, rep, tries=60):
    """Search for a nonzero relative Rota-Baxter operator; fall back to zero."""
    for t in range(tries):
        cand = _rank_one(rng, g.dim, rep.space_dim) if t % 2 else _random_matrix(rng, g.dim, rep.space_dim)
        if cand.is_zero():
            continue
        if check_rrb(RRBAlgebra.unchecked(g, rep, cand)).valid:
            return cand
    return Matrix.zero(g.dim, rep.space_dim)


def _invertible(rng, n):
    while True:
        m = Matrix.from_rows([[rng.randint(-1, 1) + (1 if i == j else 0) for j in range(n)] for i in range(n)], n)
        if rank(m) == n:
            return m


def _inverse(m: Matrix) -> Matrix:
    from rotabaxter.linalg import solve, unit

    cols = [solve(m, unit(m.rows, i)) for i in range(m.rows)]
    return Matrix.from_columns(cols, m.rows)


def transport(a: RRBAlgebra, P: Matrix, Q: Matrix) -> RRBAlgebra:
    """The same structure written in the bases given by the columns of P (on g) and Q (on V)."""
    Pi, Qi = _inverse(P), _inverse(Q)
    g = a.g
    table = [[Pi.apply(g.bracket(P.column(i), P.column(j))) for j in range(g.dim)] for i in range(g.dim)]
    g2 = LieAlgebra.from_table(g.dim, table)
    action = tuple(Qi @ a.rep.act(P.column(i)) @ Q for i in range(g.dim))
    rep2 = LinearRep(g2, a.v_dim, action)
    return RRBAlgebra(g2, rep2, Pi @ a.T @ Q)


def random_rrb(rng: random.Random) -> RRBAlgebra:
    cat = catalog()
    name = rng.choice(sorted(cat))
    g = cat[name]
    rep = rng.choice(reps_for(name, g, rng))
    T = find_operator(rng, g, rep)
    a = RRBAlgebra(g, rep, T)
    if rng.random() < 0.5:
        a = transport(a, _invertible(rng, g.dim), _invertible(rng, rep.space_dim))
    return a


def random_coeffs(rng: random.Random, a: RRBAlgebra) -> RRBRepresentation:
    options = [adjoint_rrb_rep(a), coadjoint_rrb_rep(a),
               zero_rrb_rep(a, rng.randint(1, 2), rng.randint(1, 2))]
    small = [o for o in options if o.h_dim <= 3 and o.w_dim <= 3]
    if a.g.dim <= 2 and a.v_dim <= 2:
        small.append(direct_sum_rrb_rep(adjoint_rrb_rep(a), zero_rrb_rep(a, 1, 1)))
    return rng.choice(small)


def random_instances(seed: int, count: int):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = random_rrb(rng)
        r = random_coeffs(rng, a)
        assert check_rrb(a).valid and check_rrb_representation(r).valid
        out.append((a, r))
    return out


def find_rb_operator(rng, g, tries=80):
    for t in range(tries):
        cand = _rank_one(rng, g.dim, g.dim) if t % 2 else _random_matrix(rng, g.dim, g.dim)
        if cand.is_zero():
            continue
        if check_rb(RBAlgebra.unchecked(g, cand)).valid:
            return cand
    return Matrix.zero(g.dim, g.dim)


def random_rb_instances(seed: int, count: int):
    rng = random.Random(seed)
    cat = catalog()
    out = []
    while len(out) < count:
        g = cat[rng.choice(sorted(cat))]
        a = RBAlgebra(g, find_rb_operator(rng, g))
        r = rng.choice([adjoint_rb_rep(a), coadjoint_rb_rep(a), zero_rb_rep(a, rng.randint(1, 2))])
        assert check_rb_representation(r).valid
        out.append((a, r))
    return out


__all__ = [
    "aff1", "f0", "f1", "f2", "end_example", "catalog", "random_instances",
    "random_rb_instances", "random_rrb", "random_coeffs", "transport"
]
