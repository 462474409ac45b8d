"""Dense reference evaluator for the coboundary operators.

Written from the defining formulas only: cochains are expanded to functions on
arbitrary vectors by summing over every ordered tuple of basis indices, and the
matrices are built one unit cochain at a time. Nothing from the package is
imported; structures come in as plain nested lists of Fractions.
"""

from fractions import Fraction
from itertools import combinations, product


def _zero(n):
    return [Fraction(0)] * n


def _add(a, b):
    return [x + y for x, y in zip(a, b)]


def _scale(c, a):
    return [c * x for x in a]


def _mat_vec(m, v):
    return [sum((m[r][c] * v[c] for c in range(len(v))), Fraction(0)) for r in range(len(m))]


def _lin(mats, x, rows, cols):
    """sum_i x_i mats[i]"""
    out = [[Fraction(0)] * cols for _ in range(rows)]
    for i, c in enumerate(x):
        if c:
            for r in range(rows):
                for s in range(cols):
                    out[r][s] += c * mats[i][r][s]
    return out


def _unit(n, i):
    v = _zero(n)
    v[i] = Fraction(1)
    return v


def _sign_sort(idx):
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, None
    inversions = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    return (-1) ** inversions, tuple(sorted(idx))


class Block:
    """Hom(wedge^k A (x) E, Y) with E of dimension ``extra`` (None: no extra slot)."""

    def __init__(self, adim, k, extra, ydim):
        self.adim, self.k, self.extra, self.ydim = adim, k, extra, ydim
        self.tuples = list(combinations(range(adim), k))
        self.size = len(self.tuples) * (1 if extra is None else extra) * ydim
        self.coords = None

    def _flat(self, tup, e):
        t = self.tuples.index(tup)
        inner = t if self.extra is None else t * self.extra + e
        return inner * self.ydim

    def on_basis(self, idx, e=None):
        s, st = _sign_sort(idx)
        if not s:
            return _zero(self.ydim)
        b = self._flat(st, e or 0)
        return [s * self.coords[b + c] for c in range(self.ydim)]

    def __call__(self, vectors, extra_vec=None):
        """Multilinear value: every ordered tuple of basis indices."""
        out = _zero(self.ydim)
        for idx in product(range(self.adim), repeat=self.k):
            coef = Fraction(1)
            for v, i in zip(vectors, idx):
                coef *= v[i]
                if not coef:
                    break
            if not coef:
                continue
            if self.extra is not None:
                for e in range(self.extra):
                    if extra_vec[e]:
                        out = _add(out, _scale(coef * extra_vec[e], self.on_basis(idx, e)))
            else:
                out = _add(out, _scale(coef, self.on_basis(idx)))
        return out

    def write(self, target, offset, tup, e, value):
        b = offset + self._flat(tup, e or 0)
        for c, x in enumerate(value):
            target[b + c] = x


class RelativeData:
    """Plain-list copy of a relative structure with coefficients."""

    def __init__(self, br, rho, T, rho_h, rho_w, mu, curlyT):
        self.br, self.rho, self.T = br, rho, T
        self.rho_h, self.rho_w, self.mu, self.curlyT = rho_h, rho_w, mu, curlyT
        self.n = len(br)
        self.m = len(T[0]) if T else 0
        self.p = len(curlyT)
        self.q = len(rho_w[0]) if rho_w else 0

    def bracket(self, x, y):
        out = _zero(self.n)
        for i in range(self.n):
            for j in range(self.n):
                if x[i] and y[j]:
                    out = _add(out, _scale(x[i] * y[j], self.br[i][j]))
        return out

    def act(self, x, v):
        return _mat_vec(_lin(self.rho, x, self.m, self.m), v)

    def Tv(self, v):
        return _mat_vec(self.T, v)

    def act_h(self, x, a):
        return _mat_vec(_lin(self.rho_h, x, self.p, self.p), a)

    def act_w(self, x, xi):
        return _mat_vec(_lin(self.rho_w, x, self.q, self.q), xi)

    def mu_at(self, v, a):
        return _mat_vec(_lin(self.mu, v, self.q, self.p), a)

    def cT(self, xi):
        return _mat_vec(self.curlyT, xi)


def _blocks(d: RelativeData, n):
    if n <= 0:
        return []
    out = [("f_h", Block(d.n, n, None, d.p)), ("f_w", Block(d.n, n - 1, d.m, d.q))]
    if n >= 2:
        out.append(("theta", Block(d.m, n - 1, None, d.p)))
    return out


def _drop(seq, *positions):
    return [x for k, x in enumerate(seq) if k not in positions]


def relative_coboundary(d: RelativeData, n):
    """Dense matrix of the degree-n coboundary, as a list of rows."""
    src, dst = _blocks(d, n), _blocks(d, n + 1)
    ncols = sum(b.size for _, b in src)
    nrows = sum(b.size for _, b in dst)
    columns = []
    for col in range(ncols):
        coords = _zero(ncols)
        coords[col] = Fraction(1)
        off = 0
        for _, b in src:
            b.coords = coords[off:off + b.size]
            off += b.size
        f = dict(src)
        out = _zero(nrows)
        off = 0
        eg = [_unit(d.n, i) for i in range(d.n)]
        ev = [_unit(d.m, k) for k in range(d.m)]
        for name, b in dst:
            for tup in b.tuples:
                xs = [eg[i] for i in tup] if name != "theta" else [ev[i] for i in tup]
                if name == "f_h":
                    b.write(out, off, tup, None, _ce(d, f["f_h"], xs))
                elif name == "f_w":
                    for e in range(d.m):
                        b.write(out, off, tup, e, _delta_w(d, f, xs, ev[e], n))
                else:
                    val = _h_T(d, f, xs, n)
                    if "theta" in f:
                        val = _add(val, _partial(d, f["theta"], xs))
                    b.write(out, off, tup, None, val)
            off += b.size
        columns.append(out)
    return [[columns[c][r] for c in range(ncols)] for r in range(nrows)]


def _ce(d, fh, xs):
    """Chevalley-Eilenberg coboundary with values in (H, rho_h)."""
    k = len(xs)
    out = _zero(d.p)
    for i in range(k):
        out = _add(out, _scale((-1) ** i, d.act_h(xs[i], fh(_drop(xs, i)))))
    for i in range(k):
        for j in range(i + 1, k):
            out = _add(out, _scale((-1) ** (i + j), fh([d.bracket(xs[i], xs[j])] + _drop(xs, i, j))))
    return out


def _delta_w(d, f, xs, v, n):
    fh, fw = f["f_h"], f["f_w"]
    k = len(xs)  # equals n
    out = _zero(d.q)
    for i in range(k):
        for j in range(i + 1, k):
            out = _add(out, _scale((-1) ** (i + j), fw([d.bracket(xs[i], xs[j])] + _drop(xs, i, j), v)))
    out = _add(out, _scale(-((-1) ** (n - 1)), d.mu_at(v, fh(xs))))
    for i in range(k):
        rest = _drop(xs, i)
        term = [a - b for a, b in zip(d.act_w(xs[i], fw(rest, v)), fw(rest, d.act(xs[i], v)))]
        out = _add(out, _scale((-1) ** i, term))
    return out


def _partial(d, theta, vs):
    k = len(vs)
    out = _zero(d.p)
    for i in range(k):
        rest = _drop(vs, i)
        val = theta(rest)
        out = _add(out, _scale((-1) ** i, d.act_h(d.Tv(vs[i]), val)))
        out = _add(out, _scale(-((-1) ** i), d.cT(d.mu_at(vs[i], val))))
    for i in range(k):
        for j in range(i + 1, k):
            w = [a - b for a, b in zip(d.act(d.Tv(vs[i]), vs[j]), d.act(d.Tv(vs[j]), vs[i]))]
            out = _add(out, _scale((-1) ** (i + j), theta([w] + _drop(vs, i, j))))
    return out


def _h_T(d, f, vs, n):
    fh, fw = f["f_h"], f["f_w"]
    tv = [d.Tv(v) for v in vs]
    out = _scale((-1) ** n, fh(tv))
    for i in range(len(vs)):
        out = _add(out, _scale((-1) ** i, d.cT(fw(_drop(tv, i), vs[i]))))
    return out


# ---------------------------------------------------------------- Rota-Baxter complex

class RBData:
    def __init__(self, br, T, rho_w, curlyT):
        self.br, self.T, self.rho_w, self.curlyT = br, T, rho_w, curlyT
        self.n = len(br)
        self.q = len(curlyT)

    def bracket(self, x, y):
        out = _zero(self.n)
        for i in range(self.n):
            for j in range(self.n):
                if x[i] and y[j]:
                    out = _add(out, _scale(x[i] * y[j], self.br[i][j]))
        return out

    def Tx(self, x):
        return _mat_vec(self.T, x)

    def act(self, x, xi):
        return _mat_vec(_lin(self.rho_w, x, self.q, self.q), xi)

    def cT(self, xi):
        return _mat_vec(self.curlyT, xi)


def _rb_blocks(d: RBData, n):
    if n <= 0:
        return []
    out = [("f", Block(d.n, n, None, d.q))]
    if n >= 2:
        out.append(("theta", Block(d.n, n - 1, None, d.q)))
    return out


def rb_coboundary(d: RBData, n):
    src, dst = _rb_blocks(d, n), _rb_blocks(d, n + 1)
    ncols = sum(b.size for _, b in src)
    nrows = sum(b.size for _, b in dst)
    eg = [_unit(d.n, i) for i in range(d.n)]
    columns = []
    for col in range(ncols):
        coords = _zero(ncols)
        coords[col] = Fraction(1)
        off = 0
        for _, b in src:
            b.coords = coords[off:off + b.size]
            off += b.size
        f = dict(src)
        out = _zero(nrows)
        off = 0
        for name, b in dst:
            for tup in b.tuples:
                xs = [eg[i] for i in tup]
                if name == "f":
                    val = _zero(d.q)
                    k = len(xs)
                    for i in range(k):
                        val = _add(val, _scale((-1) ** i, d.act(xs[i], f["f"](_drop(xs, i)))))
                    for i in range(k):
                        for j in range(i + 1, k):
                            val = _add(val, _scale((-1) ** (i + j),
                                                   f["f"]([d.bracket(xs[i], xs[j])] + _drop(xs, i, j))))
                else:
                    k = len(xs)  # equals n
                    tx = [d.Tx(x) for x in xs]
                    val = _scale((-1) ** k, f["f"](tx))
                    for i in range(k):
                        mixed = tx[:i] + [xs[i]] + tx[i + 1:]
                        val = _add(val, _scale(-((-1) ** k), d.cT(f["f"](mixed))))
                    if "theta" in f:
                        th = f["theta"]
                        for i in range(k):
                            rest = th(_drop(xs, i))
                            val = _add(val, _scale((-1) ** i, d.act(tx[i], rest)))
                            val = _add(val, _scale(-((-1) ** i), d.cT(d.act(xs[i], rest))))
                        for i in range(k):
                            for j in range(i + 1, k):
                                w = [a - b for a, b in zip(d.bracket(tx[i], xs[j]), d.bracket(tx[j], xs[i]))]
                                val = _add(val, _scale((-1) ** (i + j), th([w] + _drop(xs, i, j))))
                b.write(out, off, tup, None, val)
            off += b.size
        columns.append(out)
    return [[columns[c][r] for c in range(ncols)] for r in range(nrows)]
