"""JSON reading and writing for every structure the command line accepts or emits.

Rationals are written as canonical strings ("3", "-1/2"); on input integers are
accepted too. Parsing collects problems as (JSON pointer, message) pairs and
raises them together. Objects are built unchecked; axiom checks are left to the
caller so that invalid data can still be reported on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any

from .cochains import AltBlock
from .cohomology import Cochain, CochainScheme
from .extensions import TwoCocycle, TwoCocycleRB
from .lie import LieAlgebra, LinearRep
from .lie2 import SkeletalRB2, SkeletalRRB2
from .linalg import Matrix, format_fraction, to_fraction, zeros
from .structures import RBAlgebra, RBRepresentation, RRBAlgebra, RRBRepresentation


class ParseError(ValueError):
    def __init__(self, problems):
        self.problems = list(problems)
        first = self.problems[0]
        more = f" (+{len(self.problems) - 1} more)" if len(self.problems) > 1 else ""
        super().__init__(f"{first[0] or '/'}: {first[1]}{more}")

    def to_json(self):
        return {"error": "parse", "problems": [{"pointer": p or "/", "message": m} for p, m in self.problems]}


def _ptr(base: str, key) -> str:
    key = str(key).replace("~", "~0").replace("/", "~1")
    return f"{base}/{key}"


class _Reader:
    """Accumulates problems; returns placeholders so one pass finds as many as it can."""

    def __init__(self):
        self.problems = []

    def fail(self, ptr, msg):
        self.problems.append((ptr, msg))

    def done(self):
        if self.problems:
            raise ParseError(self.problems)

    def obj(self, v, ptr, required=(), optional=()):
        if not isinstance(v, dict):
            self.fail(ptr, "expected an object")
            return None
        for k in required:
            if k not in v:
                self.fail(_ptr(ptr, k), "missing field")
        for k in v:
            if k not in required and k not in optional:
                self.fail(_ptr(ptr, k), "unknown field")
        if any(k not in v for k in required):
            return None
        return v

    def nat(self, v, ptr):
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            self.fail(ptr, "expected a natural number")
            return None
        return v

    def rational(self, v, ptr) -> Fraction:
        try:
            return to_fraction(v)
        except ValueError as e:
            self.fail(ptr, str(e))
            return Fraction(0)

    def array(self, v, ptr, length=None):
        if not isinstance(v, list):
            self.fail(ptr, "expected an array")
            return None
        if length is not None and len(v) != length:
            self.fail(ptr, f"expected {length} entries, got {len(v)}")
            return None
        return v

    def vector(self, v, ptr, length):
        items = self.array(v, ptr, length)
        if items is None:
            return zeros(length)
        return tuple(self.rational(x, _ptr(ptr, i)) for i, x in enumerate(items))

    def matrix(self, v, ptr, rows, cols) -> Matrix:
        items = self.array(v, ptr, rows)
        if items is None:
            return Matrix.zero(rows, cols)
        out = []
        for i, row in enumerate(items):
            out.append(self.vector(row, _ptr(ptr, i), cols))
        return Matrix(rows, cols, tuple(out))

    def matrices(self, v, ptr, count, rows, cols):
        items = self.array(v, ptr, count)
        if items is None:
            return tuple(Matrix.zero(rows, cols) for _ in range(count))
        return tuple(self.matrix(m, _ptr(ptr, i), rows, cols) for i, m in enumerate(items))

    def brackets(self, v, ptr, dim):
        """Antisymmetric table from [[i, j, coeffs], ...] with i < j."""
        table = [[zeros(dim) for _ in range(dim)] for _ in range(dim)]
        items = self.array(v, ptr)
        seen = set()
        for n, entry in enumerate(items or []):
            p = _ptr(ptr, n)
            if not isinstance(entry, list) or len(entry) != 3:
                self.fail(p, "expected [i, j, coefficients]")
                continue
            i, j = self.nat(entry[0], _ptr(p, 0)), self.nat(entry[1], _ptr(p, 1))
            if i is None or j is None:
                continue
            if i >= dim or j >= dim:
                self.fail(p, f"index out of range for dimension {dim}")
                continue
            if i == j:
                self.fail(p, "bracket of a basis vector with itself is zero by antisymmetry; omit it")
                continue
            if i > j:
                self.fail(p, "list each pair once with i < j")
                continue
            if (i, j) in seen:
                self.fail(p, f"duplicate entry for pair ({i}, {j})")
                continue
            seen.add((i, j))
            c = self.vector(entry[2], _ptr(p, 2), dim)
            table[i][j] = c
            table[j][i] = tuple(-x for x in c)
        return tuple(tuple(r) for r in table)


# ---------------------------------------------------------------- writers

def q(x) -> str:
    return format_fraction(Fraction(x))


def vector_to_json(v):
    return [q(x) for x in v]


def matrix_to_json(m: Matrix):
    return [vector_to_json(r) for r in m.data]


def lie_to_json(g: LieAlgebra):
    return {"dim": g.dim, "bracket": [[i, j, vector_to_json(v)] for i, j, v in g.brackets()]}


def rep_to_json(r: LinearRep):
    return {"space_dim": r.space_dim, "action": [matrix_to_json(m) for m in r.action]}


def rrb_to_json(a: RRBAlgebra):
    return {"lie": lie_to_json(a.g), "rep": rep_to_json(a.rep), "T": matrix_to_json(a.T)}


def rb_to_json(a: RBAlgebra):
    return {"lie": lie_to_json(a.g), "T": matrix_to_json(a.T)}


def coeffs_to_json(r: RRBRepresentation):
    return {"curlyT": matrix_to_json(r.curlyT), "rho_h": rep_to_json(r.rho_h),
            "rho_w": rep_to_json(r.rho_w), "mu": [matrix_to_json(m) for m in r.mu]}


def rb_coeffs_to_json(r: RBRepresentation):
    return {"curlyT": matrix_to_json(r.curlyT), "rho_w": rep_to_json(r.rho_w)}


def cochain_to_json(c: Cochain):
    lay = c.scheme.layout
    return {"degree": c.scheme.degree,
            "layout": [{"block": n, "size": b.size} for n, b in lay.blocks],
            "coords": vector_to_json(c.coords)}


def two_cocycle_to_json(z):
    if isinstance(z, TwoCocycleRB):
        return {"omega": vector_to_json(z.omega), "chi": vector_to_json(z.chi)}
    return {"omega": vector_to_json(z.omega), "varpi": vector_to_json(z.varpi), "chi": vector_to_json(z.chi)}


def skeletal_to_json(s):
    out = {"g0_dim": s.g0_dim, "g1_dim": s.g1_dim,
           "l2_gg": lie_to_json(LieAlgebra.unchecked(s.g0_dim, s.l2_gg))["bracket"],
           "l2_gh": [matrix_to_json(m) for m in s.l2_gh],
           "l3": vector_to_json(s.l3), "T0": matrix_to_json(s.T0), "T1": matrix_to_json(s.T1),
           "T2": vector_to_json(s.T2)}
    if isinstance(s, SkeletalRRB2):
        out.update({"v0_dim": s.v0_dim, "v1_dim": s.v1_dim,
                    "rho0_v0": [matrix_to_json(m) for m in s.rho0_v0],
                    "rho0_v1": [matrix_to_json(m) for m in s.rho0_v1],
                    "rho1": [matrix_to_json(m) for m in s.rho1],
                    "rho2": vector_to_json(s.rho2)})
    return out


def dumps(value) -> str:
    """Canonical, byte-deterministic rendering."""
    return json.dumps(value, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------- readers

def load(path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise ParseError([("", f"file not found: {path}")]) from None
    except json.JSONDecodeError as e:
        raise ParseError([("", f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}")]) from None


def _lie(rd: _Reader, v, ptr):
    o = rd.obj(v, ptr, ("dim",), ("bracket",))
    if o is None:
        return None
    dim = rd.nat(o["dim"], _ptr(ptr, "dim"))
    if dim is None:
        return None
    table = rd.brackets(o.get("bracket", []), _ptr(ptr, "bracket"), dim)
    return LieAlgebra.unchecked(dim, table)


def _rep(rd: _Reader, g: LieAlgebra, v, ptr):
    o = rd.obj(v, ptr, ("space_dim", "action"))
    if o is None:
        return None
    m = rd.nat(o["space_dim"], _ptr(ptr, "space_dim"))
    if m is None:
        return None
    return LinearRep.unchecked(g, m, rd.matrices(o["action"], _ptr(ptr, "action"), g.dim, m, m))


def parse_lie(v, ptr="") -> LieAlgebra:
    rd = _Reader()
    g = _lie(rd, v, ptr)
    rd.done()
    return g


@dataclass(frozen=True)
class Instance:
    """A base structure plus an optional coefficient description.

    ``coeffs`` is None, the string "adjoint"/"coadjoint", or a parsed representation.
    """

    variant: str
    base: Any
    coeffs: Any


def _rrb_base(rd, o, ptr):
    g = _lie(rd, o["lie"], _ptr(ptr, "lie"))
    if g is None:
        return None
    rep = _rep(rd, g, o["rep"], _ptr(ptr, "rep"))
    if rep is None:
        return None
    T = rd.matrix(o["T"], _ptr(ptr, "T"), g.dim, rep.space_dim)
    return RRBAlgebra.unchecked(g, rep, T)


def _rb_base(rd, o, ptr):
    g = _lie(rd, o["lie"], _ptr(ptr, "lie"))
    if g is None:
        return None
    return RBAlgebra.unchecked(g, rd.matrix(o["T"], _ptr(ptr, "T"), g.dim, g.dim))


def _coeffs(rd, variant, base, v, ptr):
    if isinstance(v, str):
        if v not in ("adjoint", "coadjoint"):
            rd.fail(ptr, 'expected an object or one of "adjoint", "coadjoint"')
            return None
        return v
    g = base.g
    if variant == "rrb":
        o = rd.obj(v, ptr, ("curlyT", "rho_h", "rho_w", "mu"))
        if o is None:
            return None
        rho_h = _rep(rd, g, o["rho_h"], _ptr(ptr, "rho_h"))
        rho_w = _rep(rd, g, o["rho_w"], _ptr(ptr, "rho_w"))
        if rho_h is None or rho_w is None:
            return None
        p, w = rho_h.space_dim, rho_w.space_dim
        curly = rd.matrix(o["curlyT"], _ptr(ptr, "curlyT"), p, w)
        mu = rd.matrices(o["mu"], _ptr(ptr, "mu"), base.v_dim, w, p)
        return RRBRepresentation.unchecked(base, curly, rho_h, rho_w, mu)
    o = rd.obj(v, ptr, ("curlyT", "rho_w"))
    if o is None:
        return None
    rho_w = _rep(rd, g, o["rho_w"], _ptr(ptr, "rho_w"))
    if rho_w is None:
        return None
    curly = rd.matrix(o["curlyT"], _ptr(ptr, "curlyT"), rho_w.space_dim, rho_w.space_dim)
    return RBRepresentation.unchecked(base, curly, rho_w)


def parse_instance(v, variant: str = "rrb", ptr="") -> Instance:
    rd = _Reader()
    if variant == "rrb":
        o = rd.obj(v, ptr, ("lie", "rep", "T"), ("coeffs",))
        base = _rrb_base(rd, o, ptr) if o is not None else None
    else:
        o = rd.obj(v, ptr, ("lie", "T"), ("coeffs",))
        base = _rb_base(rd, o, ptr) if o is not None else None
    coeffs = None
    if base is not None and "coeffs" in o:
        coeffs = _coeffs(rd, variant, base, o["coeffs"], _ptr(ptr, "coeffs"))
    rd.done()
    return Instance(variant, base, coeffs)


def parse_coords(v, length: int, ptr="") -> tuple:
    rd = _Reader()
    out = rd.vector(v, ptr, length)
    rd.done()
    return out


def parse_two_cocycle(v, base, coeffs, variant: str = "rrb", ptr=""):
    """Coordinates sized against the degree-2 layout of (base, coeffs)."""
    rd = _Reader()
    n = base.g.dim
    if variant == "rrb":
        m, p, w = base.v_dim, coeffs.h_dim, coeffs.w_dim
        o = rd.obj(v, ptr, ("omega", "varpi", "chi"))
        if o is None:
            rd.done()
        z = TwoCocycle(rd.vector(o["omega"], _ptr(ptr, "omega"), comb(n, 2) * p),
                       rd.vector(o["varpi"], _ptr(ptr, "varpi"), n * m * w),
                       rd.vector(o["chi"], _ptr(ptr, "chi"), m * p))
    else:
        w = coeffs.w_dim
        o = rd.obj(v, ptr, ("omega", "chi"))
        if o is None:
            rd.done()
        z = TwoCocycleRB(rd.vector(o["omega"], _ptr(ptr, "omega"), comb(n, 2) * w),
                         rd.vector(o["chi"], _ptr(ptr, "chi"), n * w))
    rd.done()
    return z


def parse_cochain(v, sch: CochainScheme, ptr="") -> Cochain:
    """Either {"degree", "coords"} or {"degree", "blocks": {name: coords}}."""
    rd = _Reader()
    o = rd.obj(v, ptr, ("degree",), ("coords", "blocks", "layout"))
    if o is None:
        rd.done()
    if o["degree"] != sch.degree:
        rd.fail(_ptr(ptr, "degree"), f"expected degree {sch.degree}")
    lay = sch.layout
    if ("coords" in o) == ("blocks" in o):
        rd.fail(ptr, 'give exactly one of "coords" and "blocks"')
        rd.done()
    if "coords" in o:
        coords = rd.vector(o["coords"], _ptr(ptr, "coords"), sch.dim)
    else:
        bo = rd.obj(o["blocks"], _ptr(ptr, "blocks"), tuple(lay.names()))
        if bo is None:
            rd.done()
        parts = {name: rd.vector(bo[name], _ptr(_ptr(ptr, "blocks"), name), b.size) for name, b in lay.blocks}
        coords = lay.join(parts)
    rd.done()
    return Cochain(sch, coords)


def parse_section(v, n: int, h: int, m: int = None, w: int = None, ptr=""):
    """{"lie": (n+h) x n matrix, "rep": (m+w) x m matrix}; "rep" only for the relative case."""
    rd = _Reader()
    keys = ("lie", "rep") if m is not None else ("lie",)
    o = rd.obj(v, ptr, keys)
    if o is None:
        rd.done()
    sg = rd.matrix(o["lie"], _ptr(ptr, "lie"), n + h, n)
    sv = rd.matrix(o["rep"], _ptr(ptr, "rep"), m + w, m) if m is not None else None
    rd.done()
    return (sg, sv) if m is not None else sg


def parse_extension(v, variant: str = "rrb", ptr=""):
    """{"base": instance, "total": instance, "h_dim", "w_dim"} (no "h_dim" for rb)."""
    rd = _Reader()
    keys = ("base", "total", "h_dim", "w_dim") if variant == "rrb" else ("base", "total", "w_dim")
    o = rd.obj(v, ptr, keys)
    if o is None:
        rd.done()
    dims = {k: rd.nat(o[k], _ptr(ptr, k)) for k in keys[2:]}
    rd.done()
    base = parse_instance(o["base"], variant, _ptr(ptr, "base")).base
    total = parse_instance(o["total"], variant, _ptr(ptr, "total")).base
    n = base.g.dim
    if total.g.dim != n + dims.get("h_dim", dims["w_dim"]):
        rd.fail(_ptr(ptr, "total"), "total Lie algebra dimension does not match base plus kernel")
    if variant == "rrb" and total.v_dim != base.v_dim + dims["w_dim"]:
        rd.fail(_ptr(ptr, "total"), "total representation dimension does not match base plus kernel")
    rd.done()
    return base, total, dims


def extension_to_json(e):
    if hasattr(e, "h_dim"):
        return {"base": rrb_to_json(e.base), "total": rrb_to_json(e.total), "h_dim": e.h_dim, "w_dim": e.w_dim}
    return {"base": rb_to_json(e.base), "total": rb_to_json(e.total), "w_dim": e.w_dim}


def _block_coords(rd, o, key, ptr, block: AltBlock):
    return rd.vector(o[key], _ptr(ptr, key), block.size)


def parse_skeletal(v, variant: str = "rrb", ptr=""):
    rd = _Reader()
    dims = ("g0_dim", "g1_dim", "v0_dim", "v1_dim") if variant == "rrb" else ("g0_dim", "g1_dim")
    fields = dims + ("l2_gg", "l2_gh", "l3", "T0", "T1", "T2")
    if variant == "rrb":
        fields += ("rho0_v0", "rho0_v1", "rho1", "rho2")
    o = rd.obj(v, ptr, fields)
    if o is None:
        rd.done()
    d = {k: rd.nat(o[k], _ptr(ptr, k)) for k in dims}
    rd.done()
    n, h = d["g0_dim"], d["g1_dim"]
    m, w = (d["v0_dim"], d["v1_dim"]) if variant == "rrb" else (n, h)
    l2_gg = rd.brackets(o["l2_gg"], _ptr(ptr, "l2_gg"), n)
    l2_gh = rd.matrices(o["l2_gh"], _ptr(ptr, "l2_gh"), n, h, h)
    l3 = _block_coords(rd, o, "l3", ptr, AltBlock(n, 3, (), h))
    T0 = rd.matrix(o["T0"], _ptr(ptr, "T0"), n, m)
    T1 = rd.matrix(o["T1"], _ptr(ptr, "T1"), h, w)
    T2 = _block_coords(rd, o, "T2", ptr, AltBlock(m, 2, (), h))
    if variant == "rb":
        rd.done()
        return SkeletalRB2(n, h, l2_gg, l2_gh, l3, T0, T1, T2)
    rho0_v0 = rd.matrices(o["rho0_v0"], _ptr(ptr, "rho0_v0"), n, m, m)
    rho0_v1 = rd.matrices(o["rho0_v1"], _ptr(ptr, "rho0_v1"), n, w, w)
    rho1 = rd.matrices(o["rho1"], _ptr(ptr, "rho1"), h, w, m)
    rho2 = _block_coords(rd, o, "rho2", ptr, AltBlock(n, 2, (m,), w))
    rd.done()
    return SkeletalRRB2(n, h, m, w, l2_gg, l2_gh, l3, rho0_v0, rho0_v1, rho1, rho2, T0, T1, T2)
