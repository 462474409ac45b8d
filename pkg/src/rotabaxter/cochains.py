"""Alternating cochain blocks and symbolic evaluation used to assemble coboundary matrices.

A block stores maps ``A^{wedge k} (x) E_1 (x) ... (x) E_r -> Y``. Wedge arguments
run over strictly increasing index tuples in lexicographic order; the flattened
coordinate is (tuple index, extra indices, target coordinate), target fastest.

To assemble a matrix row by row, cochains are evaluated *symbolically*: the
value of a generic cochain is a list (one entry per target coordinate) of
sparse linear forms ``{input coordinate: coefficient}``.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb, prod
from typing import Callable, Sequence

from .linalg import ONE, ZERO, Matrix

DEFAULT_BUDGET = 20000


class BudgetExceeded(RuntimeError):
    def __init__(self, message: str, sizes):
        super().__init__(message)
        self.sizes = sizes


def permutation_sign(idx: Sequence[int]):
    """(sign, sorted tuple) for distinct indices, or (0, None) on a repeat."""
    idx = list(idx)
    if len(set(idx)) < len(idx):
        return 0, None
    sign = 1
    # insertion sort counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(idx)


@dataclass(frozen=True)
class AltBlock:
    alt_dim: int
    k: int
    extra_dims: tuple
    target_dim: int
    offset: int = 0
    _index: dict = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {t: n for n, t in enumerate(self.tuples())})

    def tuples(self):
        return list(combinations(range(self.alt_dim), self.k))

    @property
    def n_tuples(self) -> int:
        return comb(self.alt_dim, self.k)

    @property
    def extra_size(self) -> int:
        return prod(self.extra_dims)

    @property
    def size(self) -> int:
        return self.n_tuples * self.extra_size * self.target_dim

    def extra_keys(self):
        return list(product(*[range(d) for d in self.extra_dims]))

    def keys(self):
        """Output basis keys (tuple, extras) in layout order."""
        return [(t, e) for t in self.tuples() for e in self.extra_keys()]

    def base_index(self, tup: tuple, extras: tuple) -> int:
        flat = 0
        for e, d in zip(extras, self.extra_dims):
            flat = flat * d + e
        return self.offset + (self._index[tup] * self.extra_size + flat) * self.target_dim

    def decode(self, pos: int):
        """Inverse of the flattening: (tuple, extras, target coordinate)."""
        rel = pos - self.offset
        c = rel % self.target_dim
        rest = rel // self.target_dim
        flat = rest % self.extra_size
        t = rest // self.extra_size
        extras = []
        for d in reversed(self.extra_dims):
            extras.append(flat % d)
            flat //= d
        return self.tuples()[t], tuple(reversed(extras)), c

    def value(self, coords: Sequence, tup: Sequence[int], extras: Sequence[int] = ()):
        """Concrete value on basis indices (any order, repeats give zero)."""
        sign, st = permutation_sign(tup)
        if not sign:
            return (ZERO,) * self.target_dim
        b = self.base_index(st, tuple(extras))
        return tuple(sign * coords[b + c] for c in range(self.target_dim))


# ---------------------------------------------------------------- symbolic values

def lv_zero(n: int):
    return [dict() for _ in range(n)]


def lv_axpy(acc, c, lv):
    """acc += c * lv (in place)."""
    if not c:
        return acc
    for a, d in zip(acc, lv):
        for k, x in d.items():
            s = a.get(k, ZERO) + c * x
            if s:
                a[k] = s
            else:
                a.pop(k, None)
    return acc


def lv_apply(m: Matrix, lv):
    out = lv_zero(m.rows)
    for r in range(m.rows):
        for c, x in enumerate(m.data[r]):
            if x and lv[c]:
                lv_axpy([out[r]], x, [lv[c]])
    return out


def sparse(v: Sequence):
    return [(i, x) for i, x in enumerate(v) if x]


def basis_arg(i: int):
    return [(i, ONE)]


def evaluate(block: AltBlock, alt_args, extra_args=()):
    """Symbolic value of a generic cochain in ``block`` on sparse arguments."""
    out = lv_zero(block.target_dim)
    if block.size == 0:
        return out
    for choice in product(*alt_args):
        idx = [i for i, _ in choice]
        sign, st = permutation_sign(idx)
        if not sign:
            continue
        coef = Fraction(sign)
        for _, x in choice:
            coef *= x
        for echoice in product(*extra_args):
            ec = coef
            for _, x in echoice:
                ec *= x
            b = block.base_index(st, tuple(i for i, _ in echoice))
            for c in range(block.target_dim):
                d = out[c]
                s = d.get(b + c, ZERO) + ec
                if s:
                    d[b + c] = s
                else:
                    d.pop(b + c, None)
    return out


def thread_count() -> int:
    try:
        return max(1, int(os.environ.get("RRB_THREADS", "1")))
    except ValueError:
        return 1


def assemble(row_jobs: Sequence, row_fn: Callable, ncols: int) -> Matrix:
    """Stack the symbolic rows produced by ``row_fn`` for each job, in order."""
    threads = thread_count()
    if threads > 1 and len(row_jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            chunks = list(ex.map(row_fn, row_jobs))
    else:
        chunks = [row_fn(j) for j in row_jobs]
    rows = []
    for lv in chunks:
        for d in lv:
            r = [ZERO] * ncols
            for k, x in d.items():
                r[k] = x
            rows.append(tuple(r))
    return Matrix(len(rows), ncols, tuple(rows))


@dataclass(frozen=True)
class Layout:
    """An ordered list of named blocks for one degree."""

    degree: int
    blocks: tuple  # (name, AltBlock) pairs

    @classmethod
    def build(cls, degree: int, specs, budget: int | None = DEFAULT_BUDGET):
        blocks = []
        off = 0
        for name, alt_dim, k, extras, target in specs:
            b = AltBlock(alt_dim, k, tuple(extras), target, off)
            blocks.append((name, b))
            off += b.size
        if budget is not None and off > budget:
            sizes = {name: b.size for name, b in blocks}
            raise BudgetExceeded(
                f"degree {degree} cochains need {off} coordinates, budget is {budget} (blocks {sizes})", sizes)
        return cls(degree, tuple(blocks))

    def __getitem__(self, name) -> AltBlock:
        for n, b in self.blocks:
            if n == name:
                return b
        raise KeyError(name)

    def names(self):
        return [n for n, _ in self.blocks]

    @property
    def size(self) -> int:
        return sum(b.size for _, b in self.blocks)

    def sizes(self):
        return tuple(b.size for _, b in self.blocks)

    def span(self, name):
        b = self[name]
        return range(b.offset, b.offset + b.size)

    def split(self, coords: Sequence):
        return {n: tuple(coords[b.offset:b.offset + b.size]) for n, b in self.blocks}

    def join(self, parts: dict):
        out = []
        for n, b in self.blocks:
            v = tuple(parts.get(n, (ZERO,) * b.size))
            if len(v) != b.size:
                raise ValueError(f"block {n} needs {b.size} coordinates, got {len(v)}")
            out.extend(v)
        return tuple(out)


def evaluate_at(block: AltBlock, coords: Sequence, alt_vectors, extra_vectors=()):
    """Concrete value of the cochain ``coords`` on arbitrary argument vectors.

    ``coords`` holds the whole layout the block belongs to (or just the block when
    its offset is zero).
    """
    lv = evaluate(block, [sparse(v) for v in alt_vectors], [sparse(v) for v in extra_vectors])
    return tuple(sum((coords[k] * x for k, x in d.items()), ZERO) for d in lv)
