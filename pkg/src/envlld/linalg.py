"""Fraction-free linear algebra over Q[C] and Q[Z2, Z3].

One-step Bareiss elimination keeps every intermediate entry polynomial: the
update (piv*a_ij - c_i*a_kj) / prev_pivot divides exactly at each step, which
is asserted rather than assumed.  A single pass yields the rank, the pivot
columns (tracked through a virtual column permutation, no data is moved), and
a content-normalized kernel basis.  Pivots are chosen by lowest total degree
with deterministic ties, so results are reproducible across runs.

Rational (arity-free) helpers live here too: an incremental reduced echelon
for rank and span-membership queries over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .centerpoly import CenterPoly, as_rat, content_normalize, divexact


class PolyMatrix:
    """Dense matrix of CenterPoly entries of one arity."""

    __slots__ = ("arity", "rows", "cols", "entries")

    def __init__(self, arity, rows, cols, entries):
        assert rows >= 0 and cols >= 0
        entries = tuple(tuple(r) for r in entries)
        assert len(entries) == rows
        for r in entries:
            assert len(r) == cols
            for e in r:
                assert isinstance(e, CenterPoly) and e.arity == arity
        self.arity = arity
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, arity, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            assert rows, "column count is ambiguous for an empty matrix"
            cols = len(rows[0])
        return cls(arity, len(rows), cols, rows)

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols}, arity={self.arity})"


@dataclass(frozen=True)
class EliminationResult:
    rank: int
    kernel_basis: tuple
    pivot_cols: tuple


def _pivot_key(entry, i, j):
    # lowest total degree first; ties by canonical term list, then position
    return (entry.degree(), entry.sort_key(), i, j)


def ff_rank_kernel(M):
    """Rank and right-kernel basis of M by fraction-free elimination.

    Kernel vectors are content-normalized, one per non-pivot column, and each
    satisfies M v = 0 exactly.
    """
    arity = M.arity
    nrows, ncols = M.rows, M.cols
    rows = [list(r) for r in M.entries]
    pivot_cols = []
    prev = CenterPoly.const(arity, 1)
    r = 0
    while r < nrows:
        best = None
        for i in range(r, nrows):
            for j in range(ncols):
                if j in pivot_cols:
                    continue
                e = rows[i][j]
                if e.is_zero():
                    continue
                key = _pivot_key(e, i, j)
                if best is None or key < best[0]:
                    best = (key, i, j)
        if best is None:
            break
        _, pi, pj = best
        rows[r], rows[pi] = rows[pi], rows[r]
        piv = rows[r][pj]
        for i in range(r + 1, nrows):
            ci = rows[i][pj]
            for j in range(ncols):
                new = piv * rows[i][j] - ci * rows[r][j]
                rows[i][j] = divexact(new, prev)
        pivot_cols.append(pj)
        prev = piv
        r += 1
    rank = r

    free_cols = [j for j in range(ncols) if j not in pivot_cols]
    basis = []
    zero = CenterPoly.zero(arity)
    for f in free_cols:
        v = [None] * ncols
        for j in free_cols:
            v[j] = CenterPoly.const(arity, 1) if j == f else zero
        # back-substitute bottom-up; row t is zero at pivot columns of rows < t,
        # so unset positions never contribute
        for t in range(rank - 1, -1, -1):
            row = rows[t]
            pcol = pivot_cols[t]
            a = row[pcol]
            acc = zero
            for j in range(ncols):
                if j != pcol and v[j] is not None and not row[j].is_zero():
                    acc = acc + row[j] * v[j]
            for j in range(ncols):
                if v[j] is not None:
                    v[j] = v[j] * a
            v[pcol] = -acc
        basis.append(content_normalize(v))
    return EliminationResult(rank, tuple(basis), tuple(pivot_cols))


def solve_fraction_field(M, b):
    """Solve M z = z0 * b exactly over Q[center] with z0 nonzero.

    Returns (z0, z) jointly content-normalized, or None when b is not in the
    column span of M over the fraction field.  Works by extracting a kernel
    vector of [M | -b] whose last coordinate is nonzero.
    """
    assert len(b) == M.rows
    aug = [list(row) + [-bi] for row, bi in zip(M.entries, b)]
    res = ff_rank_kernel(PolyMatrix(M.arity, M.rows, M.cols + 1, aug))
    for v in res.kernel_basis:
        if not v[-1].is_zero():
            vec = content_normalize([v[-1], *v[:-1]])
            return vec[0], tuple(vec[1:])
    return None


class RatEchelon:
    """Incremental reduced echelon over Q for rank and membership queries."""

    def __init__(self, width):
        self.width = width
        self.rows = []
        self.pivots = []

    def reduce(self, vec):
        v = [as_rat(a) for a in vec]
        assert len(v) == self.width
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def add(self, vec):
        """Insert vec if independent of the span so far; True if rank grew."""
        v = self.reduce(vec)
        p = next((i for i, a in enumerate(v) if a), None)
        if p is None:
            return False
        inv = Fraction(1) / v[p]
        v = [a * inv for a in v]
        # keep stored rows reduced against the new pivot
        for k, row in enumerate(self.rows):
            c = row[p]
            if c:
                self.rows[k] = [a - c * b for a, b in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(p)
        return True

    def contains(self, vec):
        return all(a == 0 for a in self.reduce(vec))

    @property
    def rank(self):
        return len(self.rows)


def rat_rank(vectors, width):
    ech = RatEchelon(width)
    for v in vectors:
        ech.add(v)
    return ech.rank


def rat_solve(columns, target):
    """Exact coordinates x with sum_j x_j columns[j] = target, or None.

    Plain Gaussian elimination over Q on the augmented system; the result is
    verified against the input columns before being returned.
    """
    n = len(columns)
    width = len(target)
    rows = [[as_rat(columns[j][i]) for j in range(n)] + [as_rat(target[i])]
            for i in range(width)]
    piv_of_col = {}
    r = 0
    for j in range(n):
        pi = next((i for i in range(r, width) if rows[i][j]), None)
        if pi is None:
            continue
        rows[r], rows[pi] = rows[pi], rows[r]
        inv = Fraction(1) / rows[r][j]
        rows[r] = [a * inv for a in rows[r]]
        for i in range(width):
            if i != r and rows[i][j]:
                c = rows[i][j]
                rows[i] = [a - c * b for a, b in zip(rows[i], rows[r])]
        piv_of_col[j] = r
        r += 1
    for i in range(r, width):
        if rows[i][n]:
            return None
    x = [rows[piv_of_col[j]][n] if j in piv_of_col else Fraction(0) for j in range(n)]
    for i in range(width):
        acc = sum((x[j] * as_rat(columns[j][i]) for j in range(n)), Fraction(0))
        assert acc == as_rat(target[i])
    return x


def rat_inv(mat):
    """Inverse of a square matrix over Q; raises ValueError if singular."""
    n = len(mat)
    aug = [[as_rat(mat[i][j]) for j in range(n)] +
           [Fraction(1) if k == i else Fraction(0) for k in range(n)]
           for i in range(n)]
    for j in range(n):
        pi = next((i for i in range(j, n) if aug[i][j]), None)
        if pi is None:
            raise ValueError("matrix is singular")
        aug[j], aug[pi] = aug[pi], aug[j]
        inv = Fraction(1) / aug[j][j]
        aug[j] = [a * inv for a in aug[j]]
        for i in range(n):
            if i != j and aug[i][j]:
                c = aug[i][j]
                aug[i] = [a - c * b for a, b in zip(aug[i], aug[j])]
    return [row[n:] for row in aug]
