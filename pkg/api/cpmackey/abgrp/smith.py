import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from cpmackey.abgrp.matrix import IntegerMatrix, Vector
from cpmackey.exceptions import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmithDecomposition:
    """D = U * m * V with U, V unimodular and D diagonal, d1 | d2 | ...

    The inverses of U and V are tracked alongside so callers never need to
    invert a unimodular matrix themselves.
    """

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix
    U_inv: IntegerMatrix
    V_inv: IntegerMatrix

    @property
    def diagonal(self) -> Tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    def invariant_factors(self) -> List[int]:
        """Cokernel invariants: torsion chain (entries >= 2) then a 0 per free summand."""
        torsion = [d for d in self.diagonal if d > 1]
        return torsion + [0] * (self.D.rows - self.rank)


class _Reducer:
    """Mutable working state for one Smith normal form computation."""

    def __init__(self, m: IntegerMatrix):
        self.r, self.c = m.shape
        self.a = m.to_rows()
        self.u = IntegerMatrix.identity(self.r).to_rows()
        self.u_inv = IntegerMatrix.identity(self.r).to_rows()
        self.v = IntegerMatrix.identity(self.c).to_rows()
        self.v_inv = IntegerMatrix.identity(self.c).to_rows()

    def swap_rows(self, i: int, j: int):
        if i == j:
            return
        for mat in (self.a, self.u):
            mat[i], mat[j] = mat[j], mat[i]
        for row in self.u_inv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(self, i: int, j: int):
        if i == j:
            return
        for mat in (self.a, self.v):
            for row in mat:
                row[i], row[j] = row[j], row[i]
        self.v_inv[i], self.v_inv[j] = self.v_inv[j], self.v_inv[i]

    def add_row(self, target: int, src: int, q: int):
        # row_target += q * row_src
        for mat in (self.a, self.u):
            t, s = mat[target], mat[src]
            mat[target] = [x + q * y for x, y in zip(t, s)]
        for row in self.u_inv:
            row[src] -= q * row[target]

    def add_col(self, target: int, src: int, q: int):
        # col_target += q * col_src
        for mat in (self.a, self.v):
            for row in mat:
                row[target] += q * row[src]
        t, s = self.v_inv[target], self.v_inv[src]
        self.v_inv[src] = [y - q * x for x, y in zip(t, s)]

    def negate_row(self, i: int):
        self.a[i] = [-x for x in self.a[i]]
        self.u[i] = [-x for x in self.u[i]]
        for row in self.u_inv:
            row[i] = -row[i]

    def min_pivot(self, t: int) -> Optional[Tuple[int, int]]:
        best = None
        best_abs = 0
        for i in range(t, self.r):
            row = self.a[i]
            for j in range(t, self.c):
                x = row[j]
                if x and (best is None or abs(x) < best_abs):
                    best, best_abs = (i, j), abs(x)
                    if best_abs == 1:
                        return best
        return best

    def clear_cross(self, t: int) -> bool:
        """Reduce column t and row t against the pivot; True if remainders remain."""
        a = self.a
        dirty = False
        for i in range(t + 1, self.r):
            if a[i][t]:
                self.add_row(i, t, -(a[i][t] // a[t][t]))
                dirty = dirty or bool(a[i][t])
        for j in range(t + 1, self.c):
            if a[t][j]:
                self.add_col(j, t, -(a[t][j] // a[t][t]))
                dirty = dirty or bool(a[t][j])
        return dirty

    def repivot(self, t: int):
        a = self.a
        best, best_abs = (t, t), abs(a[t][t])
        for j in range(t + 1, self.c):
            if a[t][j] and abs(a[t][j]) < best_abs:
                best, best_abs = (t, j), abs(a[t][j])
        for i in range(t + 1, self.r):
            if a[i][t] and abs(a[i][t]) < best_abs:
                best, best_abs = (i, t), abs(a[i][t])
        self.swap_rows(t, best[0])
        self.swap_cols(t, best[1])

    def non_divisible(self, t: int) -> Optional[int]:
        p = self.a[t][t]
        for i in range(t + 1, self.r):
            if any(x % p for x in self.a[i][t + 1 :]):
                return i
        return None

    def run(self) -> SmithDecomposition:
        for t in range(min(self.r, self.c)):
            pivot = self.min_pivot(t)
            if pivot is None:
                break
            self.swap_rows(t, pivot[0])
            self.swap_cols(t, pivot[1])
            while True:
                if self.clear_cross(t):
                    self.repivot(t)
                    continue
                bad = self.non_divisible(t)
                if bad is None:
                    break
                self.add_row(t, bad, 1)
            if self.a[t][t] < 0:
                self.negate_row(t)
        return SmithDecomposition(
            U=IntegerMatrix.from_rows(self.u, cols=self.r),
            D=IntegerMatrix.from_rows(self.a, cols=self.c),
            V=IntegerMatrix.from_rows(self.v, cols=self.c),
            U_inv=IntegerMatrix.from_rows(self.u_inv, cols=self.r),
            V_inv=IntegerMatrix.from_rows(self.v_inv, cols=self.c),
        )


@lru_cache(maxsize=4096)
def smith_normal_form(m: IntegerMatrix) -> SmithDecomposition:
    """Smith normal form with minimal-absolute-value pivoting.

    Ties are broken by lowest row, then lowest column. The result is memoized;
    lru_cache is safe to call from several threads.
    """
    return _Reducer(m).run()


def solve_columns(relations: IntegerMatrix, b: IntegerMatrix) -> Optional[IntegerMatrix]:
    """Integer X with relations @ X == b, or None if some column is unsolvable."""
    if b.rows != relations.rows:
        raise PreconditionError(
            f"right-hand side has {b.rows} rows, relation matrix has {relations.rows}"
        )
    snf = smith_normal_form(relations)
    diag = snf.diagonal
    rank = snf.rank
    c = snf.U @ b
    ys = []
    for j in range(b.cols):
        col = c.column(j)
        y = [0] * relations.cols
        for i in range(rank):
            q, rem = divmod(col[i], diag[i])
            if rem:
                return None
            y[i] = q
        if any(col[rank:]):
            return None
        ys.append(y)
    if not ys:
        return IntegerMatrix.zero(relations.cols, 0)
    return snf.V @ IntegerMatrix.from_columns(ys, rows=relations.cols)


def solve_column(relations: IntegerMatrix, b: Sequence[int]) -> Optional[Vector]:
    x = solve_columns(relations, IntegerMatrix.column_vector(b))
    return None if x is None else x.column(0)


def column_echelon(m: IntegerMatrix) -> Tuple[IntegerMatrix, IntegerMatrix, int]:
    """Column-style Hermite reduction: m @ V = H with V unimodular.

    The first `rank` columns of H are an echelon basis of the column lattice
    (positive pivots, entries left of a pivot reduced modulo it); the rest are
    zero, so the matching columns of V span the integer nullspace.
    """
    r, c = m.shape
    h = [list(col) for col in m.columns()]
    v = [list(col) for col in IntegerMatrix.identity(c).columns()]

    def add(target: int, src: int, q: int):
        h[target] = [x + q * y for x, y in zip(h[target], h[src])]
        v[target] = [x + q * y for x, y in zip(v[target], v[src])]

    def swap(i: int, j: int):
        h[i], h[j] = h[j], h[i]
        v[i], v[j] = v[j], v[i]

    k = 0
    for i in range(r):
        if k >= c:
            break
        while True:
            nz = [j for j in range(k, c) if h[j][i]]
            if not nz:
                break
            best = min(nz, key=lambda j: abs(h[j][i]))
            swap(k, best)
            done = True
            for j in range(k + 1, c):
                if h[j][i]:
                    add(j, k, -(h[j][i] // h[k][i]))
                    done = done and not h[j][i]
            if done:
                break
        if not h[k][i]:
            continue
        if h[k][i] < 0:
            h[k] = [-x for x in h[k]]
            v[k] = [-x for x in v[k]]
        for j in range(k):
            if h[j][i]:
                add(j, k, -(h[j][i] // h[k][i]))
        k += 1
    H = IntegerMatrix.from_columns(h, rows=r) if c else IntegerMatrix.zero(r, 0)
    V = IntegerMatrix.from_columns(v, rows=c) if c else IntegerMatrix.zero(0, 0)
    return H, V, k


def column_basis(m: IntegerMatrix) -> IntegerMatrix:
    """A basis (as columns) of the lattice spanned by the columns of m."""
    H, _, rank = column_echelon(m)
    return H.submatrix(col_idx=range(rank))


def integer_nullspace(m: IntegerMatrix) -> IntegerMatrix:
    """Columns forming a basis of {x in Z^cols : m @ x == 0}."""
    _, V, rank = column_echelon(m)
    return V.submatrix(col_idx=range(rank, m.cols))
