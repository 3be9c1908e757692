# Dense integer matrices with exact (arbitrary precision) entries
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from cpmackey.exceptions import PreconditionError

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable rows x cols matrix over the integers.

    Entries are stored row-major. Matrices with zero rows or zero columns are
    allowed and keep their other dimension.
    """

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise PreconditionError(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise PreconditionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntegerMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise PreconditionError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(
        cls, columns: Sequence[Sequence[int]], rows: int
    ) -> "IntegerMatrix":
        columns = [tuple(int(x) for x in c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise PreconditionError("column length does not match row count")
        return cls.from_rows(
            [[c[i] for c in columns] for i in range(rows)], cols=len(columns)
        )

    @classmethod
    def zero(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, diag: Sequence[int], rows: int = None, cols: int = None):
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        data = [[0] * cols for _ in range(rows)]
        for i, d in enumerate(diag):
            data[i][i] = int(d)
        return cls.from_rows(data, cols=cols)

    @classmethod
    def column_vector(cls, v: Sequence[int]) -> "IntegerMatrix":
        return cls(len(v), 1, tuple(int(x) for x in v))

    @classmethod
    def row_vector(cls, v: Sequence[int]) -> "IntegerMatrix":
        return cls(1, len(v), tuple(int(x) for x in v))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx: Tuple[int, int]) -> int:
        i, j = idx
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> List[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return not any(self.entries)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix.from_rows(
            [self.column(j) for j in range(self.cols)], cols=self.rows
        )

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise PreconditionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        other_cols = [other.column(j) for j in range(other.cols)]
        data = []
        for i in range(self.rows):
            r = self.row(i)
            data.append([sum(a * b for a, b in zip(r, c) if a) for c in other_cols])
        return IntegerMatrix.from_rows(data, cols=other.cols)

    def apply(self, v: Sequence[int]) -> Vector:
        if len(v) != self.cols:
            raise PreconditionError(
                f"vector of length {len(v)} for a matrix with {self.cols} columns"
            )
        return tuple(
            sum(a * b for a, b in zip(self.row(i), v) if a) for i in range(self.rows)
        )

    def _check_same_shape(self, other: "IntegerMatrix"):
        if self.shape != other.shape:
            raise PreconditionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        self._check_same_shape(other)
        return IntegerMatrix(
            self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        self._check_same_shape(other)
        return IntegerMatrix(
            self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def __neg__(self) -> "IntegerMatrix":
        return self.scale(-1)

    def scale(self, k: int) -> "IntegerMatrix":
        return IntegerMatrix(self.rows, self.cols, tuple(k * a for a in self.entries))

    def power(self, n: int) -> "IntegerMatrix":
        if self.rows != self.cols:
            raise PreconditionError("power of a non-square matrix")
        result = IntegerMatrix.identity(self.rows)
        for _ in range(n):
            result = result @ self
        return result

    def hstack(self, *others: "IntegerMatrix") -> "IntegerMatrix":
        blocks = (self,) + others
        if any(b.rows != self.rows for b in blocks):
            raise PreconditionError("hstack of matrices with different row counts")
        data = [
            [x for b in blocks for x in b.row(i)] for i in range(self.rows)
        ]
        return IntegerMatrix.from_rows(data, cols=sum(b.cols for b in blocks))

    def vstack(self, *others: "IntegerMatrix") -> "IntegerMatrix":
        blocks = (self,) + others
        if any(b.cols != self.cols for b in blocks):
            raise PreconditionError("vstack of matrices with different column counts")
        return IntegerMatrix(
            sum(b.rows for b in blocks),
            self.cols,
            tuple(x for b in blocks for x in b.entries),
        )

    def submatrix(
        self, row_idx: Iterable[int] = None, col_idx: Iterable[int] = None
    ) -> "IntegerMatrix":
        row_idx = list(range(self.rows)) if row_idx is None else list(row_idx)
        col_idx = list(range(self.cols)) if col_idx is None else list(col_idx)
        return IntegerMatrix.from_rows(
            [[self[i, j] for j in col_idx] for i in row_idx], cols=len(col_idx)
        )

    def kron(self, other: "IntegerMatrix") -> "IntegerMatrix":
        """Kronecker product; row (i, k) sits at index i * other.rows + k."""
        data = []
        for i in range(self.rows):
            for k in range(other.rows):
                orow = other.row(k)
                data.append([a * b for a in self.row(i) for b in orow])
        return IntegerMatrix.from_rows(data, cols=self.cols * other.cols)

    def __repr__(self) -> str:
        return f"IntegerMatrix({self.rows}x{self.cols}, {self.to_rows()})"

    def __str__(self) -> str:
        return format_matrix(self)


def block_diagonal(*blocks: IntegerMatrix) -> IntegerMatrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    data = [[0] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                data[r0 + i][c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return IntegerMatrix.from_rows(data, cols=cols)


def format_matrix(m: IntegerMatrix) -> str:
    """Bracketed rows with right-aligned columns, `0` for an empty matrix."""
    if m.rows == 0 or m.cols == 0:
        return "0"
    width = max(len(str(x)) for x in m.entries)
    return "\n".join(
        "| " + " ".join(str(x).rjust(width) for x in m.row(i)) + " |"
        for i in range(m.rows)
    )
