"""Exact integer matrices backed by Python ints."""

from __future__ import annotations

from typing import Iterable, Sequence


class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers.

    Rows are stored as tuples; a ``1 x n`` matrix doubles as a row vector.
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]], ncols: int | None = None):
        self.rows = tuple(tuple(int(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise ValueError("ragged rows")
        else:
            self.ncols = 0 if ncols is None else ncols

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> IntMatrix:
        ncols = nrows if ncols is None else ncols
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def ones_row(cls, n: int) -> IntMatrix:
        """The all-1 row vector ``j``."""
        return cls([[1] * n])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntMatrix):
            return self.rows == other.rows and self.shape == other.shape
        if isinstance(other, (list, tuple)):
            return self.rows == tuple(tuple(r) for r in other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self.rows]})"

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def transpose(self) -> IntMatrix:
        if not self.nrows:
            return IntMatrix.zeros(self.ncols, 0)
        return IntMatrix(zip(*self.rows))

    @property
    def T(self) -> IntMatrix:
        return self.transpose()

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return IntMatrix(
            [a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        # sparse-aware row times matrix: skip zero entries of the left row
        out = []
        ocols = other.ncols
        orows = other.rows
        for r in self.rows:
            acc = [0] * ocols
            for k, a in enumerate(r):
                if a:
                    row = orows[k]
                    for j in range(ocols):
                        b = row[j]
                        if b:
                            acc[j] += a * b
            out.append(acc)
        return IntMatrix(out, ocols)

    def trace(self) -> int:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        return sum(self.rows[i][i] for i in range(self.nrows))

    def total(self) -> int:
        """Sum of all entries, i.e. ``j M j^T``."""
        return sum(sum(r) for r in self.rows)

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.rows]


def matrix_power(a: IntMatrix, m: int) -> IntMatrix:
    """Exact ``a**m`` by repeated squaring; entry (u, v) counts m-walks u -> v."""
    if not a.is_square:
        raise ValueError("matrix_power needs a square matrix")
    if m < 0:
        raise ValueError("exponent must be nonnegative")
    result = IntMatrix.identity(a.nrows)
    base = a
    while m:
        if m & 1:
            result = result @ base
        m >>= 1
        if m:
            base = base @ base
    return result


def as_matrix(rows: Sequence[Sequence[int]] | IntMatrix) -> IntMatrix:
    return rows if isinstance(rows, IntMatrix) else IntMatrix(rows)
