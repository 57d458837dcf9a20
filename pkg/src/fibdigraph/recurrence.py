"""Exact integer recurrences: d-step Fibonacci numbers, vertex counts, closed walks."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import LibraryDefect
from .matrix import IntMatrix, matrix_power


def _check_d(d: int):
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")


def _run_recurrence(seeds: list[int], d: int, steps: int) -> list[int]:
    """Extend ``seeds`` by ``steps`` terms of ``a[n] = a[n-1] + ... + a[n-d]``."""
    seq = list(seeds)
    window = sum(seq[-d:])
    for _ in range(steps):
        seq.append(window)
        window += seq[-1] - (seq[-d - 1] if len(seq) > d else 0)
    return seq


def d_step_fibonacci(d: int, k: int) -> int:
    """``F_k^{(d)}`` with ``F_k = 0`` for ``k <= 0`` and ``F_1 = F_2 = 1``."""
    _check_d(d)
    if k <= 0:
        return 0
    if k <= 2:
        return 1
    return _d_step_table(d, k)[k]


@lru_cache(maxsize=64)
def _d_step_table_cached(d: int, n: int) -> tuple[int, ...]:
    # index i holds F_{i}; d zeros for F_{1-d}..F_0 are prepended then dropped
    seq = _run_recurrence([0] * (d - 1) + [0, 1], d, n - 1)
    return tuple(seq[d - 1:])


def _d_step_table(d: int, k: int) -> tuple[int, ...]:
    size = 1 << max(5, (k + 1).bit_length())
    return _d_step_table_cached(d, size)


def vertex_count(d: int, k: int) -> int:
    """``N(d, k)``: seeds ``N(d, i) = 1`` for ``i = 2-d .. 0`` and ``N(d, 1) = d``."""
    _check_d(d)
    if k < 2 - d:
        raise ValueError(f"N({d}, {k}) lies below the seed range")
    if k <= 0:
        return 1
    if k == 1:
        return d
    return _vertex_table(d, k)[k + d - 2]


@lru_cache(maxsize=64)
def _vertex_table_cached(d: int, n: int) -> tuple[int, ...]:
    # position p holds N(d, p - (d - 2))
    return tuple(_run_recurrence([1] * (d - 1) + [d], d, n))


def _vertex_table(d: int, k: int) -> tuple[int, ...]:
    size = 1 << max(5, (k + 1).bit_length())
    return _vertex_table_cached(d, size)


def recurrence_matrix(d: int) -> IntMatrix:
    """The d x d matrix R with ``n^{m+1} = n^m R``: first row all ones,
    row ``i`` (``1 <= i < d``) the unit vector at column ``i + 1 mod d``."""
    _check_d(d)
    rows = [[1] * d]
    for i in range(1, d):
        row = [0] * d
        row[(i + 1) % d] = 1
        rows.append(row)
    return IntMatrix(rows)


@dataclass(frozen=True)
class CountVector:
    """Entry ``j`` counts admissible words of length ``m`` ending in digit ``j``.

    Indexed by word length: the all-ones vector is ``m = 1``. A published
    table whose first row is labelled ``n^0`` lists our ``m = 1`` there, so its
    row ``n^k`` is ``count_vector(d, k + 1)``.
    """

    d: int
    m: int
    entries: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, j: int) -> int:
        return self.entries[j]


def count_vector(d: int, m: int) -> CountVector:
    """``j R^{m-1}`` as a :class:`CountVector`."""
    _check_d(d)
    if m < 1:
        raise ValueError(f"word length must be >= 1, got {m}")
    vec = IntMatrix.ones_row(d) @ matrix_power(recurrence_matrix(d), m - 1)
    return CountVector(d, m, vec.rows[0])


def count_vectors(d: int, m_max: int) -> list[CountVector]:
    """``count_vector(d, m)`` for ``m = 1..m_max``, computed incrementally."""
    _check_d(d)
    r = recurrence_matrix(d)
    vec = IntMatrix.ones_row(d)
    out = []
    for m in range(1, m_max + 1):
        out.append(CountVector(d, m, vec.rows[0]))
        vec = vec @ r
    return out


def closed_walk_counts(d: int, k: int, lmax: int) -> list[int]:
    """``[C_0, ..., C_lmax]``: number of closed l-walks in F(d, k).

    ``C_0`` is the recurrence seed ``d`` (trace of the d x d identity), not the
    order of F(d, k). For ``l >= 1`` the value does not depend on ``k``.
    """
    _check_d(d)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if lmax < 0:
        raise ValueError("lmax must be nonnegative")
    r = recurrence_matrix(d)
    seeds = []
    power = IntMatrix.identity(d)
    for _ in range(min(d, lmax + 1)):
        seeds.append(power.trace())
        power = power @ r
    if lmax + 1 <= d:
        return seeds
    return _run_recurrence(seeds, d, lmax + 1 - d)


def fib_matrix_identity(k: int) -> IntMatrix:
    """``[[F_{k+1}, F_k], [F_k, F_{k-1}]]``, checked against the k-th power of [[1,1],[1,0]]."""
    if k < 2:
        raise ValueError("identity is stated for k >= 2")
    expected = IntMatrix(
        [
            [d_step_fibonacci(2, k + 1), d_step_fibonacci(2, k)],
            [d_step_fibonacci(2, k), d_step_fibonacci(2, k - 1)],
        ]
    )
    actual = matrix_power(recurrence_matrix(2), k)
    if actual != expected:
        raise LibraryDefect(f"A^{k} = {actual} differs from Fibonacci form {expected}")
    return expected


_SQRT5 = math.sqrt(5.0)
GOLDEN = (1 + _SQRT5) / 2
GOLDEN_CONJ = (1 - _SQRT5) / 2


def binet_fibonacci(k: int) -> int:
    """Nearest integer to ``(phi^k - psi^k) / sqrt(5)`` in double precision.

    Exact for ``k <= 70``; larger ``k`` is computed but not guaranteed.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    return round((GOLDEN**k - GOLDEN_CONJ**k) / _SQRT5)
