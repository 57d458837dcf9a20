"""Exact characteristic polynomials and spectral checks for d-Fibonacci digraphs.

Characteristic polynomials follow the monic convention ``det(xI - A)``.
Two independent exact routes are provided: :func:`char_poly` (sparse
similarity deflation followed by the division-free Berkowitz recurrence) and
:func:`char_poly_interpolation` (fraction-free determinants at ``n + 1``
integer points, then exact interpolation).
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .digraph import Digraph
from .errors import ResourceCapError
from .matrix import IntMatrix
from .recurrence import GOLDEN, GOLDEN_CONJ, closed_walk_counts, vertex_count
from .words import build_fibonacci_digraph

DEFAULT_CHARPOLY_CAP = 3000


class IntPolynomial:
    """Polynomial with integer coefficients, constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, coef: int = 1) -> IntPolynomial:
        return cls([0] * k + [coef])

    @property
    def degree(self) -> int | None:
        """Index of the highest nonzero coefficient; ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return IntPolynomial([0] * k + list(self.coeffs))

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def lowest_power(self) -> int:
        """Largest ``k`` with ``x**k`` dividing the polynomial."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return 0

    def strip_x(self) -> tuple[int, IntPolynomial]:
        """Split into ``x**k * rest`` with ``rest(0) != 0``."""
        k = self.lowest_power()
        return k, IntPolynomial(self.coeffs[k:])

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms)

    def factored_str(self) -> str:
        """Pull out the power of ``x``: ``"x^6 (x^2 - x - 1)"``."""
        k, rest = self.strip_x()
        if k == 0:
            return str(self)
        head = "x" if k == 1 else f"x^{k}"
        if rest.coeffs == (1,):
            return head
        return f"{head} ({rest})"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def phi_d(d: int) -> IntPolynomial:
    """``x^d - x^{d-1} - ... - x - 1``."""
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    return IntPolynomial([-1] * d + [1])


# ----- primary route: sparse deflation + Berkowitz


def _berkowitz(a: Sequence[Sequence[int]]) -> list[int]:
    """Coefficients of ``det(xI - a)``, highest degree first, without division."""
    n = len(a)
    poly = [1]
    for r in range(n):
        row = a[r][:r]
        col = [a[i][r] for i in range(r)]
        t = [1, -a[r][r]]
        v = col
        for _ in range(r):
            t.append(-sum(x * y for x, y in zip(row, v)))
            v = [sum(a[i][j] * v[j] for j in range(r) if a[i][j]) for i in range(r)]
        poly = [
            sum(t[i - j] * poly[j] for j in range(max(0, i - len(t) + 1), min(i, r) + 1))
            for i in range(r + 2)
        ]
    return poly


def _deflate(rows: dict[int, dict[int, int]]) -> int:
    """Strip factors of ``x`` by exact similarities; mutates ``rows``.

    A zero row or column contributes a factor ``x`` and is dropped. Two equal
    rows ``u``, ``v`` are handled by ``row_v -= row_u`` then
    ``col_u += col_v`` (a similarity), which zeroes row ``v``. Returns the
    number of ``x`` factors removed.
    """
    cols: dict[int, set[int]] = defaultdict(set)
    for i, r in rows.items():
        for j in r:
            cols[j].add(i)
    for i in rows:
        cols.setdefault(i, set())

    removed = 0
    work = list(rows)
    work.reverse()
    bucket: dict[frozenset, int] = {}
    sig_of: dict[int, frozenset] = {}

    def drop(v: int):
        nonlocal removed
        for j in rows[v]:
            cols[j].discard(v)
            work.append(j)
        for i in cols[v]:
            rows[i].pop(v, None)
            work.append(i)
        del rows[v]
        del cols[v]
        sig_of.pop(v, None)
        removed += 1

    def merge(u: int, v: int):
        for j in rows[v]:
            cols[j].discard(v)
            work.append(j)
        rows[v] = {}
        for i in list(cols[v]):
            val = rows[i][v]
            new = rows[i].get(u, 0) + val
            if new:
                rows[i][u] = new
                cols[u].add(i)
            else:
                rows[i].pop(u, None)
                cols[u].discard(i)
            work.append(i)
        drop(v)

    while work:
        i = work.pop()
        if i not in rows:
            continue
        if not rows[i] or not cols[i]:
            drop(i)
            continue
        sig = frozenset(rows[i].items())
        if sig_of.get(i) == sig:
            continue
        sig_of[i] = sig
        other = bucket.get(sig)
        if other is not None and other != i and other in rows and sig_of.get(other) == sig:
            merge(other, i)
        else:
            bucket[sig] = i
    return removed


def _sparse_rows(a: IntMatrix | Digraph) -> dict[int, dict[int, int]]:
    if isinstance(a, Digraph):
        rows = {i: {} for i in range(a.n)}
        for u, v, m in a.arcs:
            rows[u][v] = m
        return rows
    if not a.is_square:
        raise ValueError("characteristic polynomial needs a square matrix")
    return {i: {j: x for j, x in enumerate(r) if x} for i, r in enumerate(a.rows)}


def char_poly(a: IntMatrix | Digraph, cap: int | None = None) -> IntPolynomial:
    """Monic ``det(xI - A)`` computed exactly.

    Accepts an :class:`IntMatrix` or a :class:`Digraph` (its adjacency matrix,
    read sparsely). ``cap`` bounds the order.
    """
    n = a.n if isinstance(a, Digraph) else a.nrows
    if cap is not None and n > cap:
        raise ResourceCapError("char_poly order", n, cap)
    rows = _sparse_rows(a)
    xpow = _deflate(rows)
    core = sorted(rows)
    pos = {v: i for i, v in enumerate(core)}
    dense = [[0] * len(core) for _ in core]
    for v in core:
        for j, x in rows[v].items():
            dense[pos[v]][pos[j]] = x
    high_first = _berkowitz(dense)
    return IntPolynomial(list(reversed(high_first))).shift(xpow)


# ----- oracle route: evaluation + interpolation


def _bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination determinant."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def char_poly_interpolation(a: IntMatrix) -> IntPolynomial:
    """``det(xI - A)`` via determinants at ``x = 0..n`` and Newton interpolation."""
    if not a.is_square:
        raise ValueError("characteristic polynomial needs a square matrix")
    n = a.nrows
    xs = list(range(n + 1))
    ys = []
    for x0 in xs:
        m = [[(x0 if i == j else 0) - a.rows[i][j] for j in range(n)] for i in range(n)]
        ys.append(Fraction(_bareiss_det(m)))
    # divided differences
    coef = list(ys)
    for level in range(1, n + 1):
        for i in range(n, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    poly = [Fraction(0)] * (n + 1)
    basis = [Fraction(1)]
    for i in range(n + 1):
        for j, b in enumerate(basis):
            poly[j] += coef[i] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for j, b in enumerate(basis):
            nxt[j + 1] += b
            nxt[j] -= xs[i] * b
        basis = nxt
    if any(c.denominator != 1 for c in poly):
        raise ArithmeticError("interpolated characteristic polynomial is not integral")
    return IntPolynomial(int(c) for c in poly)


# ----- spectral verification


@dataclass
class SpectrumReport:
    d: int
    k: int
    order: int
    char_poly: IntPolynomial
    expected: IntPolynomial
    passed: bool

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "k": self.k,
            "N": self.order,
            "char_poly": self.char_poly.to_json(),
            "factored": self.char_poly.factored_str(),
            "expected": self.expected.factored_str(),
            "passed": self.passed,
        }


def verify_spectrum(d: int, k: int, cap: int = DEFAULT_CHARPOLY_CAP) -> SpectrumReport:
    """Compare the characteristic polynomial of F(d, k) with ``x^{N-d} phi_d``."""
    n = vertex_count(d, k)
    if n > cap:
        raise ResourceCapError(f"F({d},{k}) char_poly order", n, cap)
    g = build_fibonacci_digraph(d, k)
    got = char_poly(g)
    expected = phi_d(d).shift(n - d)
    return SpectrumReport(d, k, n, got, expected, got == expected)


@dataclass
class RootsReport:
    d: int
    tolerance: float
    roots: list[complex]
    residuals: list[float]
    dominant_root: float
    passed: bool
    messages: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "tolerance": self.tolerance,
            "roots": [[r.real, r.imag] for r in self.roots],
            "residuals": self.residuals,
            "dominant_root": self.dominant_root,
            "passed": self.passed,
            "messages": self.messages,
        }


def _newton_polish(p: IntPolynomial, r: complex, steps: int = 50) -> complex:
    dp = IntPolynomial(i * c for i, c in enumerate(p.coeffs) if i)
    for _ in range(steps):
        fr = p(r)
        dfr = dp(r)
        if dfr == 0:
            break
        step = fr / dfr
        r -= step
        if abs(step) < 1e-17 * max(1.0, abs(r)):
            break
    return r


def _bisect_dominant(p: IntPolynomial, lo: float = 1.0, hi: float = 2.0, tol: float = 1e-15) -> float:
    flo = p(lo)
    if flo * p(hi) > 0:
        raise ArithmeticError("no sign change on the bracketing interval")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fm = p(mid)
        if fm == 0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def numeric_roots_check(d: int, tolerance: float = 1e-10) -> RootsReport:
    """Locate the ``d`` roots of ``phi_d`` numerically and sanity-check them.

    Each root must satisfy ``|r^{d+1} - 2 r^d + 1| < tolerance`` and differ
    from 1. For ``d = 2`` the roots must match the golden ratio and its
    conjugate. Failures are reported in ``messages``.
    """
    p = phi_d(d)
    q = p * IntPolynomial([-1, 1])
    messages = []
    raw = np.roots(list(reversed(p.coeffs)))
    roots = [_newton_polish(p, complex(r)) for r in raw]
    residuals = [abs(q(r)) for r in roots]
    ok = len(roots) == d
    for r, res in zip(roots, residuals):
        if not res < tolerance:
            ok = False
            messages.append(f"root {r} not converged: residual {res:.3e}")
        if abs(r - 1) < tolerance:
            ok = False
            messages.append(f"root {r} coincides with 1")
    dominant = _bisect_dominant(p)
    best = max(roots, key=lambda r: r.real)
    if abs(best - dominant) >= tolerance:
        ok = False
        messages.append(f"dominant root {best} disagrees with bisection {dominant}")
    if d == 2:
        for target in (GOLDEN, GOLDEN_CONJ):
            if min(abs(r - target) for r in roots) >= tolerance:
                ok = False
                messages.append(f"no root near {target}")
    roots.sort(key=lambda r: (-r.real, r.imag))
    return RootsReport(d, tolerance, roots, residuals, dominant, ok, messages)


LUCAS_FLOAT_LIMIT = 68


def lucas_closed_form_check(lmax: int, tolerance: float = 0.5) -> dict:
    """Compare ``phi^l + psi^l`` (double precision) with exact closed-walk counts of F(2, k)."""
    if lmax > LUCAS_FLOAT_LIMIT:
        raise ValueError(f"lmax above {LUCAS_FLOAT_LIMIT} exceeds double precision")
    exact = closed_walk_counts(2, 1, lmax)
    rows = []
    ok = True
    for l, c in enumerate(exact):
        val = GOLDEN**l + GOLDEN_CONJ**l
        match = abs(val - c) < tolerance and round(val) == c
        ok &= match
        rows.append({"l": l, "closed_form": val, "exact": c, "match": match})
    return {"lmax": lmax, "tolerance": tolerance, "rows": rows, "passed": ok}


def trace_consistency(g: Digraph) -> bool:
    """Coefficient of ``x^{n-1}`` in the characteristic polynomial equals minus the trace."""
    p = char_poly(g)
    return p.coeff(g.n - 1) == -sum(m for u, v, m in g.arcs if u == v)
