"""Brute-force reference implementations used only by the tests.

Nothing here calls the package's algorithms; only the Digraph container is used.
"""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from fibdigraph import Digraph


def all_words(d, k):
    return list(itertools.product(range(d), repeat=k))


def brute_admissible(w, d):
    return all(a == 0 or b == (a + 1) % d for a, b in zip(w, w[1:]))


def brute_fib_words(d, k):
    return [w for w in all_words(d, k) if brute_admissible(w, d)]


def no_consecutive_ones(k):
    return ["".join(map(str, w)) for w in all_words(2, k) if "11" not in "".join(map(str, w))]


def walk_counts_dfs(g, m):
    """``[[#m-walks u -> v]]`` by explicit enumeration of every walk (multiplicity-aware)."""
    n = g.n
    out = [[0] * n for _ in range(n)]

    def go(start, u, left, weight):
        if left == 0:
            out[start][u] += weight
            return
        for v, mult in g.out_neighbors(u):
            go(start, v, left - 1, weight * mult)

    for s in range(n):
        go(s, s, m, 1)
    return out


def brute_isomorphisms(g, h):
    """Every bijection g -> h preserving arc multiplicities, by trying all n! maps."""
    if g.n != h.n:
        return []
    ga = {(u, v): m for u, v, m in g.arcs}
    ha = {(u, v): m for u, v, m in h.arcs}
    found = []
    for perm in itertools.permutations(range(h.n)):
        if len(ga) != len(ha):
            break
        if all(ha.get((perm[u], perm[v]), 0) == m for (u, v), m in ga.items()):
            found.append(list(perm))
    return found


def naive_cycle_counts(g, cutoff=None):
    """Count simple cycles by testing every vertex subset and ordering.

    Each cycle is counted once by fixing its smallest vertex first. Weight is
    the product of arc multiplicities along the cycle.
    """
    n = g.n
    cutoff = n if cutoff is None else cutoff
    mult = {(u, v): m for u, v, m in g.arcs}
    counts = {}
    for size in range(1, cutoff + 1):
        for subset in itertools.combinations(range(n), size):
            first, rest = subset[0], subset[1:]
            for order in itertools.permutations(rest):
                cyc = (first,) + order
                w = 1
                for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                    w *= mult.get((a, b), 0)
                    if not w:
                        break
                if w:
                    counts[size] = counts.get(size, 0) + w
    return counts


def cofactor_det(m):
    """Laplace expansion; entries may be polynomials given as coefficient lists."""
    n = len(m)
    if n == 0:
        return [1]
    if n == 1:
        return list(m[0][0])
    total = [0]
    for j in range(n):
        entry = m[0][j]
        if not any(entry):
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        sub = poly_mul(entry, cofactor_det(minor))
        if j % 2:
            sub = [-c for c in sub]
        total = poly_add(total, sub)
    return total


def poly_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def charpoly_by_cofactors(rows):
    """det(xI - A) with coefficients constant-first, trailing zeros trimmed."""
    n = len(rows)
    m = [[([-rows[i][j], 1] if i == j else [-rows[i][j]]) for j in range(n)] for i in range(n)]
    c = cofactor_det(m)
    while c and c[-1] == 0:
        c.pop()
    return c


def bisect(f, lo, hi, iters=200):
    flo = f(lo)
    for _ in range(iters):
        mid = (lo + hi) / 2
        fm = f(mid)
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


@st.composite
def small_digraphs(draw, max_n=6, max_mult=2):
    n = draw(st.integers(1, max_n))
    arcs = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(1, max_mult)),
            max_size=3 * n,
        )
    )
    return Digraph([f"v{i}" for i in range(n)], arcs)


def shift_walk_word(start, k, extra):
    """Slide a length-k window along ``start + extra`` (list of digits)."""
    s = list(start) + list(extra)
    return ["".join(map(str, s[i:i + k])) for i in range(len(extra) + 1)]


