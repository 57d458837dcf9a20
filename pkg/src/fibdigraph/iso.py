"""Exact isomorphism, automorphism counting and homomorphism checks.

Isomorphism search runs colour refinement on the disjoint union of the two
digraphs so that colours are directly comparable, then individualizes one
vertex pair at a time, re-refines, and backtracks. Every candidate produced at
a discrete colouring is re-verified arc by arc.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator, Mapping, Sequence

from .digraph import Digraph
from .errors import ResourceCapError

DEFAULT_ORDER_CAP = 5000


def _union_adjacency(g: Digraph, h: Digraph):
    off = g.n
    out = [list(g.out_neighbors(u)) for u in range(g.n)]
    inn = [list(g.in_neighbors(u)) for u in range(g.n)]
    for u in range(h.n):
        out.append([(v + off, m) for v, m in h.out_neighbors(u)])
        inn.append([(v + off, m) for v, m in h.in_neighbors(u)])
    return out, inn


def _refine(colors: list[int], out, inn) -> list[int]:
    """Iterate to the coarsest equitable refinement of ``colors``."""
    ncls = len(set(colors))
    while True:
        sigs = [
            (
                colors[u],
                tuple(sorted((colors[v], m) for v, m in out[u])),
                tuple(sorted((colors[v], m) for v, m in inn[u])),
            )
            for u in range(len(colors))
        ]
        # canonical relabelling: colour = rank of signature
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == ncls:
            return new
        colors, ncls = new, len(ranks)


def _initial_colors(g: Digraph, h: Digraph) -> list[int]:
    def key(x: Digraph, u: int):
        return (x.out_degree(u), x.in_degree(u), x.multiplicity(u, u))

    keys = [key(g, u) for u in range(g.n)] + [key(h, u) for u in range(h.n)]
    ranks = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [ranks[k] for k in keys]


def is_isomorphism(f: Sequence[int], g: Digraph, h: Digraph) -> bool:
    """Check that ``f`` (index map g -> h) is a bijection preserving arc multiplicities."""
    if g.n != h.n or len(f) != g.n or sorted(f) != list(range(h.n)):
        return False
    if g.arc_count != h.arc_count or len(g.arcs) != len(h.arcs):
        return False
    return all(h.multiplicity(f[u], f[v]) == m for u, v, m in g.arcs)


def _check_cap(g: Digraph, h: Digraph, cap: int):
    for x in (g, h):
        if x.n > cap:
            raise ResourceCapError("isomorphism search order", x.n, cap)


def _search(g: Digraph, h: Digraph, cap: int) -> Iterator[list[int]]:
    _check_cap(g, h, cap)
    if g.n != h.n or g.arc_count != h.arc_count:
        return
    n = g.n
    out, inn = _union_adjacency(g, h)

    def balanced(colors):
        return Counter(colors[:n]) == Counter(colors[n:])

    def recurse(colors) -> Iterator[list[int]]:
        colors = _refine(colors, out, inn)
        if not balanced(colors):
            return
        classes: dict[int, list[int]] = {}
        for u in range(n):
            classes.setdefault(colors[u], []).append(u)
        target = None
        for c in sorted(classes):
            if len(classes[c]) > 1:
                target = c
                break
        if target is None:
            where = {colors[n + w]: w for w in range(n)}
            f = [where[colors[u]] for u in range(n)]
            if is_isomorphism(f, g, h):
                yield f
            return
        v = classes[target][0]
        fresh = max(colors) + 1
        for w in range(n):
            if colors[n + w] != target:
                continue
            trial = list(colors)
            trial[v] = fresh
            trial[n + w] = fresh
            yield from recurse(trial)

    yield from recurse(_initial_colors(g, h))


def find_isomorphism(g: Digraph, h: Digraph, cap: int = DEFAULT_ORDER_CAP) -> list[int] | None:
    """Return an index bijection ``f`` with ``g`` arc ``u -> v`` iff ``h`` arc ``f[u] -> f[v]``.

    Multiplicities must match exactly. Returns ``None`` when no isomorphism
    exists. Candidates are explored in vertex-index order, so the result is
    deterministic.
    """
    for f in _search(g, h, cap):
        return f
    return None


def automorphism_count(g: Digraph, cap: int = DEFAULT_ORDER_CAP) -> int:
    """Exact size of the automorphism group of ``g``."""
    return sum(1 for _ in _search(g, g, cap))


def check_homomorphism(f: Sequence[int] | Mapping[int, int], g: Digraph, h: Digraph) -> bool:
    """True iff every arc ``u -> v`` of ``g`` has an arc ``f(u) -> f(v)`` in ``h``.

    Only existence of the image arc is required, not matching multiplicity.
    """
    for u in range(g.n):
        if not 0 <= f[u] < h.n:
            raise IndexError(f"image of vertex {u} out of range")
    return all(h.multiplicity(f[u], f[v]) >= 1 for u, v, _ in g.arcs)
