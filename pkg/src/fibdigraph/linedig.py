"""Base digraph T_d, the line-digraph operator and its iterates."""

from __future__ import annotations

from .digraph import Digraph, LineageLabel, adjacency_matrix
from .errors import ResourceCapError
from .iso import is_isomorphism
from .matrix import IntMatrix, matrix_power
from .words import DEFAULT_VERTEX_CAP, build_fibonacci_digraph, format_word


def build_T(d: int) -> Digraph:
    """Hub 0 points to every vertex (itself included); ``i -> i+1 mod d`` otherwise."""
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    arcs = [(0, i) for i in range(d)] + [(i, (i + 1) % d) for i in range(1, d)]
    return Digraph([str(i) for i in range(d)], arcs)


def _expanded_arcs(g: Digraph):
    """Arcs with multiplicity unrolled: ``(tail, head, copy)`` in canonical order."""
    for u, v, m in g.arcs:
        for c in range(m):
            yield u, v, c


def _line_step(g: Digraph, lineage: list[LineageLabel]):
    verts = list(_expanded_arcs(g))
    by_tail: dict[int, list[int]] = {}
    for i, (u, _, _) in enumerate(verts):
        by_tail.setdefault(u, []).append(i)
    arcs = []
    new_lineage = []
    for i, (u, v, c) in enumerate(verts):
        for j in by_tail.get(v, ()):
            arcs.append((i, j))
        lu, lv = lineage[u], lineage[v]
        # past the first step every arc is simple and the copy index of the
        # newest base arc is already recorded on the head
        newest = lv.parallel[-1:] if lv.parallel else (c,)
        new_lineage.append(LineageLabel(lu.walk + lv.walk[-1:], lu.parallel + newest))
    return verts, arcs, new_lineage


def line_digraph(g: Digraph) -> Digraph:
    """Vertices are the arcs of ``g``; ``uv -> wz`` iff ``v == w``.

    Parallel arcs become distinct vertices, labelled ``"u-v#c"`` with copy
    index ``c``; simple arcs are labelled ``"u-v"`` from the labels of ``g``.
    """
    verts, arcs, _ = _line_step(g, [LineageLabel((u,)) for u in range(g.n)])
    labels = []
    for u, v, c in verts:
        lab = f"{g.labels[u]}-{g.labels[v]}"
        if g.multiplicity(u, v) > 1:
            lab += f"#{c}"
        labels.append(lab)
    return Digraph(labels, arcs)


def iterated_line_digraph(g: Digraph, m: int, cap: int = DEFAULT_VERTEX_CAP) -> Digraph:
    """``L^m g`` with each vertex carrying its walk in ``g`` as a :class:`LineageLabel`.

    Labels are the lineage strings, e.g. ``"0-1-2"``; vertex order is the
    lexicographic order of walks when ``g`` is simple.
    """
    if m < 0:
        raise ValueError("iteration count must be nonnegative")
    size = order_formula(adjacency_matrix(g), m)
    if size > cap:
        raise ResourceCapError(f"L^{m} order", size, cap)
    lineage = [LineageLabel((u,)) for u in range(g.n)]
    cur = Digraph([str(x) for x in lineage], g.arcs, lineage)
    for _ in range(m):
        _, arcs, lineage = _line_step(cur, list(cur.lineage))
        cur = Digraph([str(x) for x in lineage], arcs, lineage)
    return cur


def order_formula(a: IntMatrix, m: int) -> int:
    """``j A^m j^T``: the order of the m-th iterated line digraph."""
    if not a.is_square:
        raise ValueError("order formula needs a square matrix")
    if m < 0:
        raise ValueError("m must be nonnegative")
    return matrix_power(a, m).total()


def natural_word_map(line: Digraph, fib: Digraph, d: int) -> list[int]:
    """Send the walk ``v_0 .. v_{k-1}`` in T_d to the word ``v_0 .. v_{k-1}``."""
    if line.lineage is None:
        raise ValueError("digraph carries no lineage labels")
    return [fib.index(format_word(lab.walk, d)) for lab in line.lineage]


def verify_line_identity(d: int, k: int, cap: int = DEFAULT_VERTEX_CAP) -> dict:
    """Check arc by arc that the walk-to-word map is an isomorphism L^{k-1} T_d -> F(d, k)."""
    t = build_T(d)
    line = iterated_line_digraph(t, k - 1, cap)
    fib = build_fibonacci_digraph(d, k, cap)
    f = natural_word_map(line, fib, d)
    order = order_formula(adjacency_matrix(t), k - 1)
    return {
        "d": d,
        "k": k,
        "order": line.n,
        "order_formula": order,
        "arcs": line.arc_count,
        "natural_map_is_isomorphism": is_isomorphism(f, line, fib),
        "order_matches": line.n == order == fib.n,
    }
