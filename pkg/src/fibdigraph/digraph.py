"""Digraph data model: labeled vertices, arc multiset, metrics."""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DisconnectedError
from .matrix import IntMatrix, matrix_power

__all__ = [
    "Digraph",
    "UNREACHABLE",
    "adjacency_matrix",
    "matrix_power",
    "converse",
    "induced_subdigraph",
    "distances_from",
    "eccentricities",
    "diameter",
    "degree_profile",
    "is_strongly_connected",
    "closed_walk_total",
]

#: distance reported for vertices with no directed path from the source
UNREACHABLE = math.inf


@dataclass(frozen=True)
class LineageLabel:
    """Identity of a vertex of an iterated line digraph as a walk in its base.

    ``parallel`` records which copy of each traversed arc was used; it is all
    zeros when the base digraph has no multiple arcs.
    """

    walk: tuple[int, ...]
    parallel: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.walk:
            raise ValueError("a lineage walk has at least one vertex")

    @property
    def length(self) -> int:
        return len(self.walk) - 1

    def __str__(self) -> str:
        s = "-".join(map(str, self.walk))
        if any(self.parallel):
            s += "#" + ".".join(map(str, self.parallel))
        return s


class Digraph:
    """Finite digraph with ordered, distinct labels; loops and multi-arcs allowed.

    ``arcs`` is given as ``(tail, head)`` or ``(tail, head, multiplicity)``
    tuples over vertex indices. Repeated pairs accumulate. The stored arc
    tuple is sorted by ``(tail, head)``.
    """

    __slots__ = ("labels", "arcs", "lineage", "_out", "_in", "_index", "_mult")

    def __init__(
        self,
        labels: Sequence[str],
        arcs: Iterable[tuple[int, ...]] = (),
        lineage: Sequence[LineageLabel] | None = None,
    ):
        self.labels = tuple(str(x) for x in labels)
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("vertex labels must be distinct")
        counts: Counter = Counter()
        for a in arcs:
            if len(a) == 2:
                u, v = a
                m = 1
            else:
                u, v, m = a
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"arc ({u}, {v}) out of range for {n} vertices")
            if m < 1:
                raise ValueError("arc multiplicity must be positive")
            counts[(u, v)] += m
        self.arcs = tuple((u, v, m) for (u, v), m in sorted(counts.items()))
        self.lineage = tuple(lineage) if lineage is not None else None
        if self.lineage is not None and len(self.lineage) != n:
            raise ValueError("lineage must have one entry per vertex")
        self._out = None
        self._in = None
        self._index = None
        self._mult = None

    # ----- basic accessors

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def arc_count(self) -> int:
        """Number of arcs counted with multiplicity."""
        return sum(m for _, _, m in self.arcs)

    def index(self, label: str) -> int:
        if self._index is None:
            self._index = {lab: i for i, lab in enumerate(self.labels)}
        return self._index[label]

    def out_neighbors(self, u: int) -> tuple[tuple[int, int], ...]:
        """``(head, multiplicity)`` pairs for arcs leaving ``u``, head-sorted."""
        if self._out is None:
            self._build_adjacency()
        return self._out[u]

    def in_neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        if self._in is None:
            self._build_adjacency()
        return self._in[v]

    def multiplicity(self, u: int, v: int) -> int:
        if self._mult is None:
            self._mult = {(a, b): m for a, b, m in self.arcs}
        return self._mult.get((u, v), 0)

    def out_degree(self, u: int) -> int:
        return sum(m for _, m in self.out_neighbors(u))

    def in_degree(self, v: int) -> int:
        return sum(m for _, m in self.in_neighbors(v))

    def _build_adjacency(self):
        out = [[] for _ in range(self.n)]
        inn = [[] for _ in range(self.n)]
        for u, v, m in self.arcs:
            out[u].append((v, m))
            inn[v].append((u, m))
        self._out = tuple(tuple(x) for x in out)
        self._in = tuple(tuple(x) for x in inn)

    def __eq__(self, other: object) -> bool:
        """Arc-identical: same labels in the same order and the same arc multiset."""
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.labels == other.labels and self.arcs == other.arcs

    def __hash__(self) -> int:
        return hash((self.labels, self.arcs))

    def __repr__(self) -> str:
        return f"<Digraph n={self.n} arcs={self.arc_count}>"

    def relabeled(self, labels: Sequence[str]) -> Digraph:
        return Digraph(labels, self.arcs)


def adjacency_matrix(g: Digraph) -> IntMatrix:
    """Square matrix in vertex order; entry (u, v) is the number of arcs u -> v."""
    rows = [[0] * g.n for _ in range(g.n)]
    for u, v, m in g.arcs:
        rows[u][v] = m
    return IntMatrix(rows, g.n)


def converse(g: Digraph) -> Digraph:
    """Reverse every arc, keeping labels and multiplicities."""
    return Digraph(g.labels, ((v, u, m) for u, v, m in g.arcs))


def induced_subdigraph(g: Digraph, vertices: Iterable[int]) -> Digraph:
    """Subdigraph on ``vertices`` (kept in ascending index order) with all arcs among them."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for {g.n} vertices")
    pos = {v: i for i, v in enumerate(keep)}
    arcs = [(pos[u], pos[v], m) for u, v, m in g.arcs if u in pos and v in pos]
    return Digraph([g.labels[v] for v in keep], arcs)


def distances_from(g: Digraph, source: int) -> list:
    """BFS distances from ``source``; unreachable vertices get ``UNREACHABLE``."""
    if not 0 <= source < g.n:
        raise IndexError(f"source {source} out of range")
    dist: list = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v, _ in g.out_neighbors(u):
            if dist[v] is UNREACHABLE:
                dist[v] = du
                queue.append(v)
    return dist


def eccentricities(g: Digraph) -> list[int]:
    """Out-eccentricity of every vertex; raises on an unreachable pair."""
    ecc = []
    for s in range(g.n):
        dist = distances_from(g, s)
        for t, dt in enumerate(dist):
            if dt is UNREACHABLE:
                raise DisconnectedError(s, t, g.labels)
        ecc.append(max(dist) if dist else 0)
    return ecc


def diameter(g: Digraph) -> int:
    """Largest shortest-path length over ordered pairs.

    Raises :class:`DisconnectedError` naming a witness pair when ``g`` is not
    strongly connected.
    """
    if g.n == 0:
        raise ValueError("diameter of the empty digraph is undefined")
    return max(eccentricities(g))


def is_strongly_connected(g: Digraph) -> bool:
    if g.n == 0:
        return True
    if any(d is UNREACHABLE for d in distances_from(g, 0)):
        return False
    return all(d is not UNREACHABLE for d in distances_from(converse(g), 0))


def degree_profile(g: Digraph) -> dict[str, dict[int, int]]:
    """Histograms ``{"out": {degree: count}, "in": {degree: count}}``."""
    out = Counter(g.out_degree(u) for u in range(g.n))
    inn = Counter(g.in_degree(u) for u in range(g.n))
    return {"out": dict(sorted(out.items())), "in": dict(sorted(inn.items()))}


def closed_walk_total(g: Digraph, length: int) -> int:
    """``trace(A^length)`` by propagating walk counts from each vertex; no dense powers."""
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length == 0:
        return g.n
    total = 0
    for s in range(g.n):
        vec = {s: 1}
        for _ in range(length):
            nxt: dict[int, int] = {}
            for u, c in vec.items():
                for v, m in g.out_neighbors(u):
                    nxt[v] = nxt.get(v, 0) + c * m
            vec = nxt
        total += vec.get(s, 0)
    return total
