"""Simple-cycle census and the explicit cycle families of binary Fibonacci digraphs."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from .digraph import Digraph
from .errors import LibraryDefect
from .words import build_fibonacci_digraph, format_word

DEFAULT_WORK_BUDGET = 10**8


@dataclass
class CycleCensus:
    """Counts of distinct simple cycles by length, up to ``cutoff``.

    Cycles through parallel arcs are distinct per arc choice, so a cycle is
    weighted by the product of its arc multiplicities. ``complete`` means
    every simple cycle was seen: the cutoff reaches the order and the work
    budget was not exhausted.
    """

    counts: dict[int, int]
    cutoff: int
    order: int
    exhausted: bool = False
    steps: int = 0

    @property
    def complete(self) -> bool:
        return self.cutoff >= self.order and not self.exhausted

    @property
    def max_length(self) -> int:
        return max(self.counts, default=0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> dict:
        return {
            "counts": {str(k): v for k, v in sorted(self.counts.items())},
            "cutoff": self.cutoff,
            "order": self.order,
            "complete": self.complete,
            "partial": self.exhausted,
            "steps": self.steps,
        }

    def to_csv(self) -> str:
        lines = ["length,count"]
        lines += [f"{k},{v}" for k, v in sorted(self.counts.items())]
        return "\n".join(lines) + "\n"


class WorkBudgetExceeded(Exception):
    pass


def _back_distances(g: Digraph, s: int) -> list[float]:
    """Shortest distance from each vertex ``>= s`` back to ``s`` inside vertices ``>= s``."""
    dist = [math.inf] * g.n
    dist[s] = 0
    frontier = [s]
    while frontier:
        nxt = []
        for v in frontier:
            dv = dist[v] + 1
            for u, _ in g.in_neighbors(v):
                if u > s and dist[u] == math.inf:
                    dist[u] = dv
                    nxt.append(u)
        frontier = nxt
    return dist


def iter_cycles(
    g: Digraph,
    cutoff: int | None = None,
    budget: int = DEFAULT_WORK_BUDGET,
    stats: dict | None = None,
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield ``(cycle, weight)`` for every simple cycle of length ``<= cutoff``.

    ``cycle`` lists vertex indices starting at its smallest index. Roots are
    taken in index order and each search stays inside vertices above the
    root; a branch is cut as soon as the shortest way back to the root would
    overrun the cutoff. Raises :class:`WorkBudgetExceeded` after ``budget``
    arc inspections. If given, ``stats["steps"]`` tracks the work done.
    """
    stats = {} if stats is None else stats
    n = g.n
    cutoff = n if cutoff is None else cutoff
    steps = 0
    for s in range(n):
        back = _back_distances(g, s)
        path = [s]
        weights = [1]
        on_path = {s}
        stack = [iter(g.out_neighbors(s))]
        while stack:
            advanced = False
            for w, m in stack[-1]:
                steps += 1
                if steps > budget:
                    stats["steps"] = steps
                    raise WorkBudgetExceeded(steps)
                if w == s:
                    if len(path) <= cutoff:
                        yield tuple(path), weights[-1] * m
                    continue
                if w < s or w in on_path:
                    continue
                if len(path) + back[w] > cutoff:
                    continue
                path.append(w)
                weights.append(weights[-1] * m)
                on_path.add(w)
                stack.append(iter(g.out_neighbors(w)))
                advanced = True
                break
            if not advanced:
                stack.pop()
                on_path.discard(path.pop())
                weights.pop()
        stats["steps"] = steps


def enumerate_cycles(
    g: Digraph, cutoff: int | None = None, budget: int = DEFAULT_WORK_BUDGET
) -> CycleCensus:
    """Exact census of simple cycles with length ``<= cutoff`` (default: all)."""
    cutoff = g.n if cutoff is None else cutoff
    counts: Counter = Counter()
    stats: dict = {}
    exhausted = False
    try:
        for cyc, weight in iter_cycles(g, cutoff, budget, stats):
            counts[len(cyc)] += weight
    except WorkBudgetExceeded:
        exhausted = True
    return CycleCensus(dict(sorted(counts.items())), cutoff, g.n, exhausted, stats.get("steps", 0))


def pancyclic_range(census: CycleCensus) -> int:
    """Largest ``L`` such that every length ``1..L`` occurs."""
    L = 0
    while census.counts.get(L + 1, 0) >= 1 and L + 1 <= census.cutoff:
        L += 1
    return L


def semipancyclic_bound(k: int) -> int:
    """``2k - 2`` for odd ``k``, ``2k - 1`` for even ``k``."""
    return 2 * k - 2 if k % 2 else 2 * k - 1


# ----- explicit constructions in F(2, k)


def _windows(cyclic: list[int], k: int, start: int = 0) -> list[str]:
    """Length-``k`` windows of a cyclic binary string, one per starting offset."""
    L = len(cyclic)
    out = []
    for off in range(L):
        i = start + off
        out.append(format_word([cyclic[(i + t) % L] for t in range(k)], 2))
    return out


def periodic_vertex_cycle(k: int, p: int) -> list[str]:
    """The ``p``-cycle through the word with 1's at positions ``p, 2p, ...``.

    Successive vertices are left shifts that keep the period.
    """
    if not 2 <= p <= k:
        raise ValueError(f"period must satisfy 2 <= p <= k, got p={p}, k={k}")
    return _windows([0] * (p - 1) + [1], k)


def anti_diagonal_cycle(k: int, q: int, base: int) -> list[str]:
    """The ``[base, q]`` cycle of F(2, k), starting at its base vertex.

    ``base=0`` starts at ``0...0`` and has length ``k + 2q - 1``; ``base=1``
    starts at ``0...01`` and has length ``k + 2q - 2``. Along the cycle, the
    appended digits are ``q`` ones separated by single zeros, then zeros.
    """
    if not 1 <= q <= k // 2:
        raise ValueError(f"q must satisfy 1 <= q <= {k // 2}, got {q}")
    burst = [1, 0] * (q - 1) + [1]
    if base == 0:
        return _windows([0] * k + burst, k)
    if base == 1:
        return _windows([0] * (k - 1) + burst, k)
    raise ValueError("base must be 0 or 1")


def validate_cycle(g: Digraph, cycle: list[str]) -> None:
    """Raise :class:`LibraryDefect` naming the first bad step of a claimed simple cycle."""
    if not cycle:
        raise LibraryDefect("empty cycle")
    if len(set(cycle)) != len(cycle):
        raise LibraryDefect(f"cycle repeats a vertex: {cycle}")
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        try:
            ia, ib = g.index(a), g.index(b)
        except KeyError as exc:
            raise LibraryDefect(f"vertex {exc.args[0]!r} is not in the digraph") from None
        if g.multiplicity(ia, ib) < 1:
            raise LibraryDefect(f"missing arc {a} -> {b}")


def canonical_cycle(g: Digraph, cycle: list[str]) -> tuple[int, ...]:
    """Index tuple rotated so its smallest index leads, as produced by :func:`iter_cycles`."""
    idx = [g.index(x) for x in cycle]
    i = idx.index(min(idx))
    return tuple(idx[i:] + idx[:i])


@dataclass
class ConstructedCycle:
    kind: str
    param: int
    vertices: list[str]

    @property
    def length(self) -> int:
        return len(self.vertices)


def constructive_cycles(k: int) -> list[ConstructedCycle]:
    """Loop, periodic ``p = 2..k``, then ``[1, q]`` and ``[0, q]`` for ``q = 1..k//2``."""
    out = [ConstructedCycle("loop", 1, ["0" * k])]
    out += [ConstructedCycle("periodic", p, periodic_vertex_cycle(k, p)) for p in range(2, k + 1)]
    for q in range(1, k // 2 + 1):
        out.append(ConstructedCycle("one", q, anti_diagonal_cycle(k, q, 1)))
        out.append(ConstructedCycle("zero", q, anti_diagonal_cycle(k, q, 0)))
    return out


@dataclass
class SemipancyclicReport:
    k: int
    ell: int
    constructed: list[ConstructedCycle]
    covered: list[int]
    census: CycleCensus | None
    agreement: bool
    passed: bool
    messages: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "k": self.k,
            "ell": self.ell,
            "parity": "odd" if self.k % 2 else "even",
            "constructed": [
                {"kind": c.kind, "param": c.param, "length": c.length} for c in self.constructed
            ],
            "covered_lengths": self.covered,
            "agreement": self.agreement,
            "passed": self.passed,
            "messages": self.messages,
        }
        if self.census is not None:
            out["census"] = self.census.to_json()
            out["pancyclic_range"] = pancyclic_range(self.census)
            if self.census.complete:
                # observed, not a stated result
                out["circumference_empirical"] = self.census.max_length
        return out


def verify_semipancyclic(
    k: int, census_cutoff: int | None = None, budget: int = DEFAULT_WORK_BUDGET
) -> SemipancyclicReport:
    """Build and validate every constructive cycle of F(2, k); cross-check with a census.

    ``census_cutoff`` defaults to the full order (complete census). Pass
    ``0`` to skip the census.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    g = build_fibonacci_digraph(2, k)
    ell = semipancyclic_bound(k)
    built = constructive_cycles(k)
    for c in built:
        try:
            validate_cycle(g, c.vertices)
        except LibraryDefect as exc:
            raise LibraryDefect(f"{c.kind} cycle (param {c.param}) in F(2,{k}): {exc}") from None
    lengths = sorted({c.length for c in built})
    messages = []
    passed = all(L in lengths for L in range(1, ell + 1))
    if not passed:
        messages.append(f"constructive lengths {lengths} miss part of 1..{ell}")
    census = None
    agreement = True
    if census_cutoff != 0:
        census = enumerate_cycles(g, census_cutoff, budget)
        seen = {L for L, c in census.counts.items() if c}
        want = {L for L in range(1, min(ell, census.cutoff) + 1)}
        agreement = (want & set(lengths)) == (want & seen)
        if not agreement:
            messages.append("census and constructions disagree on realized lengths")
        if census.exhausted:
            messages.append("census stopped at the work budget; counts are partial")
        passed = passed and agreement and pancyclic_range(census) >= min(ell, census.cutoff)
    return SemipancyclicReport(k, ell, built, lengths, census, agreement, passed, messages)
