"""Words over ``[0, d-1]`` obeying the Fibonacci successor rule.

After a 0 any digit may follow; after a nonzero digit ``x`` only
``(x + 1) mod d`` may follow. For ``d = 2`` these are exactly the binary words
with no two consecutive 1's.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .digraph import Digraph
from .errors import ResourceCapError
from .recurrence import vertex_count

DEFAULT_VERTEX_CAP = 10**7


def _check_alphabet(d: int):
    if d < 2:
        raise ValueError(f"alphabet size must be >= 2, got {d}")


def _check_length(k: int):
    if k < 1:
        raise ValueError(f"word length must be >= 1, got {k}")


def admissible_successors(x: int, d: int) -> tuple[int, ...]:
    """Digits allowed right after ``x``, ascending."""
    _check_alphabet(d)
    if not 0 <= x < d:
        raise ValueError(f"digit {x} not in [0, {d - 1}]")
    if x == 0:
        return tuple(range(d))
    return ((x + 1) % d,)


def format_word(digits: Sequence[int], d: int) -> str:
    """Plain digit string, or comma-separated decimals when ``d > 10``."""
    if d > 10:
        return ",".join(map(str, digits))
    return "".join(map(str, digits))


def parse_word(text: str, d: int) -> tuple[int, ...]:
    if d > 10:
        digits = tuple(int(t) for t in text.split(","))
    else:
        digits = tuple(int(c) for c in text)
    for x in digits:
        if not 0 <= x < d:
            raise ValueError(f"digit {x} not in [0, {d - 1}]")
    return digits


@dataclass(frozen=True, order=True)
class Word:
    digits: tuple[int, ...]
    d: int

    def __post_init__(self):
        _check_alphabet(self.d)
        if not self.digits:
            raise ValueError("empty word")
        for x in self.digits:
            if not 0 <= x < self.d:
                raise ValueError(f"digit {x} not in [0, {self.d - 1}]")

    @classmethod
    def parse(cls, text: str, d: int) -> Word:
        return cls(parse_word(text, d), d)

    @property
    def k(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return format_word(self.digits, self.d)


def _admissible(digits: Sequence[int], d: int) -> bool:
    for a, b in zip(digits, digits[1:]):
        if a != 0 and b != (a + 1) % d:
            return False
    return True


def is_admissible(w: Word) -> bool:
    """True iff every consecutive digit pair follows the successor rule."""
    return _admissible(w.digits, w.d)


def _guard(count: int, cap: int, what: str):
    if count > cap:
        raise ResourceCapError(what, count, cap)


def iter_word_digits(d: int, k: int) -> Iterator[tuple[int, ...]]:
    """Admissible digit tuples of length ``k`` in lexicographic order."""
    _check_alphabet(d)
    _check_length(k)
    succ = [admissible_successors(x, d) for x in range(d)]

    def extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == k:
            yield prefix
            return
        for y in succ[prefix[-1]]:
            yield from extend(prefix + (y,))

    for x in range(d):
        yield from extend((x,))


def enumerate_words(d: int, k: int, cap: int = DEFAULT_VERTEX_CAP) -> list[Word]:
    """All admissible words of length ``k``, lexicographically ordered."""
    _check_alphabet(d)
    _check_length(k)
    _guard(vertex_count(d, k), cap, f"F({d},{k}) vertex count")
    return [Word(t, d) for t in iter_word_digits(d, k)]


def build_fibonacci_digraph(d: int, k: int, cap: int = DEFAULT_VERTEX_CAP) -> Digraph:
    """The d-Fibonacci digraph on admissible words, shift-and-append arcs."""
    _check_alphabet(d)
    _check_length(k)
    _guard(vertex_count(d, k), cap, f"F({d},{k}) vertex count")
    words = list(iter_word_digits(d, k))
    index = {w: i for i, w in enumerate(words)}
    succ = [admissible_successors(x, d) for x in range(d)]
    arcs = []
    for i, w in enumerate(words):
        tail = w[1:]
        for y in succ[w[-1]]:
            arcs.append((i, index[tail + (y,)]))
    return Digraph([format_word(w, d) for w in words], arcs)


def build_de_bruijn(d: int, k: int, cap: int = DEFAULT_VERTEX_CAP) -> Digraph:
    """The de Bruijn digraph on all ``d**k`` words."""
    _check_alphabet(d)
    _check_length(k)
    _guard(d**k, cap, f"B({d},{k}) vertex count")
    words = list(itertools.product(range(d), repeat=k))
    arcs = []
    for i, w in enumerate(words):
        # lexicographic index of the shifted word w[1:] + (y,)
        base = (i * d) % (d**k)
        arcs.extend((i, base + y) for y in range(d))
    return Digraph([format_word(w, d) for w in words], arcs)


def word_digits_of(g: Digraph, d: int) -> list[tuple[int, ...]]:
    """Parse every vertex label of a word digraph back into digits."""
    return [parse_word(lab, d) for lab in g.labels]


def embed_alphabet(digits: Sequence[int], d_small: int, d: int) -> tuple[int, ...]:
    """Digit map ``0 -> 0``, ``j -> d - d_small + j`` embedding F(d_small, k) in F(d, k)."""
    if d_small > d:
        raise ValueError("target alphabet must be at least as large")
    shift = d - d_small
    return tuple(0 if x == 0 else x + shift for x in digits)


def suffix_map(g: Digraph, h: Digraph, d: int, k_small: int) -> list[int]:
    """Index map ``x_1..x_k -> x_{k-k'+1}..x_k`` from a word digraph onto a shorter one."""
    out = []
    for lab in g.labels:
        w = parse_word(lab, d)
        out.append(h.index(format_word(w[len(w) - k_small:], d)))
    return out
