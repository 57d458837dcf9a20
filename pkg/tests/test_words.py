from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibdigraph import ResourceCapError, Word, build_de_bruijn, build_fibonacci_digraph, enumerate_words
from fibdigraph.words import (
    admissible_successors,
    embed_alphabet,
    format_word,
    is_admissible,
    parse_word,
    suffix_map,
)

from oracles import brute_admissible, brute_fib_words, no_consecutive_ones


def test_successor_rule():
    assert admissible_successors(0, 4) == (0, 1, 2, 3)
    assert admissible_successors(2, 4) == (3,)
    assert admissible_successors(3, 4) == (0,)


def test_known_admissible_word():
    assert is_admissible(Word.parse("012340", 5))


def test_inadmissible_word():
    assert not is_admissible(Word.parse("0121", 3))
    assert not is_admissible(Word.parse("11", 2))


def test_word_rejects_bad_digit():
    with pytest.raises(ValueError):
        Word.parse("013", 3)


def test_wide_alphabet_uses_commas():
    assert format_word((0, 10, 11), 12) == "0,10,11"
    assert parse_word("0,10,11", 12) == (0, 10, 11)
    assert parse_word("0121", 3) == (0, 1, 2, 1)


@pytest.mark.parametrize("d,k", [(2, 1), (2, 6), (3, 4), (4, 3), (5, 2)])
def test_enumeration_matches_brute_force(d, k):
    got = [w.digits for w in enumerate_words(d, k)]
    assert got == brute_fib_words(d, k)


def test_binary_words_avoid_11():
    for k in range(1, 10):
        assert [str(w) for w in enumerate_words(2, k)] == no_consecutive_ones(k)


def test_d5_k2_has_nine_words():
    assert len(enumerate_words(5, 2)) == 9


def test_k_zero_rejected():
    with pytest.raises(ValueError):
        enumerate_words(2, 0)
    with pytest.raises(ValueError):
        enumerate_words(1, 3)


def test_vertex_cap():
    with pytest.raises(ResourceCapError):
        enumerate_words(2, 20, cap=100)
    with pytest.raises(ResourceCapError):
        build_de_bruijn(3, 10, cap=1000)


def test_f24_shape():
    g = build_fibonacci_digraph(2, 4)
    assert g.n == 8
    assert g.arc_count == 13
    assert list(g.labels) == ["0000", "0001", "0010", "0100", "0101", "1000", "1001", "1010"]


def test_f32_vertices():
    g = build_fibonacci_digraph(3, 2)
    assert list(g.labels) == ["00", "01", "02", "12", "20"]


def test_de_bruijn_b23():
    b = build_de_bruijn(2, 3)
    assert b.n == 8 and b.arc_count == 16
    for u, v, _ in b.arcs:
        assert b.labels[u][1:] == b.labels[v][:-1]


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.integers(1, 5))
def test_fib_arcs_are_admissible_shifts(d, k):
    g = build_fibonacci_digraph(d, k)
    expected = set()
    for i, a in enumerate(g.labels):
        for j, b in enumerate(g.labels):
            da, db = parse_word(a, d), parse_word(b, d)
            if da[1:] == db[:-1] and brute_admissible(da + db[-1:], d):
                expected.add((i, j, 1))
    assert set(g.arcs) == expected


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5), st.integers(1, 5))
def test_out_degree_profile(d, k):
    g = build_fibonacci_digraph(d, k)
    for u, lab in enumerate(g.labels):
        last = parse_word(lab, d)[-1]
        assert g.out_degree(u) == (d if last == 0 else 1)


def test_embed_alphabet():
    assert embed_alphabet((0, 1, 0, 1), 2, 4) == (0, 3, 0, 3)
    assert embed_alphabet((0, 1, 2), 3, 5) == (0, 3, 4)


def test_suffix_map_keeps_last_digits():
    g = build_fibonacci_digraph(3, 4)
    h = build_fibonacci_digraph(3, 2)
    f = suffix_map(g, h, 3, 2)
    for u, img in enumerate(f):
        assert h.labels[img] == g.labels[u][-2:]
