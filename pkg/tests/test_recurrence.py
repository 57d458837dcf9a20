from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibdigraph import count_vector, d_step_fibonacci, enumerate_words, matrix_power, vertex_count
from fibdigraph.linedig import build_T
from fibdigraph.digraph import adjacency_matrix
from fibdigraph.recurrence import (
    binet_fibonacci,
    closed_walk_counts,
    count_vectors,
    fib_matrix_identity,
    recurrence_matrix,
)

from oracles import brute_fib_words


def test_binary_counts_are_fibonacci():
    assert [vertex_count(2, k) for k in range(1, 7)] == [2, 3, 5, 8, 13, 21]


def test_n34():
    assert vertex_count(3, 4) == 17


def test_tribonacci_term():
    # 0, 0, 1, 1, 2, 4, 7, 13, 24, 44 with F_0 = 0 and seeds F_{-1} = 0
    assert d_step_fibonacci(3, 8) == 44


def test_negative_k_rejected():
    with pytest.raises(ValueError):
        vertex_count(3, -2)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.integers(1, 6))
def test_vertex_count_equals_brute_enumeration(d, k):
    assert vertex_count(d, k) == len(brute_fib_words(d, k))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 6), st.integers(1, 12))
def test_vertex_count_recurrence(d, k):
    if k > d:
        assert vertex_count(d, k) == sum(vertex_count(d, k - i) for i in range(1, d + 1))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 5), st.integers(1, 6))
def test_count_vector_matches_last_digit_census(d, k):
    cv = count_vector(d, k)
    census = [0] * d
    for w in brute_fib_words(d, k):
        census[w[-1]] += 1
    assert list(cv.entries) == census
    assert cv.total == vertex_count(d, k)


def test_d5_table():
    rows = [list(cv.entries) for cv in count_vectors(5, 8)]
    assert rows == [
        [1, 1, 1, 1, 1],
        [2, 1, 2, 2, 2],
        [4, 2, 3, 4, 4],
        [8, 4, 6, 7, 8],
        [16, 8, 12, 14, 15],
        [31, 16, 24, 28, 30],
        [61, 31, 47, 55, 59],
        [120, 61, 92, 108, 116],
    ]


def test_t3_powers_count_words():
    a = adjacency_matrix(build_T(3))
    assert a == [[1, 1, 1], [0, 0, 1], [1, 0, 0]]
    # A^(k-1) entry sum counts length-k words
    assert matrix_power(a, 3).total() == 17 == vertex_count(3, 4)
    assert matrix_power(a, 4).total() == 31 == vertex_count(3, 5)


def test_closed_walks_d3():
    assert closed_walk_counts(3, 2, 5) == [3, 1, 3, 7, 11, 21]


def test_closed_walks_d2_lucas():
    assert closed_walk_counts(2, 4, 7) == [2, 1, 3, 4, 7, 11, 18, 29]


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_closed_walks_are_traces(d):
    r = recurrence_matrix(d)
    got = closed_walk_counts(d, 1, 12)
    assert got == [matrix_power(r, l).trace() for l in range(13)]


def test_fib_matrix_identity():
    m = fib_matrix_identity(10)
    assert m == [[89, 55], [55, 34]]


def test_binet_exact_range():
    for k in range(71):
        assert binet_fibonacci(k) == d_step_fibonacci(2, k)
    assert binet_fibonacci(70) == 190392490709135
