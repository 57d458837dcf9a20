from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibdigraph import (
    Digraph,
    adjacency_matrix,
    build_de_bruijn,
    build_fibonacci_digraph,
    build_T,
    diameter,
    iterated_line_digraph,
    line_digraph,
    order_formula,
    vertex_count,
)
from fibdigraph.iso import find_isomorphism, is_isomorphism
from fibdigraph.linedig import natural_word_map, verify_line_identity

from oracles import small_digraphs


def test_t_shape():
    t = build_T(4)
    assert t.labels == ("0", "1", "2", "3")
    assert t.arc_count == 2 * 4 - 1
    assert t.arcs == ((0, 0, 1), (0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1))


def test_t_diameter():
    for d in range(2, 7):
        assert diameter(build_T(d)) == d - 1


def test_line_of_b22_is_b23():
    l = line_digraph(build_de_bruijn(2, 2))
    assert find_isomorphism(l, build_de_bruijn(2, 3)) is not None


def test_second_line_digraph_of_t3():
    l2 = iterated_line_digraph(build_T(3), 2)
    assert l2.n == 9
    assert l2.lineage[0].walk == (0, 0, 0)


def test_order_formula_t5():
    assert order_formula(adjacency_matrix(build_T(5)), 7) == 497 == vertex_count(5, 8)


def test_parallel_arcs_become_distinct_vertices():
    g = Digraph(["a", "b"], [(0, 1, 2), (1, 0)])
    l = line_digraph(g)
    assert l.n == 3
    assert l.arc_count == 4


@pytest.mark.parametrize("d,k", [(2, 1), (2, 5), (3, 4), (4, 3)])
def test_natural_map(d, k):
    line = iterated_line_digraph(build_T(d), k - 1)
    fib = build_fibonacci_digraph(d, k)
    f = natural_word_map(line, fib, d)
    assert is_isomorphism(f, line, fib)
    r = verify_line_identity(d, k)
    assert r["natural_map_is_isomorphism"] and r["order_matches"]


@settings(max_examples=60, deadline=None)
@given(small_digraphs(max_n=5, max_mult=2))
def test_line_digraph_order_and_size(g):
    l = line_digraph(g)
    assert l.n == g.arc_count
    assert l.arc_count == sum(g.in_degree(v) * g.out_degree(v) for v in range(g.n))


@settings(max_examples=40, deadline=None)
@given(small_digraphs(max_n=4, max_mult=2), st.integers(0, 3))
def test_iterated_order_matches_formula(g, m):
    l = iterated_line_digraph(g, m, cap=10**5)
    assert l.n == order_formula(adjacency_matrix(g), m)
