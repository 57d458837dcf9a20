from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibdigraph import (
    DisconnectedError,
    Digraph,
    IntMatrix,
    adjacency_matrix,
    build_fibonacci_digraph,
    converse,
    diameter,
    induced_subdigraph,
    matrix_power,
)
from fibdigraph.digraph import (
    UNREACHABLE,
    closed_walk_total,
    degree_profile,
    distances_from,
    is_strongly_connected,
)

from oracles import small_digraphs, walk_counts_dfs


def test_multiplicities_accumulate():
    g = Digraph(["a", "b"], [(0, 1), (0, 1), (1, 0, 3)])
    assert g.arcs == ((0, 1, 2), (1, 0, 3))
    assert g.arc_count == 5
    assert adjacency_matrix(g) == [[0, 2], [3, 0]]


def test_bad_arcs_rejected():
    with pytest.raises(IndexError):
        Digraph(["a"], [(0, 1)])
    with pytest.raises(ValueError):
        Digraph(["a", "a"])
    with pytest.raises(ValueError):
        Digraph(["a"], [(0, 0, 0)])


def test_f24_distance_and_diameter():
    g = build_fibonacci_digraph(2, 4)
    assert distances_from(g, g.index("1010"))[g.index("0101")] == 1
    assert diameter(g) == 4


def test_f24_degree_profile():
    prof = degree_profile(build_fibonacci_digraph(2, 4))
    assert prof["out"] == {1: 3, 2: 5}
    assert prof["in"] == {1: 3, 2: 5}


def test_disconnected_diameter_names_pair():
    g = Digraph(["a", "b"], [(0, 1)])
    assert distances_from(g, 1)[0] is UNREACHABLE
    with pytest.raises(DisconnectedError) as exc:
        diameter(g)
    assert "b" in str(exc.value) and "a" in str(exc.value)


def test_induced_subdigraph():
    g = build_fibonacci_digraph(2, 3)
    sub = induced_subdigraph(g, [g.index("000"), g.index("001")])
    assert sub.labels == ("000", "001")
    assert sub.arcs == ((0, 0, 1), (0, 1, 1))


def test_matrix_power_zero_is_identity():
    a = IntMatrix([[1, 1], [1, 0]])
    assert matrix_power(a, 0) == IntMatrix.identity(2)
    with pytest.raises(ValueError):
        matrix_power(IntMatrix([[1, 2, 3]]), 2)


@settings(max_examples=80, deadline=None)
@given(small_digraphs(), st.integers(0, 5))
def test_matrix_power_counts_walks(g, m):
    assert matrix_power(adjacency_matrix(g), m).tolist() == walk_counts_dfs(g, m)


@settings(max_examples=80, deadline=None)
@given(small_digraphs(), st.integers(1, 6))
def test_closed_walk_total_is_trace(g, m):
    assert closed_walk_total(g, m) == matrix_power(adjacency_matrix(g), m).trace()


@settings(max_examples=60, deadline=None)
@given(small_digraphs())
def test_converse_transposes(g):
    assert adjacency_matrix(converse(g)) == adjacency_matrix(g).T
    assert converse(converse(g)) == g


@settings(max_examples=60, deadline=None)
@given(small_digraphs())
def test_bfs_distance_is_least_walk_power(g):
    a = adjacency_matrix(g)
    reach = [[None] * g.n for _ in range(g.n)]
    p = IntMatrix.identity(g.n)
    for step in range(g.n):
        for u in range(g.n):
            for v in range(g.n):
                if reach[u][v] is None and p[u, v]:
                    reach[u][v] = step
        p = p @ a
    for u in range(g.n):
        dist = distances_from(g, u)
        for v in range(g.n):
            want = UNREACHABLE if reach[u][v] is None else reach[u][v]
            assert dist[v] == want
    connected = all(x is not None for row in reach for x in row)
    assert is_strongly_connected(g) == connected
