import pytest
from hypothesis import given, strategies as st

from oddcycles.graphs import (
    Graph,
    VertexSet,
    complement_within,
    degree_profile,
    format_edge_list,
    from_edge_list,
    induced_subgraph,
    parse_edge_list,
)


def complete_edges(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pool = complete_edges(n)
    if not pool:
        return from_edge_list(n, [])
    edges = draw(st.lists(st.sampled_from(pool), max_size=len(pool)))
    return from_edge_list(n, edges)


def test_from_edge_list_triangle():
    g = from_edge_list(3, [(0, 1), (1, 2), (0, 2)])
    assert g.m == 3
    assert g.adj == ((1, 2), (0, 2), (0, 1))


def test_from_edge_list_collapses_duplicates():
    g = from_edge_list(4, [(0, 1), (0, 1), (1, 0)])
    assert g.edges == ((0, 1),)


def test_from_edge_list_rejects_self_loop():
    with pytest.raises(ValueError):
        from_edge_list(2, [(0, 0)])


def test_from_edge_list_rejects_out_of_range():
    with pytest.raises(ValueError):
        from_edge_list(3, [(0, 3)])


def test_induced_subgraph_complete():
    k4 = from_edge_list(4, complete_edges(4))
    sub, labels = induced_subgraph(k4, VertexSet(4, (0, 1, 2)))
    assert sub.edges == ((0, 1), (0, 2), (1, 2))
    assert labels == (0, 1, 2)


def test_induced_subgraph_path_from_cycle():
    c5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
    sub, labels = induced_subgraph(c5, VertexSet(5, (0, 1, 2)))
    assert sub.edges == ((0, 1), (1, 2))


def test_induced_subgraph_empty_set():
    c5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
    sub, labels = induced_subgraph(c5, VertexSet(5, ()))
    assert sub.n == 0 and sub.m == 0 and labels == ()


def test_induced_subgraph_relabels_nontrivially():
    g = from_edge_list(6, [(1, 3), (3, 5)])
    sub, labels = induced_subgraph(g, VertexSet(6, (1, 3, 5)))
    assert labels == (1, 3, 5)
    assert sub.edges == ((0, 1), (1, 2))


def test_complement_within_self_is_empty():
    k3 = from_edge_list(3, complete_edges(3))
    assert complement_within(k3, k3).m == 0


def test_complement_within_single_edge():
    k3 = from_edge_list(3, complete_edges(3))
    one = from_edge_list(3, [(0, 1)])
    assert complement_within(k3, one).edges == ((0, 2), (1, 2))


def test_complement_within_rejects_foreign_edge():
    c5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
    bad = from_edge_list(5, [(0, 2)])
    with pytest.raises(ValueError):
        complement_within(c5, bad)


def test_degree_profile():
    k4 = from_edge_list(4, complete_edges(4))
    assert degree_profile(k4) == (3, 3, 3)
    p2 = from_edge_list(3, [(0, 1), (1, 2)])
    assert degree_profile(p2) == (1, 2, None)
    assert degree_profile(from_edge_list(5, [])) == (0, 0, 0)


def test_vertex_set_validation():
    with pytest.raises(ValueError):
        VertexSet(3, (0, 5))
    xs = VertexSet(5, (3, 1, 1))
    assert xs.members == (1, 3)


@given(graphs())
def test_round_trip_through_edge_list(g):
    assert from_edge_list(g.n, g.edges) == g
    assert parse_edge_list(format_edge_list(g)) == g


@given(graphs(), st.data())
def test_complement_partitions_host(g, data):
    keep = data.draw(st.lists(st.booleans(), min_size=g.m, max_size=g.m))
    sub = from_edge_list(g.n, [e for e, k in zip(g.edges, keep) if k])
    co = complement_within(g, sub)
    assert sub.m + co.m == g.m
    assert not (sub.edge_set & co.edge_set)
    assert sub.edge_set | co.edge_set == g.edge_set


@given(graphs(), st.data())
def test_induced_never_gains_edges(g, data):
    members = data.draw(st.lists(st.integers(0, g.n - 1), max_size=g.n))
    sub, _ = induced_subgraph(g, VertexSet(g.n, tuple(members)))
    assert sub.m <= g.m


def test_parse_edge_list_comments_and_errors():
    g = parse_edge_list("# header\n3 1\n0 1\n")
    assert g.edges == ((0, 1),)
    with pytest.raises(ValueError):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(ValueError):
        parse_edge_list("")


def test_adjacency_matrix_symmetric():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    a = g.adjacency_matrix()
    assert (a == a.T).all()
    assert a.sum() == 2 * g.m
