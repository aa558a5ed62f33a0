import pytest

from oddcycles.errors import GenerationError
from oddcycles.generators import (
    complete,
    complete_bipartite,
    cycle_graph,
    empty,
    paley,
    random_regular,
)
from oddcycles.graphs import degree_profile, from_edge_list


def test_paley_5_is_the_5_cycle():
    g = paley(5)
    # residues mod 5 are {1, 4}, so the neighbors of u are u +- 1
    assert g.edges == ((0, 1), (0, 4), (1, 2), (2, 3), (3, 4))


def test_paley_13_residue_adjacency():
    g = paley(13)
    assert degree_profile(g) == (6, 6, 6)
    assert g.adj[0] == (1, 3, 4, 9, 10, 12)


def test_paley_rejects_bad_modulus():
    with pytest.raises(ValueError):
        paley(7)  # 3 mod 4
    with pytest.raises(ValueError):
        paley(9)  # not prime


def test_paley_shift_invariance():
    for q in (5, 13, 17):
        g = paley(q)
        shifted = {tuple(sorted(((u + 1) % q, (v + 1) % q))) for u, v in g.edges}
        assert shifted == set(g.edges)


def test_random_regular_is_deterministic():
    a = random_regular(10, 3, seed=123)
    b = random_regular(10, 3, seed=123)
    assert a == b
    c = random_regular(10, 3, seed=124)
    assert degree_profile(c).regular_degree == 3


def test_random_regular_regularity_and_simplicity():
    for seed in range(5):
        g = random_regular(12, 4, seed=seed)
        assert degree_profile(g).regular_degree == 4
        assert len(set(g.edges)) == g.m == 24


def test_random_regular_4_3_is_complete():
    assert random_regular(4, 3, seed=9) == complete(4)


def test_random_regular_rejects_bad_parameters():
    with pytest.raises(ValueError):
        random_regular(5, 3, seed=0)  # odd n*d
    with pytest.raises(ValueError):
        random_regular(4, 4, seed=0)  # d >= n


def test_random_regular_budget_error(monkeypatch):
    import oddcycles.generators as gen

    monkeypatch.setattr(gen, "MAX_RESTARTS", 0)
    with pytest.raises(GenerationError):
        gen.random_regular(10, 3, seed=0)


def test_standard_graphs():
    k4 = complete(4)
    assert k4.m == 6 and degree_profile(k4).regular_degree == 3
    c5 = cycle_graph(5)
    assert c5.m == 5 and degree_profile(c5).regular_degree == 2
    b23 = complete_bipartite(2, 3)
    assert b23.m == 6
    assert empty(5).m == 0
    with pytest.raises(ValueError):
        cycle_graph(2)


def test_complete_bipartite_is_bipartite():
    g = complete_bipartite(3, 3)
    left = set(range(3))
    assert all((u in left) != (v in left) for u, v in g.edges)
