"""Built-in graph corpus used by the oracle suite and the property tests."""

from __future__ import annotations

from .generators import (
    complete,
    complete_bipartite,
    cycle_graph,
    empty,
    paley,
    random_regular,
)
from .graphs import Graph, from_edge_list


def small_corpus() -> list[tuple[str, Graph]]:
    """Graphs small enough (n <= 10) for the exhaustive brute-force oracle."""
    return [
        ("K3", complete(3)),
        ("K4", complete(4)),
        ("K5", complete(5)),
        ("K6", complete(6)),
        ("K7", complete(7)),
        ("K8", complete(8)),
        ("C5", cycle_graph(5)),
        ("C6", cycle_graph(6)),
        ("C7", cycle_graph(7)),
        ("K23", complete_bipartite(2, 3)),
        ("K33", complete_bipartite(3, 3)),
        ("paley5", paley(5)),
        ("empty4", empty(4)),
        ("one_edge", from_edge_list(4, [(0, 1)])),
        ("rr10_3", random_regular(10, 3, seed=11)),
    ]


def certified_corpus() -> list[tuple[str, Graph]]:
    """Regular graphs carrying (n, d, lambda) certificates."""
    return [
        ("K3", complete(3)),
        ("K4", complete(4)),
        ("K5", complete(5)),
        ("K6", complete(6)),
        ("K8", complete(8)),
        ("C5", cycle_graph(5)),
        ("C6", cycle_graph(6)),
        ("C8", cycle_graph(8)),
        ("K33", complete_bipartite(3, 3)),
        ("paley5", paley(5)),
        ("paley13", paley(13)),
        ("paley17", paley(17)),
        ("paley29", paley(29)),
        ("rr10_3", random_regular(10, 3, seed=11)),
        ("rr16_4", random_regular(16, 4, seed=7)),
    ]
