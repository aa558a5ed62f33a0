"""Immutable simple graphs: construction, induced subgraphs, complements within a host.

Vertices are dense integer labels 0..n-1.  Induced subgraphs relabel densely
and return the label map, so every counting routine can work with contiguous
matrix indices.  All graphs are immutable after construction; edits produce
new graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with a canonical edge tuple."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor lists."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(b)) for b in nbrs)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(b) for b in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(b) for b in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set

    def adjacency_matrix(self) -> np.ndarray:
        """Dense 0/1 adjacency matrix (int64, read-only)."""
        return self._adjacency

    @cached_property
    def _adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u, v] = 1
            a[v, u] = 1
        a.setflags(write=False)
        return a


class DegreeProfile(NamedTuple):
    min_degree: int
    max_degree: int
    regular_degree: int | None


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex count and edge pairs; duplicates collapse.

    Raises ValueError for out-of-range endpoints or self-loops.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    for u, v in pairs:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u} rejected")
        seen.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(seen)))


def induced_subgraph(G: Graph, X: "VertexSet") -> tuple[Graph, tuple[int, ...]]:
    """Graph induced on X, relabeled 0..|X|-1 in sorted order of X.

    Returns (graph, labels) where labels[i] is the original label of new
    vertex i.
    """
    if X.host_n != G.n:
        raise ValueError(f"vertex set is for a host on {X.host_n} vertices, graph has {G.n}")
    labels = X.members
    pos = {v: i for i, v in enumerate(labels)}
    edges = [
        (pos[u], pos[v])
        for u, v in G.edges
        if u in pos and v in pos
    ]
    return from_edge_list(len(labels), edges), labels


def complement_within(host: Graph, sub: Graph) -> Graph:
    """Edges of host not in sub; sub must be an edge-subgraph of host."""
    if host.n != sub.n:
        raise ValueError(f"host has {host.n} vertices, subgraph has {sub.n}")
    extra = sub.edge_set - host.edge_set
    if extra:
        u, v = min(extra)
        raise ValueError(f"edge ({u},{v}) of the subgraph is not a host edge")
    return Graph(host.n, tuple(sorted(host.edge_set - sub.edge_set)))


def degree_profile(G: Graph) -> DegreeProfile:
    """Min/max degree; regular_degree is set iff the graph is regular."""
    if G.n == 0:
        return DegreeProfile(0, 0, 0)
    degs = G.degrees()
    lo, hi = min(degs), max(degs)
    return DegreeProfile(lo, hi, lo if lo == hi else None)


@dataclass(frozen=True)
class VertexSet:
    """Sorted distinct vertex labels of a host on host_n vertices."""

    host_n: int
    members: tuple[int, ...]

    def __post_init__(self):
        mem = tuple(sorted(set(int(v) for v in self.members)))
        if mem and not (0 <= mem[0] and mem[-1] < self.host_n):
            raise ValueError(f"members must lie in 0..{self.host_n - 1}")
        object.__setattr__(self, "members", mem)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, tuple(range(n)))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return v in set(self.members)

    def __iter__(self):
        return iter(self.members)


# --- text edge-list interchange: first line "n m", then m lines "u v" ---

def format_edge_list(G: Graph) -> str:
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"header must be 'n m', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(rows) - 1}")
    pairs = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {line!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return from_edge_list(n, pairs)


def write_edge_list(G: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_edge_list(G))


def read_edge_list(path) -> Graph:
    with open(path) as fh:
        return parse_edge_list(fh.read())
