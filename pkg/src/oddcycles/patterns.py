"""Counting patterns: cycles, paths, and two cycles glued at one vertex.

Convention: the cycle of length 2 is the single-edge graph on two vertices,
so every "cycle" pattern with m >= 2 is well defined.  P_m is the m-edge path
on m+1 vertices (P_0 is a lone vertex).  The glued pattern joins an even
cycle of length 2q and an odd cycle of length 2r+1 at exactly one shared
vertex; it is the shape a degenerate odd-cycle image factors through.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, from_edge_list


@dataclass(frozen=True)
class Pattern:
    kind: str  # "cycle" | "path" | "figure_eight"
    a: int     # cycle length / path edge count / first lobe parameter q
    b: int = 0  # second lobe parameter r (figure_eight only)

    def __post_init__(self):
        if self.kind == "cycle":
            if self.a < 2:
                raise ValueError("cycle length must be >= 2")
        elif self.kind == "path":
            if self.a < 0:
                raise ValueError("path edge count must be >= 0")
        elif self.kind == "figure_eight":
            if self.a < 1 or self.b < 1:
                raise ValueError("figure-eight parameters must be >= 1")
        else:
            raise ValueError(f"unknown pattern kind {self.kind!r}")

    @property
    def label(self) -> str:
        if self.kind == "cycle":
            return f"C{self.a}"
        if self.kind == "path":
            return f"P{self.a}"
        return f"fig8({self.a},{self.b})"

    @property
    def num_vertices(self) -> int:
        if self.kind == "cycle":
            return 2 if self.a == 2 else self.a
        if self.kind == "path":
            return self.a + 1
        return 2 * self.a + 2 * self.b

    @property
    def num_edges(self) -> int:
        if self.kind == "cycle":
            return 1 if self.a == 2 else self.a
        if self.kind == "path":
            return self.a
        return 2 * self.a + 2 * self.b + 1

    def edge_list(self) -> list[tuple[int, int]]:
        if self.kind == "cycle":
            if self.a == 2:
                return [(0, 1)]
            return [(i, (i + 1) % self.a) for i in range(self.a)]
        if self.kind == "path":
            return [(i, i + 1) for i in range(self.a)]
        # figure eight: even lobe first on 0..2q-1, odd lobe on 0 and fresh labels
        q, r = self.a, self.b
        edges: list[tuple[int, int]] = []
        if q == 1:
            edges.append((0, 1))
        else:
            edges.extend((i, (i + 1) % (2 * q)) for i in range(2 * q))
        base = 2 * q
        ring = [0] + list(range(base, base + 2 * r))
        edges.extend((ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring)))
        return edges

    def to_graph(self) -> Graph:
        return from_edge_list(self.num_vertices, self.edge_list())


def cycle(m: int) -> Pattern:
    return Pattern("cycle", m)


def path(m: int) -> Pattern:
    return Pattern("path", m)


def figure_eight(q: int, r: int) -> Pattern:
    return Pattern("figure_eight", q, r)


def parse_pattern(text: str) -> Pattern:
    """Parse CLI selectors: c3, c5, p4, fig8:q,r."""
    t = text.strip().lower()
    if t.startswith("fig8:"):
        q, r = t[5:].split(",")
        return figure_eight(int(q), int(r))
    if t.startswith("c"):
        return cycle(int(t[1:]))
    if t.startswith("p"):
        return path(int(t[1:]))
    raise ValueError(f"unrecognized pattern selector {text!r}")
