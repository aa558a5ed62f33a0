"""Graph families for the corpus: Paley graphs, random regular graphs, standards.

All samplers are deterministic given the seed: the same (n, d, seed) triple
always yields a bit-identical edge list.
"""

from __future__ import annotations

import numpy as np

from .errors import GenerationError
from .graphs import Graph, from_edge_list

MAX_RESTARTS = 10_000


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def paley(q: int) -> Graph:
    """Quadratic-residue graph on Z/q: u ~ v iff u - v is a nonzero square mod q.

    Requires q prime with q = 1 (mod 4) so that adjacency is symmetric.
    The result is (q-1)/2-regular.
    """
    if not _is_prime(q):
        raise ValueError(f"{q} is not prime")
    if q % 4 != 1:
        raise ValueError(f"{q} = {q % 4} (mod 4); need 1 (mod 4)")
    residues = {(x * x) % q for x in range(1, q)}
    edges = [(u, v) for u in range(q) for v in range(u + 1, q) if (v - u) % q in residues]
    return from_edge_list(q, edges)


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Uniform-ish d-regular graph via the pairing model with full restarts.

    The stub multiset is shuffled and paired up; any loop or repeated edge
    rejects the whole attempt.  Deterministic for a fixed seed.
    """
    if d >= n:
        raise ValueError(f"degree {d} must be smaller than n={n}")
    if d < 0 or n < 0:
        raise ValueError("n and d must be nonnegative")
    if (n * d) % 2 != 0:
        raise ValueError(f"n*d = {n * d} is odd; no {d}-regular graph on {n} vertices")
    rng = np.random.default_rng(seed)
    stubs = np.repeat(np.arange(n), d)
    for _ in range(MAX_RESTARTS):
        perm = rng.permutation(stubs)
        pairs = perm.reshape(-1, 2)
        lo = np.minimum(pairs[:, 0], pairs[:, 1])
        hi = np.maximum(pairs[:, 0], pairs[:, 1])
        if np.any(lo == hi):
            continue
        keys = lo * n + hi
        if len(np.unique(keys)) != len(keys):
            continue
        return from_edge_list(n, list(zip(lo.tolist(), hi.tolist())))
    raise GenerationError(
        f"pairing model failed for (n={n}, d={d}) after {MAX_RESTARTS} restarts"
    )


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle graph needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs both sides >= 1")
    return from_edge_list(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def empty(n: int) -> Graph:
    if n < 1:
        raise ValueError("empty graph needs n >= 1")
    return from_edge_list(n, [])
