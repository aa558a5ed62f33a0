"""Backend selection and graph-facing wrappers for the enumeration kernels.

The compiled extension is used when present; setting ODDCYCLES_PURE=1 in the
environment forces the pure-Python fallback.  Both backends implement the
same signatures over CSR neighbor arrays, so results are identical.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pykernels
from .errors import ResourceBudgetError
from .graphs import Graph

try:
    from . import _ckernels
except ImportError:  # extension not built; fall back to the reference kernels
    _ckernels = None

if _ckernels is not None and not os.environ.get("ODDCYCLES_PURE"):
    _impl = _ckernels
else:
    _impl = _pykernels

BACKEND = _impl.BACKEND_NAME

INJECTIVE_BUDGET = 10 ** 9


def csr_arrays(G: Graph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(indptr, indices, dense) arrays in the layout both backends expect."""
    indptr = np.zeros(G.n + 1, dtype=np.int64)
    for v in range(G.n):
        indptr[v + 1] = indptr[v] + len(G.adj[v])
    indices = np.fromiter(
        (u for v in range(G.n) for u in G.adj[v]), dtype=np.int64, count=int(indptr[-1])
    )
    dense = G.adjacency_matrix().astype(np.uint8)
    return indptr, indices, np.ascontiguousarray(dense)


def pattern_constraints(H: Graph) -> tuple[np.ndarray, np.ndarray]:
    """Per-vertex lists of earlier neighbors, flattened with offsets."""
    con = [[s for s in range(t) if H.has_edge(s, t)] for t in range(H.n)]
    off = np.zeros(H.n + 1, dtype=np.int64)
    for t in range(H.n):
        off[t + 1] = off[t] + len(con[t])
    idx = np.fromiter((s for c in con for s in c), dtype=np.int64, count=int(off[-1]))
    return off, idx


def hom_count_exhaustive(H: Graph, G: Graph) -> int:
    """Exhaustive homomorphism count of H into G by vertex-map enumeration."""
    indptr, indices, dense = csr_arrays(G)
    off, idx = pattern_constraints(H)
    return _impl.hom_count(indptr, indices, dense, G.n, H.n, off, idx)


def injective_cycle_count(G: Graph, m: int, budget: int = INJECTIVE_BUDGET) -> int:
    """Labelled m-cycle copies in G (each unlabelled cycle counted 2m times)."""
    indptr, indices, dense = csr_arrays(G)
    count, steps = _impl.injective_cycle_count(indptr, indices, dense, G.n, m, budget)
    if count < 0:
        raise ResourceBudgetError(
            f"injective {m}-cycle enumeration exceeded {budget} partial extensions"
        )
    return count


def cycle_exists(G: Graph, m: int) -> bool:
    indptr, indices, dense = csr_arrays(G)
    return _impl.cycle_exists(indptr, indices, dense, G.n, m)


def mixed_expectation(edges: list[tuple[int, int]], mats: np.ndarray, pv: int, s: int) -> float:
    """E over uniform maps [pv] -> [s] of the product of per-edge weights."""
    ea = np.asarray([e[0] for e in edges], dtype=np.int64)
    eb = np.asarray([e[1] for e in edges], dtype=np.int64)
    m = np.ascontiguousarray(np.asarray(mats, dtype=np.float64))
    total = _impl.mixed_expectation_sum(ea, eb, m, pv, s)
    return total / float(s) ** pv
