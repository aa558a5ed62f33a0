"""Pure-Python enumeration kernels.

Reference implementations of the hot loops: exhaustive homomorphism counting,
injective cycle DFS, and weighted edge-product sums over all vertex maps.
The compiled module `_ckernels` implements the same signatures; either one
can back `oddcycles.kernels`.

All kernels take CSR-style neighbor arrays (indptr, indices) plus a dense 0/1
adjacency byte matrix, so the two backends are drop-in interchangeable.
"""

from __future__ import annotations

import math

BACKEND_NAME = "python"


def _neighbor_lists(indptr, indices):
    return [indices[indptr[v]:indptr[v + 1]].tolist() for v in range(len(indptr) - 1)]


def hom_count(indptr, indices, dense, n, pv, con_off, con_idx):
    """Count all maps [pv] -> [n] respecting the pattern constraints.

    con_idx[con_off[t]:con_off[t+1]] lists the already-assigned pattern
    vertices adjacent to t; a map survives iff every such pair lands on a
    graph edge.  Exhaustive: every surviving assignment counts exactly once.
    """
    if pv == 0:
        return 1
    nbrs = _neighbor_lists(indptr, indices)
    row = [bytes(dense[v]) for v in range(n)]
    con = [list(con_idx[con_off[t]:con_off[t + 1]]) for t in range(pv)]
    assign = [0] * pv

    def rec(t):
        if t == pv:
            return 1
        cs = con[t]
        total = 0
        if cs:
            first = assign[cs[0]]
            rest = cs[1:]
            for cand in nbrs[first]:
                if all(row[assign[s]][cand] for s in rest):
                    assign[t] = cand
                    total += rec(t + 1)
        else:
            for cand in range(n):
                assign[t] = cand
                total += rec(t + 1)
        return total

    return rec(0)


def injective_cycle_count(indptr, indices, dense, n, m, budget):
    """Labelled copies of the m-cycle: injective cyclic vertex sequences.

    Counts every closed injective walk (x_0, ..., x_{m-1}) once, so each
    unlabelled cycle contributes 2m.  Returns (count, steps); count is -1 if
    the partial-extension budget was exhausted.
    """
    nbrs = _neighbor_lists(indptr, indices)
    row = [bytes(dense[v]) for v in range(n)]
    used = bytearray(n)
    path = [0] * m
    steps = 0

    def rec(t):
        nonlocal steps
        if t == m:
            return row[path[m - 1]][path[0]]
        total = 0
        for cand in nbrs[path[t - 1]]:
            if used[cand]:
                continue
            steps += 1
            if steps > budget:
                return -1
            used[cand] = 1
            path[t] = cand
            r = rec(t + 1)
            used[cand] = 0
            if r < 0:
                return -1
            total += r
        return total

    total = 0
    for v0 in range(n):
        path[0] = v0
        used[v0] = 1
        r = rec(1)
        used[v0] = 0
        if r < 0:
            return -1, steps
        total += r
    return total, steps


def cycle_exists(indptr, indices, dense, n, m):
    """True iff the graph contains an injective m-cycle (early exit)."""
    nbrs = _neighbor_lists(indptr, indices)
    row = [bytes(dense[v]) for v in range(n)]
    used = bytearray(n)
    path = [0] * m

    def rec(t):
        if t == m:
            return bool(row[path[m - 1]][path[0]])
        for cand in nbrs[path[t - 1]]:
            if used[cand]:
                continue
            used[cand] = 1
            path[t] = cand
            if rec(t + 1):
                used[cand] = 0
                return True
            used[cand] = 0
        return False

    for v0 in range(n):
        path[0] = v0
        used[v0] = 1
        if rec(1):
            return True
        used[v0] = 0
    return False


def mixed_expectation_sum(edge_a, edge_b, mats, pv, s):
    """Sum over all maps [pv] -> [s] of the product of per-edge weights.

    Edge i contributes mats[i][x_a, x_b].  Zero partial products are pruned
    (they contribute exactly 0); leaf products are totalled with math.fsum,
    so the result is correctly rounded regardless of map count.
    """
    by_depth: list[list[tuple[int, int]]] = [[] for _ in range(pv)]
    for i in range(len(edge_a)):
        a, b = int(edge_a[i]), int(edge_b[i])
        lo, hi = (a, b) if a < b else (b, a)
        by_depth[hi].append((lo, i))
    mrows = [[[float(v) for v in r] for r in mats[i]] for i in range(len(edge_a))]
    assign = [0] * pv

    def rec(t, prod):
        if t == pv:
            yield prod
            return
        deps = by_depth[t]
        for x in range(s):
            p = prod
            for lo, i in deps:
                p *= mrows[i][assign[lo]][x]
                if p == 0.0:
                    break
            if p == 0.0:
                continue
            assign[t] = x
            yield from rec(t + 1, p)

    return math.fsum(rec(0, 1.0))
