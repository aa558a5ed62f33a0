#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernels against the pure-Python fallback.

Usage:
    python benchmarks/bench_kernels.py [--repeats 3]

Each workload runs on both backends with identical inputs; results must agree
exactly (the script asserts it) and the table reports the speedup.
"""

import argparse
import time

import numpy as np

from oddcycles import _pykernels
from oddcycles import patterns as pat
from oddcycles.generators import complete, paley, random_regular
from oddcycles.graphs import from_edge_list
from oddcycles.kernels import csr_arrays, pattern_constraints

try:
    from oddcycles import _ckernels
except ImportError:
    _ckernels = None


def time_call(fn, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return result, best


def workloads():
    rng = np.random.default_rng(0)

    k8 = complete(8)
    c7 = pat.cycle(7).to_graph()
    indptr, indices, dense = csr_arrays(k8)
    off, idx = pattern_constraints(c7)
    yield ("hom count: 7-cycle into K8",
           lambda impl: impl.hom_count(indptr, indices, dense, k8.n, c7.n, off, idx))

    rr = random_regular(12, 5, seed=3)
    indptr2, indices2, dense2 = csr_arrays(rr)
    yield ("hom count: 7-cycle into 5-regular n=12",
           lambda impl: impl.hom_count(indptr2, indices2, dense2, rr.n, c7.n, off, idx))

    host = paley(101)
    mask = rng.random(host.m) < 0.5
    half = from_edge_list(101, [e for e, keep in zip(host.edges, mask) if keep])
    indptr3, indices3, dense3 = csr_arrays(half)
    yield ("injective triangles: half of paley(101)",
           lambda impl: impl.injective_cycle_count(indptr3, indices3, dense3, 101, 3, 10 ** 9))

    g29 = paley(29)
    indptr4, indices4, dense4 = csr_arrays(g29)
    yield ("injective 5-cycles: paley(29)",
           lambda impl: impl.injective_cycle_count(indptr4, indices4, dense4, 29, 5, 10 ** 9))

    s = 4
    p6 = pat.path(6)
    vals = (rng.random((s, s)) < 0.6).astype(float)
    vals = np.triu(vals, 1)
    vals = vals + vals.T
    mats = np.ascontiguousarray(np.stack([vals] * p6.num_edges))
    ea = np.array([a for a, _ in p6.edge_list()], dtype=np.int64)
    eb = np.array([b for _, b in p6.edge_list()], dtype=np.int64)
    yield ("weighted map sum: 6-edge path, s=4",
           lambda impl: impl.mixed_expectation_sum(ea, eb, mats, p6.num_vertices, s))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled kernels are not built; nothing to compare")
        return 1

    print(f"{'workload':<44} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, call in workloads():
        py_result, py_time = time_call(lambda: call(_pykernels), args.repeats)
        cy_result, cy_time = time_call(lambda: call(_ckernels), args.repeats)
        if isinstance(py_result, float):
            assert abs(py_result - cy_result) < 1e-9 * max(1.0, abs(py_result))
        else:
            assert py_result == cy_result, (name, py_result, cy_result)
        print(f"{name:<44} {py_time * 1e3:>8.1f}ms {cy_time * 1e3:>8.1f}ms "
              f"{py_time / cy_time:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
