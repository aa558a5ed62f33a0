"""Acceptance gate: every criterion below prints one PASS/FAIL line and
enforces its stated tolerance and runtime budget.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  Budgets assume the compiled kernel backend (the default build); the
pure-Python fallback is correct but slower.
"""

import time

import numpy as np
import pytest

from oddcycles import patterns as pat
from oddcycles.campaigns import bipartite_probe, random_subgraph_trials, turan_trials
from oddcycles.commonality import (
    EdgeFunction,
    cancel_identity_check,
    edge_indicator,
    even_subset_cover_counts,
    q_polynomial,
    q_polynomial_brute,
    signed_difference,
    t_combination,
    t_sequence,
)
from oddcycles.counting import brute_hom_count, hom_count_cycle, pattern_hom_count
from oddcycles.errors import ExtractionError
from oddcycles.generators import complete, paley, random_regular
from oddcycles.graphs import VertexSet, from_edge_list
from oddcycles.regularize import RegularizationParams, regularize
from oddcycles.spectral import (
    certify_ndl,
    even_cycle_trace_bound,
    expander_mixing_check,
    hypothesis_ratio,
)

from test_regularize import recheck


def _report(num: int, passed: bool, detail: str, started: float) -> None:
    mark = "PASS" if passed else "FAIL"
    print(f"criterion {num:02d} [{mark}] {detail} ({time.monotonic() - started:.1f}s)")


def _indicator_pair(host, X, rng):
    gamma = edge_indicator(host, X)
    vals = np.zeros_like(gamma.values)
    for i, j in np.argwhere(np.triu(gamma.values) > 0):
        if rng.random() < 0.5:
            vals[i, j] = vals[j, i] = 1.0
    return gamma, EdgeFunction(X, vals)


def test_c01_oracle_equivalence(small_graphs):
    started = time.monotonic()
    patterns = [pat.cycle(m) for m in range(2, 8)]
    patterns += [pat.path(m) for m in range(7)]
    patterns.append(pat.figure_eight(1, 1))
    checked = 0
    ok = True
    for name, G in small_graphs:
        if G.n > 10:
            continue
        for p in patterns:
            fast = pattern_hom_count(G, p)
            brute = brute_hom_count(p.to_graph(), G)
            if fast != brute:
                ok = False
                print(f"  mismatch {name}/{p.label}: {fast} vs {brute}")
            checked += 1
    elapsed = time.monotonic() - started
    _report(1, ok and elapsed < 60, f"{checked} exact brute/matrix comparisons", started)
    assert ok
    assert elapsed < 60


def test_c02_cancellation_identity():
    started = time.monotonic()
    rng = np.random.default_rng(202)
    hosts = [complete(n) for n in range(4, 9)]
    hosts += [paley(5), paley(13), random_regular(10, 3, seed=11)]
    max_diff = 0.0
    for trial in range(500):
        host = hosts[int(rng.integers(len(hosts)))]
        size = int(rng.integers(3, host.n + 1))
        X = VertexSet(host.n, tuple(rng.choice(host.n, size=size, replace=False).tolist()))
        gamma, g = _indicator_pair(host, X, rng)
        h = pat.cycle(3) if rng.random() < 0.5 else pat.cycle(5)
        chk = cancel_identity_check(h, gamma, g)
        max_diff = max(max_diff, chk.max_abs_diff)
    elapsed = time.monotonic() - started
    _report(2, max_diff <= 1e-12 and elapsed < 120,
            f"500 triples, max |lhs-rhs| = {max_diff:.2e}", started)
    assert max_diff <= 1e-12
    assert elapsed < 120


def test_c03_polynomial_closed_form_vs_enumeration():
    started = time.monotonic()
    rng = np.random.default_rng(303)
    sizes = {2: 12, 3: 10, 4: 8, 5: 6, 6: 4, 7: 4, 8: 3}
    pool = [pat.cycle(m) for m in range(2, 8)] + [pat.path(m) for m in range(1, 8)]
    max_diff = 0.0
    for trial in range(200):
        h = pool[int(rng.integers(len(pool)))]
        s = sizes[h.num_vertices]
        vals = (rng.random((s, s)) < 0.5).astype(float)
        vals = np.triu(vals, 1)
        vals = vals + vals.T
        X = VertexSet(s, tuple(range(s)))
        gamma = EdgeFunction(X, vals)
        gvals = np.where(rng.random((s, s)) < 0.5, vals, 0.0)
        gvals = np.triu(gvals, 1)
        gvals = gvals + gvals.T
        g = EdgeFunction(X, gvals)
        f = signed_difference(gamma, g)
        z = float(rng.integers(0, 17)) / 16.0
        diff = abs(q_polynomial(h, gamma, f, z) - q_polynomial_brute(h, gamma, f, z))
        max_diff = max(max_diff, diff)
    elapsed = time.monotonic() - started
    _report(3, max_diff <= 1e-12 and elapsed < 60,
            f"200 instances, max diff = {max_diff:.2e}", started)
    assert max_diff <= 1e-12
    assert elapsed < 60


def test_c04_even_cycle_spectral_bound(certified_graphs):
    started = time.monotonic()
    violations = []
    for name, G, cert in certified_graphs:
        for k in (1, 2, 3, 4):
            bound = even_cycle_trace_bound(cert, k)
            actual = hom_count_cycle(G, 2 * k)
            if actual > bound + 1e-9 * abs(bound):
                violations.append((name, k))
    _report(4, not violations,
            f"{len(certified_graphs)} certified graphs, k in 1..4, "
            f"violations: {violations or 'none'}", started)
    assert not violations


def test_c05_odd_cycle_walk_estimate(certified_graphs):
    started = time.monotonic()
    violations = []
    for name, G, cert in certified_graphs:
        for k in (1, 2, 3):
            lhs = abs(hom_count_cycle(G, 2 * k + 1) - cert.d ** (2 * k + 1))
            rhs = cert.lam * hom_count_cycle(G, 2 * k)
            if lhs > rhs + 1e-9 * max(1.0, rhs):
                violations.append((name, k))
    _report(5, not violations,
            f"odd closed-walk estimate, k in 1..3, violations: {violations or 'none'}",
            started)
    assert not violations


def test_c06_mixing_inequality(certified_graphs):
    started = time.monotonic()
    rng = np.random.default_rng(606)
    violations = 0
    for name, G, cert in certified_graphs:
        for trial in range(1000):
            if trial % 2 == 0:
                u, v = rng.random(G.n), rng.random(G.n)
            else:
                u = (rng.random(G.n) < 0.5).astype(float)
                v = (rng.random(G.n) < 0.5).astype(float)
            if not expander_mixing_check(cert, G, u, v).holds:
                violations += 1
    _report(6, violations == 0,
            f"{1000 * len(certified_graphs)} weight pairs, {violations} violations",
            started)
    assert violations == 0


def test_c07_two_class_count_on_random_subgraphs(paley101):
    started = time.monotonic()
    host, cert = paley101
    records, summary, ok = random_subgraph_trials(host, cert, k=1, trials=100,
                                                  seed=707, epsilon=0.5)
    expected = cert.d ** 3 / 4
    mean_ok = abs(summary["mean_total"] / expected - 1) <= 0.15
    elapsed = time.monotonic() - started
    _report(7, ok and mean_ok and elapsed < 600,
            f"100 trials, min total = {summary['min_total']}, "
            f"mean/expected = {summary['mean_total'] / expected:.4f}", started)
    assert ok, "a trial fell below half the random-colouring yield"
    assert mean_ok
    assert elapsed < 600


def test_c08_bipartite_probe(paley101):
    started = time.monotonic()
    host, cert = paley101
    records, summary, ok = bipartite_probe(host, cert, k=1, trials=50, seed=808)
    zero_cut = all(r["count_cut"] == 0 for r in records)
    margin = all(r["count_within"] >= 0.5 * r["bound"] for r in records)
    _report(8, zero_cut and margin,
            f"50 bipartitions, cut cycles always 0, "
            f"min within/bound = {summary['min_ratio_to_bound']:.3f}", started)
    assert zero_cut
    assert margin


def test_c09_dense_subgraphs_contain_triangles(paley101):
    started = time.monotonic()
    host, _ = paley101
    records, summary, ok = turan_trials(host, k=1, delta=0.05, trials=100, seed=909)
    elapsed = time.monotonic() - started
    _report(9, ok and elapsed < 120,
            f"100 subgraphs at 0.55 density, all contain a triangle: {ok}", started)
    assert ok
    assert elapsed < 120


def test_c10_path_sequence_combinations():
    started = time.monotonic()
    rng = np.random.default_rng(1010)
    host = paley(13)
    cert = certify_ndl(host)
    X = VertexSet.full(13)
    min_comb = float("inf")
    for trial in range(100):
        gamma, g = _indicator_pair(host, X, rng)
        f = signed_difference(gamma, g)
        z = float(rng.uniform(0.05, 1.0))
        ts = t_sequence(2, gamma, f, z, cert.p)
        for ell in (1, 2):
            min_comb = min(min_comb, t_combination(ts, ell))
    _report(10, min_comb >= -1e-9,
            f"100 trials, min T-combination = {min_comb:.3e}", started)
    assert min_comb >= -1e-9


def test_c11_derivative_covering_multiplicities():
    started = time.monotonic()
    ok = True
    total = 0
    for k in (1, 2):
        for mask, observed, predicted in even_subset_cover_counts(k):
            total += 1
            if observed != predicted:
                ok = False
    _report(11, ok, f"{total} even subsets across the 3- and 5-cycle", started)
    assert ok


def test_c12_regularization_soundness():
    started = time.monotonic()
    rng = np.random.default_rng(1212)
    hosts = [paley(13), paley(17), paley(29), random_regular(16, 4, 7),
             random_regular(20, 6, 1), complete(8)]
    checked = 0
    trial = 0
    while checked < 50:
        trial += 1
        host = hosts[trial % len(hosts)]
        density = float(rng.uniform(0.55, 0.95))
        mask = rng.random(host.m) < density
        sub = from_edge_list(host.n, [e for e, keep in zip(host.edges, mask) if keep])
        alpha = max(0.05, sub.m / host.m - 0.05)
        eps = float(rng.uniform(0.1, alpha * 0.9))
        params = RegularizationParams(alpha=alpha, epsilon=eps,
                                      rho=float(rng.choice([0.1, 0.2, 1.0])))
        try:
            res = regularize(host, sub, params)
        except ExtractionError:
            continue
        expected = recheck(host, sub, params, res.X)
        for key, val in expected.items():
            assert res.checks[key] == val, (trial, key)
        checked += 1
    trivial = regularize(paley(13), paley(13),
                         RegularizationParams(alpha=1.0, epsilon=0.4, rho=1.0))
    trivial_ok = (trivial.X.members == tuple(range(13))
                  and trivial.checks["size_ok"]
                  and trivial.checks["min_G_degree_ok"]
                  and trivial.checks["gamma_degree_ok"])
    _report(12, trivial_ok, f"{checked} randomized instances re-verified + trivial fixpoint",
            started)
    assert trivial_ok
