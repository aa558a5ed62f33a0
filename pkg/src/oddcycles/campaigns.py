"""Randomized verification campaigns over certified hosts.

Each campaign returns (records, summary, aggregate_pass); the CLI wraps them
into reports.  Trials are seeded, so identical (config, seed) pairs replay
bit-identically.
"""

from __future__ import annotations

import math

import numpy as np

from . import patterns as pat
from .commonality import (
    CancelCheck,
    EdgeFunction,
    cancel_identity_check,
    commonality_bound,
    edge_indicator,
    even_subset_cover_counts,
    measured_regularity_slack,
    q_polynomial,
    q_polynomial_brute,
    signed_difference,
    t_combination,
    t_sequence,
)
from .corpus import small_corpus
from .counting import (
    brute_hom_count,
    hom_count_cycle,
    injective_count_cycle,
    pattern_hom_count,
)
from .generators import paley
from .graphs import Graph, VertexSet, complement_within, from_edge_list
from .kernels import cycle_exists
from .spectral import NdlCertificate, certify_ndl, spectrum


def random_subgraph_trials(host: Graph, cert: NdlCertificate, k: int, trials: int,
                           seed: int, epsilon: float = 0.5):
    """Keep each host edge with probability 1/2 and count odd cycles in both
    classes; every trial must reach (1 - epsilon) of the random-colouring
    yield d^(2k+1) / 4^k."""
    rng = np.random.default_rng(seed)
    m = 2 * k + 1
    expected = float(cert.d) ** m / 4.0 ** k
    threshold = (1 - epsilon) * expected
    records = []
    for t in range(trials):
        mask = rng.random(host.m) < 0.5
        sub = from_edge_list(host.n, [e for e, keep in zip(host.edges, mask) if keep])
        co = complement_within(host, sub)
        n_sub = injective_count_cycle(sub, m)
        n_co = injective_count_cycle(co, m)
        total = n_sub + n_co
        records.append({
            "trial": t,
            "edges_kept": sub.m,
            "count_sub": n_sub,
            "count_complement": n_co,
            "total": total,
            "threshold": threshold,
            "pass": total >= threshold,
        })
    totals = [r["total"] for r in records]
    mean = sum(totals) / len(totals) if totals else 0.0
    summary = {
        "expected": expected,
        "threshold": threshold,
        "mean_total": mean,
        "mean_over_expected": mean / expected if expected else 0.0,
        "min_total": min(totals, default=0),
    }
    return records, summary, all(r["pass"] for r in records)


def bipartite_probe(host: Graph, cert: NdlCertificate, k: int, trials: int, seed: int):
    """Adversarial odd-cycle-free colouring: edges across a random balanced
    bipartition.  The cut class must carry zero odd cycles; the within-part
    class is compared against the two-class bound (desk-scale margin 1/2)."""
    rng = np.random.default_rng(seed)
    m = 2 * k + 1
    full = VertexSet.full(host.n)
    delta = measured_regularity_slack(host, full, cert.p) or 0.0
    bound = commonality_bound(cert, full, delta, k)
    records = []
    for t in range(trials):
        perm = rng.permutation(host.n)
        side = np.zeros(host.n, dtype=bool)
        side[perm[: host.n // 2]] = True
        cut_edges = [(u, v) for u, v in host.edges if side[u] != side[v]]
        cut = from_edge_list(host.n, cut_edges)
        within = complement_within(host, cut)
        n_cut = injective_count_cycle(cut, m)
        n_within = injective_count_cycle(within, m)
        records.append({
            "trial": t,
            "cut_fraction": cut.m / host.m if host.m else 0.0,
            "count_cut": n_cut,
            "count_within": n_within,
            "bound": bound,
            "ratio_to_bound": n_within / bound if bound > 0 else float("inf"),
            "holds_full_bound": n_within >= bound,
            "pass": n_cut == 0 and n_within >= 0.5 * bound,
        })
    summary = {
        "bound": bound,
        "mean_cut_fraction": sum(r["cut_fraction"] for r in records) / max(len(records), 1),
        "min_ratio_to_bound": min((r["ratio_to_bound"] for r in records), default=0.0),
    }
    return records, summary, all(r["pass"] for r in records)


def turan_trials(host: Graph, k: int, delta: float, trials: int, seed: int):
    """Sample subgraphs with a (1/2 + delta) share of the host edges and
    search for an odd cycle of length 2k+1 in each."""
    rng = np.random.default_rng(seed)
    m = 2 * k + 1
    target = math.ceil((0.5 + delta) * host.m)
    records = []
    for t in range(trials):
        chosen = rng.choice(host.m, size=target, replace=False)
        sub = from_edge_list(host.n, [host.edges[i] for i in chosen])
        found = cycle_exists(sub, m)
        records.append({
            "trial": t,
            "edges": sub.m,
            "edge_share": sub.m / host.m,
            "found": found,
            "pass": found,
        })
    summary = {"edge_target": target, "found_all": all(r["found"] for r in records)}
    return records, summary, all(r["pass"] for r in records)


def _random_subset_pair(rng, host: Graph, min_size: int = 3):
    """Random X and a random subgraph indicator pair (gamma, g) on it."""
    size = int(rng.integers(min_size, host.n + 1))
    members = tuple(sorted(rng.choice(host.n, size=size, replace=False).tolist()))
    X = VertexSet(host.n, members)
    gamma = edge_indicator(host, X)
    g_vals = np.zeros_like(gamma.values)
    idx = np.argwhere(np.triu(gamma.values) > 0)
    for i, j in idx:
        if rng.random() < 0.5:
            g_vals[i, j] = g_vals[j, i] = 1.0
    return X, gamma, EdgeFunction(X, g_vals)


def oracle_suite(seed: int = 0, trials: int = 60):
    """All identity and oracle cross-checks at suite scale.

    Rows: exhaustive-vs-matrix counts over the small corpus, the exact
    cancellation identity, closed-form vs brute even-subset polynomial,
    derivative covering multiplicities, the path-sequence combinations, and
    trace consistency of cycle counts.
    """
    rng = np.random.default_rng(seed)
    rows = []

    pats = [pat.cycle(m) for m in range(2, 8)] + [pat.path(m) for m in range(7)]
    pats.append(pat.figure_eight(1, 1))
    worst = None
    ok = True
    for name, G in small_corpus():
        for p in pats:
            fast = pattern_hom_count(G, p)
            brute = brute_hom_count(p.to_graph(), G)
            if fast != brute:
                ok = False
                worst = f"{name}/{p.label}: fast={fast} brute={brute}"
    rows.append({
        "check": "exhaustive vs matrix counts",
        "pass": ok,
        "detail": worst or f"{len(small_corpus())} graphs x {len(pats)} patterns",
    })

    hosts = [G for _, G in small_corpus() if G.m >= 3 and G.n >= 4]
    max_diff = 0.0
    for _ in range(trials):
        host = hosts[int(rng.integers(len(hosts)))]
        X, gamma, g = _random_subset_pair(rng, host)
        h = pat.cycle(3) if rng.random() < 0.5 else pat.cycle(5)
        chk: CancelCheck = cancel_identity_check(h, gamma, g)
        max_diff = max(max_diff, chk.max_abs_diff)
    rows.append({
        "check": "cancellation identity",
        "pass": max_diff <= 1e-12,
        "detail": f"max |lhs-rhs| = {max_diff:.2e} over {trials} trials",
    })

    max_diff = 0.0
    for _ in range(trials):
        host = hosts[int(rng.integers(len(hosts)))]
        X, gamma, g = _random_subset_pair(rng, host)
        if len(X) > 8:
            continue
        f = signed_difference(gamma, g)
        h = pat.cycle(int(rng.choice([3, 4, 5]))) if rng.random() < 0.5 else pat.path(int(rng.choice([2, 3, 4])))
        z = float(rng.integers(0, 17)) / 16.0
        diff = abs(q_polynomial(h, gamma, f, z) - q_polynomial_brute(h, gamma, f, z))
        max_diff = max(max_diff, diff)
    rows.append({
        "check": "even-subset polynomial vs brute",
        "pass": max_diff <= 1e-12,
        "detail": f"max diff = {max_diff:.2e} over {trials} trials",
    })

    cover_ok = all(
        obs == pred
        for k in (1, 2)
        for _, obs, pred in even_subset_cover_counts(k)
    )
    rows.append({
        "check": "derivative covering multiplicities",
        "pass": cover_ok,
        "detail": "exhaustive over 3- and 5-cycles",
    })

    g13 = paley(13)
    cert13 = certify_ndl(g13)
    full = VertexSet.full(13)
    gamma13 = edge_indicator(g13, full)
    min_comb = float("inf")
    for _ in range(trials):
        g_vals = np.zeros_like(gamma13.values)
        idx = np.argwhere(np.triu(gamma13.values) > 0)
        for i, j in idx:
            if rng.random() < 0.5:
                g_vals[i, j] = g_vals[j, i] = 1.0
        f = signed_difference(gamma13, EdgeFunction(full, g_vals))
        z = float(rng.uniform(0.05, 1.0))
        ts = t_sequence(2, gamma13, f, z, cert13.p)
        for ell in (1, 2):
            min_comb = min(min_comb, t_combination(ts, ell))
    rows.append({
        "check": "path-sequence combinations nonnegative",
        "pass": min_comb >= -1e-9,
        "detail": f"min combination = {min_comb:.3e} over {trials} trials",
    })

    ok = True
    worst = None
    for name, G in small_corpus():
        if G.n < 1:
            continue
        sp = spectrum(G)
        for m in range(2, 9):
            exact = hom_count_cycle(G, m)
            approx = sp.power_sum(m)
            err = abs(approx - exact) / max(1.0, abs(exact))
            if err > 1e-6:
                ok = False
                worst = f"{name} m={m}: rel err {err:.2e}"
    rows.append({
        "check": "trace consistency of cycle counts",
        "pass": ok,
        "detail": worst or "all corpus graphs, walk lengths 2..8",
    })

    return rows, {"checks": len(rows)}, all(r["pass"] for r in rows)
