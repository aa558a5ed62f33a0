"""Extraction of an almost-regular, dense-in-G vertex subset.

Two stages: iterated minimum-degree peeling finds a core Y in which every
vertex keeps relative G-degree at least (alpha - epsilon/4); then a deletion
cascade removes vertices whose degree within Y deviates from p|Y| (the sets
Y-, Y+) and, round by round, vertices with too many G-edges into the
previously deleted set.  All threshold comparisons use exact rational
arithmetic because the sets are defined by sharp inequalities.

The three output conditions (size, G-degree, host-degree) are re-measured
from scratch on the final X and reported with margins; at desk scale they
may genuinely fail, and failures are reported rather than masked.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ExtractionError
from .graphs import Graph, VertexSet, degree_profile


@dataclass(frozen=True)
class RegularizationParams:
    alpha: float
    epsilon: float
    rho: float
    eta: float = 1e-3

    def __post_init__(self):
        if not (0 < self.alpha <= 1):
            raise ValueError("alpha must lie in (0, 1]")
        if not (0 < self.epsilon < self.alpha):
            raise ValueError("epsilon must lie in (0, alpha)")
        if self.rho <= 0:
            raise ValueError("rho must be positive")
        if self.eta <= 0:
            raise ValueError("eta must be positive")

    @property
    def epsilon1(self) -> float:
        return self.epsilon / 4

    @property
    def K(self) -> float:
        """Cascade length scale 1/(2 rho) - 2, floored at zero."""
        return max(1 / (2 * self.rho) - 2, 0.0)

    @property
    def iteration_cap(self) -> int:
        return math.ceil(self.K)


@dataclass
class RegularizationResult:
    X: VertexSet
    trace: list[dict] = field(default_factory=list)
    checks: dict = field(default_factory=dict)
    claim_regime: dict = field(default_factory=dict)
    eta_constraints: dict = field(default_factory=dict)


def _regular_density(host: Graph) -> Fraction:
    prof = degree_profile(host)
    if prof.regular_degree is None:
        raise ValueError("host must be regular (exact degree needed for p = d/n)")
    return Fraction(prof.regular_degree, host.n)


def _validate_subgraph(host: Graph, G_sub: Graph) -> None:
    if G_sub.n != host.n:
        raise ValueError("subgraph must live on the host vertex set")
    extra = G_sub.edge_set - host.edge_set
    if extra:
        raise ValueError(f"subgraph edge {min(extra)} is not a host edge")


def dense_core(host: Graph, G_sub: Graph, params: RegularizationParams) -> VertexSet:
    """Iterated minimum-degree peeling to a fixpoint.

    Removes, one at a time, a minimum-degree vertex violating
    deg_G within Y >= (alpha - epsilon/4) * p * |Y| against the current Y.
    The output predicate is re-verified by the caller; the guarantee is the
    fixpoint property, not a size bound.
    """
    _validate_subgraph(host, G_sub)
    p = _regular_density(host)
    if Fraction(2 * G_sub.m) < Fraction(params.alpha) * (2 * host.m):
        raise ValueError(
            f"subgraph density {G_sub.m}/{host.m} is below alpha={params.alpha}"
        )
    thr_factor = (Fraction(params.alpha) - Fraction(params.epsilon1)) * p
    alive = set(range(host.n))
    deg = {v: sum(1 for u in G_sub.adj[v]) for v in alive}
    while alive:
        threshold = thr_factor * len(alive)
        violators = [v for v in alive if Fraction(deg[v]) < threshold]
        if not violators:
            break
        worst = min(violators, key=lambda v: (deg[v], v))
        alive.remove(worst)
        for u in G_sub.adj[worst]:
            if u in alive:
                deg[u] -= 1
    if not alive:
        raise ExtractionError(
            "peeling emptied the candidate set; the subgraph has no dense core"
        )
    return VertexSet(host.n, tuple(sorted(alive)))


def deviation_sets(host: Graph, Y: VertexSet, epsilon1: float,
                   p: float | Fraction) -> tuple[VertexSet, VertexSet]:
    """Vertices of Y whose degree within Y falls strictly below
    (1 - epsilon1) p |Y| or strictly above (1 + epsilon1) p |Y|."""
    if len(Y) == 0:
        raise ValueError("Y must be nonempty")
    pf = p if isinstance(p, Fraction) else Fraction(p)
    e1 = Fraction(epsilon1)
    lo = (1 - e1) * pf * len(Y)
    hi = (1 + e1) * pf * len(Y)
    members = set(Y.members)
    minus, plus = [], []
    for v in Y.members:
        deg = sum(1 for u in host.adj[v] if u in members)
        if Fraction(deg) < lo:
            minus.append(v)
        elif Fraction(deg) > hi:
            plus.append(v)
    return VertexSet(host.n, tuple(minus)), VertexSet(host.n, tuple(plus))


def _measure_checks(host: Graph, G_sub: Graph, X: VertexSet,
                    params: RegularizationParams, p: Fraction) -> dict:
    """All three output conditions, recomputed from scratch on X."""
    n = host.n
    size_target = math.sqrt(params.epsilon) * n / 8
    members = set(X.members)
    g_degs = [sum(1 for u in G_sub.adj[v] if u in members) for v in X.members]
    h_degs = [sum(1 for u in host.adj[v] if u in members) for v in X.members]
    g_thr = (Fraction(params.alpha) - Fraction(params.epsilon)) * p * len(X)
    lo = (1 - Fraction(params.epsilon)) * p * len(X)
    hi = (1 + Fraction(params.epsilon)) * p * len(X)
    return {
        "size_ok": len(X) >= size_target,
        "size": len(X),
        "size_target": size_target,
        "min_G_degree_ok": all(Fraction(d) >= g_thr for d in g_degs),
        "min_G_degree": min(g_degs, default=0),
        "G_degree_target": float(g_thr),
        "gamma_degree_ok": all(lo <= Fraction(d) <= hi for d in h_degs),
        "gamma_degree_range": [min(h_degs, default=0), max(h_degs, default=0)],
        "gamma_degree_window": [float(lo), float(hi)],
    }


def cascade(host: Graph, G_sub: Graph, Y: VertexSet,
            params: RegularizationParams) -> RegularizationResult:
    """Deletion cascade on the core Y, then re-measured output conditions.

    Round 0 removes the degree-deviating vertices of Y.  Round i+1 removes
    remaining vertices with at least epsilon1 p |Y| / 2^(i+2) G-edges into
    the round-i deletions, stopping on an empty round or at the iteration
    cap derived from rho.
    """
    _validate_subgraph(host, G_sub)
    p = _regular_density(host)
    ymembers = set(Y.members)
    minus, plus = deviation_sets(host, Y, params.epsilon1, p)
    trace = [
        {"round": "Y-", "size": len(minus), "members": list(minus.members)},
        {"round": "Y+", "size": len(plus), "members": list(plus.members)},
    ]
    rounds: list[set[int]] = [set(minus.members) | set(plus.members)]
    trace.append({"round": "Y0", "size": len(rounds[0]), "members": sorted(rounds[0])})
    remaining = ymembers - rounds[0]
    i = 0
    while i < params.iteration_cap:
        threshold = Fraction(params.epsilon1) * p * len(Y) / 2 ** (i + 2)
        prev = rounds[i]
        nxt = {
            y for y in remaining
            if Fraction(sum(1 for u in G_sub.adj[y] if u in prev)) >= threshold
        }
        if not nxt:
            trace.append({"round": f"Y{i + 1}", "size": 0, "members": []})
            break
        rounds.append(nxt)
        trace.append({"round": f"Y{i + 1}", "size": len(nxt), "members": sorted(nxt)})
        remaining -= nxt
        i += 1
    if not remaining:
        raise ExtractionError("cascade deleted every vertex of the core", trace)
    X = VertexSet(host.n, tuple(sorted(remaining)))

    sizes = [len(r) for r in rounds]
    claim_bounds = [
        float(params.eta ** (j + 1) * float(p) ** (2 * (j + 1) * params.rho) * len(Y))
        for j in range(len(rounds))
    ]
    nonincreasing = all(sizes[j] >= sizes[j + 1] for j in range(1, len(sizes) - 1))
    claim = {
        "round_sizes": sizes,
        "claim_bounds": claim_bounds,
        "within_claim": [s <= b for s, b in zip(sizes, claim_bounds)],
        "outside_claim_regime": not (
            nonincreasing and all(s <= b for s, b in zip(sizes, claim_bounds))
        ),
    }
    e1 = params.epsilon1
    K = params.K
    eta_constraints = {
        "eta<=eps1^3/2^(3+1/rho)": params.eta <= e1 ** 3 / 2 ** (3 + 1 / params.rho),
        "eta<=1/(2K)": (params.eta <= 1 / (2 * K)) if K > 0 else None,
        "eta<=eps1/(K(1+2eps1))": (params.eta <= e1 / (K * (1 + 2 * e1))) if K > 0 else None,
    }
    return RegularizationResult(
        X=X,
        trace=trace,
        checks=_measure_checks(host, G_sub, X, params, p),
        claim_regime=claim,
        eta_constraints=eta_constraints,
    )


def regularize(host: Graph, G_sub: Graph, params: RegularizationParams) -> RegularizationResult:
    """dense_core followed by cascade; errors propagate."""
    Y = dense_core(host, G_sub, params)
    return cascade(host, G_sub, Y, params)
