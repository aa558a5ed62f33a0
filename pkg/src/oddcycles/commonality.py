"""Signed edge functions on a vertex subset, the even-subset polynomial, the
exact cancellation identity, the path-expectation sequence, and the
two-class odd-cycle count verifier.

The setting: a host graph with certificate (n, d, lambda), a vertex subset X
whose induced degrees stay close to p|X| (p = d/n), the indicator gamma of
the induced edges, and an indicator g of a chosen subgraph.  With
f = 2g - gamma, the count of odd cycles in the subgraph plus the count in
its complement within X decomposes exactly into gamma terms plus even-subset
correction terms; the machinery here evaluates every piece by independent
routes so the decomposition and its lower bound can be checked numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import patterns as pat
from .counting import injective_count_cycle
from .errors import ResourceBudgetError
from .graphs import Graph, VertexSet, complement_within, from_edge_list, induced_subgraph
from .kernels import mixed_expectation
from .patterns import Pattern
from .spectral import NdlCertificate, hypothesis_ratio

_ATOL = 1e-12

BRUTE_MAX_EDGES = 7
BRUTE_MAX_X = 12


@dataclass(frozen=True)
class EdgeFunction:
    """Symmetric weights on ordered pairs of X, zero diagonal, values in [-1, 1]."""

    X: VertexSet
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        s = len(self.X)
        if v.shape != (s, s):
            raise ValueError(f"values must be {s}x{s} for this vertex set")
        if not np.allclose(v, v.T, atol=_ATOL):
            raise ValueError("values must be symmetric")
        if np.any(np.abs(np.diag(v)) > _ATOL):
            raise ValueError("diagonal must be zero")
        if np.max(np.abs(v), initial=0.0) > 1 + _ATOL:
            raise ValueError("values must lie in [-1, 1]")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def size(self) -> int:
        return len(self.X)

    def is_indicator(self) -> bool:
        v = self.values
        return bool(np.all((np.abs(v) < _ATOL) | (np.abs(v - 1) < _ATOL)))


def edge_indicator(G: Graph, X: VertexSet) -> EdgeFunction:
    """Indicator of G's edges restricted to X, indexed by X positions."""
    if G.n != X.host_n:
        raise ValueError("graph and vertex set live on different hosts")
    pos = {v: i for i, v in enumerate(X.members)}
    s = len(X)
    vals = np.zeros((s, s))
    for u, v in G.edges:
        if u in pos and v in pos:
            vals[pos[u], pos[v]] = 1.0
            vals[pos[v], pos[u]] = 1.0
    return EdgeFunction(X, vals)


def signed_difference(gamma: EdgeFunction, g: EdgeFunction) -> EdgeFunction:
    """f = 2g - gamma for indicator functions with g <= gamma pointwise."""
    if gamma.X != g.X:
        raise ValueError("edge functions live on different vertex sets")
    if not (gamma.is_indicator() and g.is_indicator()):
        raise ValueError("signed difference needs {0,1}-valued inputs")
    if np.any(g.values > gamma.values + _ATOL):
        raise ValueError("g must be supported inside gamma")
    return EdgeFunction(gamma.X, 2 * g.values - gamma.values)


# --- expectations of edge products over uniform independent vertices of X ---

def _chain_value(mats: list[np.ndarray], kind: str, s: int) -> float:
    """E[prod_i M_i(x_i, x_{i+1})] for a path / cycle with per-edge matrices."""
    if kind == "path":
        vec = np.ones(s)
        for M in reversed(mats):
            vec = M @ vec
        return float(np.sum(vec)) / float(s) ** (len(mats) + 1)
    # cycle
    if len(mats) == 1:  # single-edge pattern: plain mean
        return float(np.sum(mats[0])) / float(s) ** 2
    P = mats[0]
    for M in mats[1:]:
        P = P @ M
    return float(np.trace(P)) / float(s) ** len(mats)


def _t_matrix(pattern: Pattern, M: np.ndarray, s: int) -> float:
    if s == 0:
        raise ValueError("expectation over an empty vertex set")
    if pattern.kind == "figure_eight":
        raise ValueError("weighted densities support cycle and path patterns only")
    if pattern.kind == "path" and pattern.a == 0:
        return 1.0
    return _chain_value([M] * pattern.num_edges, pattern.kind, s)


def t_weighted(pattern: Pattern, fn: EdgeFunction) -> float:
    """Homomorphism density of the pattern against the edge weighting."""
    return _t_matrix(pattern, fn.values, fn.size)


def _even_nonzero_masks(e: int):
    for mask in range(1, 1 << e):
        if bin(mask).count("1") % 2 == 0:
            yield mask


def _check_dominated(gamma: EdgeFunction, f: EdgeFunction) -> None:
    if gamma.X != f.X:
        raise ValueError("edge functions live on different vertex sets")
    if np.any(np.abs(f.values) > gamma.values + _ATOL):
        raise ValueError("|f| must be dominated by gamma pointwise")


def q_polynomial(pattern: Pattern, gamma: EdgeFunction, f: EdgeFunction, z: float) -> float:
    """Even-subset polynomial via the two-sided closed form.

    Q(z) = (t(z*gamma + f) + t(z*gamma - f)) / 2 - z^e * t(gamma): averaging
    the two signings kills every odd subset, leaving exactly the even
    nonzero terms weighted by z^(e - |J|).
    """
    _check_dominated(gamma, f)
    e = pattern.num_edges
    if e < 1:
        raise ValueError("pattern needs at least one edge")
    s = gamma.size
    G, F = gamma.values, f.values
    plus = _t_matrix(pattern, z * G + F, s)
    minus = _t_matrix(pattern, z * G - F, s)
    return 0.5 * (plus + minus) - z ** e * _t_matrix(pattern, G, s)


def q_polynomial_subsets(pattern: Pattern, gamma: EdgeFunction, f: EdgeFunction, z: float) -> float:
    """Even-subset polynomial summed term by term with chain evaluations.

    Independent of the closed form: each even nonzero subset J contributes
    E[f on J, gamma off J] * z^(e - |J|), the expectation evaluated by a
    matrix chain over the pattern's edge order.
    """
    _check_dominated(gamma, f)
    e = pattern.num_edges
    s = gamma.size
    G, F = gamma.values, f.values
    total = 0.0
    for mask in _even_nonzero_masks(e):
        mats = [F if (mask >> i) & 1 else G for i in range(e)]
        total += _chain_value(mats, pattern.kind, s) * z ** (e - bin(mask).count("1"))
    return total


def q_polynomial_brute(pattern: Pattern, gamma: EdgeFunction, f: EdgeFunction, z: float) -> float:
    """Deepest oracle: every even-subset expectation by full vertex-map enumeration."""
    _check_dominated(gamma, f)
    e = pattern.num_edges
    s = gamma.size
    if e > BRUTE_MAX_EDGES:
        raise ResourceBudgetError(f"subset oracle capped at {BRUTE_MAX_EDGES} edges, got {e}")
    if s > BRUTE_MAX_X:
        raise ResourceBudgetError(f"subset oracle capped at |X| = {BRUTE_MAX_X}, got {s}")
    edges = pattern.edge_list()
    pv = pattern.num_vertices
    G, F = gamma.values, f.values
    total = 0.0
    for mask in _even_nonzero_masks(e):
        mats = np.stack([F if (mask >> i) & 1 else G for i in range(e)])
        total += mixed_expectation(edges, mats, pv, s) * z ** (e - bin(mask).count("1"))
    return total


@dataclass(frozen=True)
class CancelCheck:
    lhs: float
    rhs: float
    max_abs_diff: float


def cancel_identity_check(pattern: Pattern, gamma: EdgeFunction, g: EdgeFunction) -> CancelCheck:
    """Exact two-class decomposition check.

    lhs = t(g) + t(gamma - g) directly; rhs = (1/2)^(e-1) * (t(gamma) +
    even-subset sum at z = 1) with the sum evaluated term by term.  The two
    routes share no algebra, so agreement certifies the identity.
    """
    f = signed_difference(gamma, g)
    co = EdgeFunction(gamma.X, gamma.values - g.values)
    lhs = t_weighted(pattern, g) + t_weighted(pattern, co)
    e = pattern.num_edges
    rhs = 0.5 ** (e - 1) * (
        t_weighted(pattern, gamma) + q_polynomial_subsets(pattern, gamma, f, 1.0)
    )
    return CancelCheck(lhs, rhs, abs(lhs - rhs))


# --- derivative relation between the cycle and path polynomials ---

def q_derivative_central(pattern: Pattern, gamma: EdgeFunction, f: EdgeFunction,
                         z: float, h: float = 1e-4) -> float:
    return (q_polynomial(pattern, gamma, f, z + h)
            - q_polynomial(pattern, gamma, f, z - h)) / (2 * h)


def q_derivative_interpolated(pattern: Pattern, gamma: EdgeFunction, f: EdgeFunction,
                              z: float) -> float:
    """Derivative by exact coefficient extraction from e+1 sample points."""
    e = pattern.num_edges
    zs = np.linspace(0.0, 1.0, e + 1)
    vals = [q_polynomial(pattern, gamma, f, zi) for zi in zs]
    coeffs = np.polynomial.polynomial.polyfit(zs, vals, e)
    dcoeffs = np.polynomial.polynomial.polyder(coeffs)
    return float(np.polynomial.polynomial.polyval(z, dcoeffs))


@dataclass(frozen=True)
class DerivativeGap:
    residual: float
    bound: float
    bound_subset_weighted: float


def derivative_path_gap(cert: NdlCertificate, gamma: EdgeFunction, f: EdgeFunction,
                        k: int, z: float) -> DerivativeGap:
    """|dQ_cycle/dz - p(2k+1) Q_path(z)| against its spectral bounds.

    `bound` is the aggregate form (2k+1) p^(2k+1) (lam/(mu^(2k+1) d) +
    lam^(2k-1) n / (mu^(2k+1) d^(2k))); mu is the relative subset size
    |X|/n.  `bound_subset_weighted` additionally carries the factor
    sum_J z^(2k-|J|) over the even nonzero path subsets, which the
    per-subset derivation supports term by term.  The two coincide at
    k = 1; for k >= 2 the aggregate form can be exceeded on small graphs.
    """
    mu = gamma.size / cert.n
    p, d, lam, n = cert.p, float(cert.d), cert.lam, cert.n
    cyc = pat.cycle(2 * k + 1)
    pth = pat.path(2 * k)
    deriv = q_derivative_central(cyc, gamma, f, z)
    residual = abs(deriv - p * (2 * k + 1) * q_polynomial(pth, gamma, f, z))
    per_subset = p ** (2 * k + 1) * (
        lam / (mu ** (2 * k + 1) * d)
        + lam ** (2 * k - 1) * n / (mu ** (2 * k + 1) * d ** (2 * k))
    )
    weight = sum(
        z ** (2 * k - bin(mask).count("1"))
        for mask in _even_nonzero_masks(2 * k)
    )
    return DerivativeGap(
        residual,
        (2 * k + 1) * per_subset,
        (2 * k + 1) * weight * per_subset,
    )


def even_subset_cover_counts(k: int) -> list[tuple[int, int, int]]:
    """For each even nonzero J in the (2k+1)-cycle: how many single-edge
    deletions leave J intact, versus the predicted 2k+1-|J|.

    Returns (mask, observed, predicted) triples from literal enumeration.
    """
    m = 2 * k + 1
    rows = []
    for mask in _even_nonzero_masks(m):
        size = bin(mask).count("1")
        observed = 0
        for e in range(m):
            if (mask >> e) & 1:
                continue
            # J survives deleting edge e; it is even and nonzero there too
            observed += 1
        rows.append((mask, observed, m - size))
    return rows


# --- the normalized path-expectation sequence ---

def t_sequence(k: int, gamma: EdgeFunction, f: EdgeFunction, z: float, p: float) -> list[float]:
    """T_0..T_{2k}: per-span sums of pinned even-subset path expectations.

    T_m sums E[f on J, z*gamma off J] over even J in the m-edge path that
    contain both the first and the last edge, scaled by (p z)^(2k - m).
    T_0 = T_1 = 0 by convention.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if 2 * k > 12:
        raise ResourceBudgetError("path spans above 12 edges are out of budget")
    if not (0 < z <= 1):
        raise ValueError("z must lie in (0, 1]")
    if p <= 0:
        raise ValueError("edge density p must be positive")
    _check_dominated(gamma, f)
    s = gamma.size
    G, F = gamma.values, f.values
    zG = z * G
    ts = [0.0, 0.0]
    for m in range(2, 2 * k + 1):
        total = 0.0
        mid = m - 2
        for sub in range(1 << mid):
            if (2 + bin(sub).count("1")) % 2 != 0:
                continue
            mats = [F]
            mats.extend(F if (sub >> i) & 1 else zG for i in range(mid))
            mats.append(F)
            total += _chain_value(mats, "path", s)
        ts.append((p * z) ** (2 * k - m) * total)
    return ts


def t_combination(ts: list[float], ell: int) -> float:
    """T_{2l} + 2 T_{2l-1} + T_{2l-2}, the combination proved nonnegative."""
    if ell < 1 or 2 * ell >= len(ts) + 1:
        raise ValueError(f"ell={ell} out of range for a sequence of length {len(ts)}")
    return ts[2 * ell] + 2 * ts[2 * ell - 1] + ts[2 * ell - 2]


# --- the two-class lower bound and its verifier ---

def commonality_bound(cert: NdlCertificate, X: VertexSet, delta: float, k: int) -> float:
    """(p |X|)^(2k+1) / 4^k * (1 - 2^(8k) delta); nonpositive means vacuous."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    if len(X) < 1:
        raise ValueError("X must be nonempty")
    return (cert.p * len(X)) ** (2 * k + 1) / 4.0 ** k * (1 - 2.0 ** (8 * k) * delta)


def measured_regularity_slack(host: Graph, X: VertexSet, p: float) -> float | None:
    """max_x |deg within X / (p |X|) - 1|, or None when p |X| = 0."""
    target = p * len(X)
    if target == 0:
        return None
    HX, _ = induced_subgraph(host, X)
    if HX.n == 0:
        return None
    return max(abs(deg / target - 1.0) for deg in HX.degrees())


@dataclass(frozen=True)
class CommonalityReport:
    k: int
    size_x: int
    p: float
    delta: float
    count_sub: int
    count_complement: int
    bound: float
    holds: bool
    vacuous: bool
    hypothesis_ratio: float


def verify_commonality(host: Graph, cert: NdlCertificate, X: VertexSet,
                       G_sub: Graph, k: int) -> CommonalityReport:
    """Count odd cycles in both colour classes within X and compare to the bound.

    G_sub lives on host labels; its edges must be host edges with both ends
    in X.  The regularity slack delta is measured on the actual X, never
    assumed.  A nonpositive bound is reported vacuous rather than held.
    """
    if host.n != cert.n:
        raise ValueError("certificate does not match the host")
    if G_sub.n != host.n:
        raise ValueError("subgraph must live on the host vertex set")
    extra = G_sub.edge_set - host.edge_set
    if extra:
        raise ValueError(f"subgraph edge {min(extra)} is not a host edge")
    xset = set(X.members)
    for u, v in G_sub.edges:
        if u not in xset or v not in xset:
            raise ValueError(f"subgraph edge ({u},{v}) leaves the subset X")
    HX, labels = induced_subgraph(host, X)
    pos = {v: i for i, v in enumerate(labels)}
    GX = from_edge_list(len(X), [(pos[u], pos[v]) for u, v in G_sub.edges])
    CX = complement_within(HX, GX)
    delta = measured_regularity_slack(host, X, cert.p)
    m = 2 * k + 1
    count_sub = injective_count_cycle(GX, m)
    count_co = injective_count_cycle(CX, m)
    if delta is None:
        bound, vac, delta = 0.0, True, 0.0
    else:
        bound = commonality_bound(cert, X, delta, k)
        vac = bound <= 0
    ratio = hypothesis_ratio(cert, k) if cert.d > 0 else float("inf")
    holds = (count_sub + count_co >= bound) and not vac
    return CommonalityReport(
        k, len(X), cert.p, delta, count_sub, count_co, bound, holds, vac, ratio
    )
