"""Dense symmetric eigensolving, (n, d, lambda) certificates, and mixing checks.

Full spectra are required because the trace identities tested elsewhere need
every eigenvalue; graphs are capped at MAX_DENSE_N vertices.  Certificates
are only issued for regular graphs: every downstream formula uses the exact
degree d.  Disconnected or bipartite regular graphs legitimately certify
with lambda = d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CertificationError, NumericError
from .graphs import Graph, degree_profile

MAX_DENSE_N = 4096

# 0/1 matrices at desk scale are well conditioned; residuals scale with n.
RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """All adjacency eigenvalues, sorted descending, with the certified residual."""

    eigenvalues: np.ndarray
    residual: float

    @property
    def n(self) -> int:
        return len(self.eigenvalues)

    def power_sum(self, k: int) -> float:
        return float(np.sum(self.eigenvalues ** k))


def spectrum(G: Graph) -> Spectrum:
    """Full spectrum of the adjacency matrix with a residual certificate.

    Raises NumericError if max_i ||A v_i - w_i v_i||_inf exceeds
    RESIDUAL_TOL * n, or if the trace / Frobenius invariants fail.
    """
    if G.n < 1:
        raise ValueError("spectrum needs at least one vertex")
    if G.n > MAX_DENSE_N:
        raise ValueError(f"dense spectra capped at n={MAX_DENSE_N}, got {G.n}")
    A = G.adjacency_matrix().astype(np.float64)
    w, V = np.linalg.eigh(A)
    residual = float(np.max(np.abs(A @ V - V * w))) if G.n > 0 else 0.0
    tol = RESIDUAL_TOL * max(G.n, 1)
    if residual > tol:
        raise NumericError(f"eigensolver residual {residual:.3e} above {tol:.3e}")
    ev = w[::-1].copy()
    ev.setflags(write=False)
    dmax = degree_profile(G).max_degree
    check_tol = RESIDUAL_TOL * G.n * (1 + dmax)
    if abs(float(np.sum(ev))) > check_tol:
        raise NumericError("eigenvalue sum deviates from the zero trace")
    if abs(float(np.sum(ev ** 2)) - 2 * G.m) > check_tol:
        raise NumericError("eigenvalue square sum deviates from twice the edge count")
    return Spectrum(ev, residual)


@dataclass(frozen=True)
class NdlCertificate:
    """(n, d, lambda) data for a regular graph: lambda = max(|w_2|, |w_n|)."""

    n: int
    d: int
    lam: float
    p: float
    spectrum: Spectrum


def certify_ndl(G: Graph) -> NdlCertificate:
    """Certify a regular graph; lambda is the largest nontrivial eigenvalue modulus."""
    profile = degree_profile(G)
    if profile.regular_degree is None:
        raise CertificationError(
            f"graph is not regular (degrees range {profile.min_degree}..{profile.max_degree})"
        )
    d = profile.regular_degree
    spec = spectrum(G)
    ev = spec.eigenvalues
    if abs(float(ev[0]) - d) > 1e-8 * max(1, d) * G.n:
        raise NumericError(f"top eigenvalue {ev[0]} does not match the degree {d}")
    if G.n >= 2:
        lam = max(abs(float(ev[1])), abs(float(ev[-1])))
    else:
        lam = 0.0
    if lam > d + 1e-8 * max(1, d) * G.n:
        raise NumericError(f"lambda {lam} exceeds the degree {d}")
    lam = min(lam, float(d))
    return NdlCertificate(G.n, d, lam, d / G.n, spec)


def hypothesis_ratio(cert: NdlCertificate, k: int) -> float:
    """lambda^(2k-1) * n / d^(2k); small values put the certificate in range."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if cert.d == 0:
        raise ValueError("hypothesis ratio undefined for degree 0")
    return cert.lam ** (2 * k - 1) * cert.n / float(cert.d) ** (2 * k)


def even_cycle_trace_bound(cert: NdlCertificate, k: int) -> float:
    """Upper bound d^(2k) + lambda^(2k-2) * d * n on closed 2k-walk counts.

    Convention: lambda^0 = 1 even when lambda = 0, so the k = 1 bound reads
    d^2 + d*n (the factor multiplies the eigenvalue square sum directly).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    return float(cert.d) ** (2 * k) + cert.lam ** (2 * k - 2) * cert.d * cert.n


@dataclass(frozen=True)
class MixingCheck:
    lhs: float
    rhs: float
    holds: bool


def expander_mixing_check(
    cert: NdlCertificate, G: Graph, u: np.ndarray, v: np.ndarray
) -> MixingCheck:
    """Weighted edge-count deviation against the spectral bound.

    lhs = |sum_xy u(x) A(x,y) v(y) - (d/n) sum(u) sum(v)|,
    rhs = lambda * sqrt(sum(u^2) * sum(v^2));  holds allows additive slack
    1e-9 * n^2.
    """
    if cert.n != G.n:
        raise ValueError("certificate and graph disagree on the vertex count")
    if degree_profile(G).regular_degree != cert.d:
        raise ValueError("certificate degree does not match the graph")
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != (G.n,) or v.shape != (G.n,):
        raise ValueError(f"weight vectors must have length {G.n}")
    for name, w in (("u", u), ("v", v)):
        if np.any(w < 0) or np.any(w > 1):
            raise ValueError(f"weights {name} must lie in [0, 1]")
    A = G.adjacency_matrix().astype(np.float64)
    lhs = abs(float(u @ A @ v) - cert.p * float(u.sum()) * float(v.sum()))
    rhs = cert.lam * math.sqrt(float(u @ u) * float(v @ v))
    return MixingCheck(lhs, rhs, lhs <= rhs + 1e-9 * G.n ** 2)
