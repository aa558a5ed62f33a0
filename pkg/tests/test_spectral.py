import math

import numpy as np
import pytest

from oddcycles.counting import hom_count_cycle
from oddcycles.errors import CertificationError
from oddcycles.generators import complete, cycle_graph, empty, paley
from oddcycles.graphs import from_edge_list
from oddcycles.spectral import (
    NdlCertificate,
    Spectrum,
    certify_ndl,
    even_cycle_trace_bound,
    expander_mixing_check,
    hypothesis_ratio,
    spectrum,
)


def test_spectrum_complete_graph():
    s = spectrum(complete(3))
    assert np.allclose(s.eigenvalues, [2, -1, -1], atol=1e-9)


def test_spectrum_c4_against_cosine_oracle():
    # eigenvalues of the n-cycle are 2 cos(2 pi j / n)
    expected = sorted((2 * math.cos(2 * math.pi * j / 4) for j in range(4)), reverse=True)
    s = spectrum(cycle_graph(4))
    assert np.allclose(s.eigenvalues, expected, atol=1e-9)


def test_spectrum_cosine_oracle_larger_cycles():
    for n in (5, 6, 8):
        expected = sorted((2 * math.cos(2 * math.pi * j / n) for j in range(n)), reverse=True)
        assert np.allclose(spectrum(cycle_graph(n)).eigenvalues, expected, atol=1e-8)


def test_spectrum_empty_graph():
    s = spectrum(empty(3))
    assert np.allclose(s.eigenvalues, [0, 0, 0])


def test_spectrum_residual_and_moment_invariants(certified_graphs):
    for name, G, cert in certified_graphs:
        s = cert.spectrum
        assert s.residual <= 1e-9 * G.n
        assert abs(float(np.sum(s.eigenvalues))) < 1e-8 * max(1, G.n)
        assert abs(s.power_sum(2) - 2 * G.m) < 1e-7 * max(1, G.m)


def test_certify_k4():
    cert = certify_ndl(complete(4))
    assert (cert.n, cert.d) == (4, 3)
    assert abs(cert.lam - 1.0) < 1e-9


def test_certify_complete_graphs_lambda_one():
    for n in range(2, 9):
        assert abs(certify_ndl(complete(n)).lam - 1.0) < 1e-9


def test_certify_paley13():
    cert = certify_ndl(paley(13))
    assert cert.d == 6
    assert abs(cert.lam - (1 + math.sqrt(13)) / 2) < 1e-6


def test_certify_rejects_irregular():
    path3 = from_edge_list(3, [(0, 1), (1, 2)])
    with pytest.raises(CertificationError):
        certify_ndl(path3)


def test_certify_bipartite_lambda_equals_degree():
    from oddcycles.generators import complete_bipartite

    cert = certify_ndl(complete_bipartite(3, 3))
    assert abs(cert.lam - 3.0) < 1e-9


def test_hypothesis_ratio_k4():
    cert = certify_ndl(complete(4))
    assert abs(hypothesis_ratio(cert, 1) - 4 / 9) < 1e-9


def test_hypothesis_ratio_paley101(paley101):
    _, cert = paley101
    assert abs(hypothesis_ratio(cert, 1) - 0.2232074875) < 1e-6


def test_hypothesis_ratio_degenerate_cases():
    cert = certify_ndl(complete(4))
    lam0 = NdlCertificate(cert.n, cert.d, 0.0, cert.p, cert.spectrum)
    assert hypothesis_ratio(lam0, 1) == 0.0
    assert hypothesis_ratio(lam0, 3) == 0.0
    zero = certify_ndl(empty(4))
    with pytest.raises(ValueError):
        hypothesis_ratio(zero, 1)


def test_even_cycle_bound_k4():
    cert = certify_ndl(complete(4))
    assert abs(even_cycle_trace_bound(cert, 1) - 21.0) < 1e-9
    assert hom_count_cycle(complete(4), 2) == 12
    assert abs(even_cycle_trace_bound(cert, 2) - 93.0) < 1e-9
    assert hom_count_cycle(complete(4), 4) == 84


def test_even_cycle_bound_zero_lambda_convention():
    cert = certify_ndl(empty(5))
    assert cert.lam == 0.0
    # lambda^0 = 1 by convention, so the k = 1 bound is d^2 + d n = 0 here
    assert even_cycle_trace_bound(cert, 1) == 0.0


def test_even_cycle_bound_certified_corpus(certified_graphs):
    for name, G, cert in certified_graphs:
        for k in (1, 2, 3, 4):
            bound = even_cycle_trace_bound(cert, k)
            actual = hom_count_cycle(G, 2 * k)
            assert actual <= bound + 1e-9 * abs(bound), (name, k)


def test_odd_cycle_walk_estimate(certified_graphs):
    # |closed (2k+1)-walks - d^(2k+1)| <= lambda * closed 2k-walks
    for name, G, cert in certified_graphs:
        for k in (1, 2, 3):
            lhs = abs(hom_count_cycle(G, 2 * k + 1) - cert.d ** (2 * k + 1))
            rhs = cert.lam * hom_count_cycle(G, 2 * k)
            assert lhs <= rhs + 1e-9 * max(1.0, rhs), (name, k)


def test_mixing_check_constant_weights():
    cert = certify_ndl(complete(4))
    ones = np.ones(4)
    chk = expander_mixing_check(cert, complete(4), ones, ones)
    assert chk.lhs < 1e-9
    assert abs(chk.rhs - 4.0) < 1e-9
    assert chk.holds


def test_mixing_check_zero_weights():
    cert = certify_ndl(complete(4))
    zeros = np.zeros(4)
    chk = expander_mixing_check(cert, complete(4), zeros, zeros)
    assert chk.lhs == 0.0 and chk.rhs == 0.0 and chk.holds


def test_mixing_check_rejects_bad_weights():
    cert = certify_ndl(complete(4))
    with pytest.raises(ValueError):
        expander_mixing_check(cert, complete(4), np.full(4, 1.5), np.ones(4))


def test_mixing_check_random_trials(certified_graphs):
    rng = np.random.default_rng(7)
    for name, G, cert in certified_graphs:
        for _ in range(25):
            if rng.random() < 0.5:
                u = rng.random(G.n)
                v = rng.random(G.n)
            else:
                u = (rng.random(G.n) < 0.5).astype(float)
                v = (rng.random(G.n) < 0.5).astype(float)
            assert expander_mixing_check(cert, G, u, v).holds, name


def test_trace_identity_against_counts(certified_graphs):
    for name, G, cert in certified_graphs:
        for m in range(2, 9):
            exact = hom_count_cycle(G, m)
            approx = cert.spectrum.power_sum(m)
            assert abs(approx - exact) <= 1e-6 * max(1.0, abs(exact)), (name, m)


def test_spectrum_requires_vertices():
    with pytest.raises(ValueError):
        spectrum(from_edge_list(0, []))
