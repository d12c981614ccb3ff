import math

import mpmath
import networkx as nx
import numpy as np
import pytest

from conftest import random_regular
from maxac.bounds import BoundConstraint, Kind, corner_system
from maxac.families import named_graph, pg_incidence_graph
from maxac.graph import from_edge_list
from maxac.spectra import (
    DisconnectedGraphError,
    SpectrumResult,
    TridiagonalSystem,
    adjacency_spectrum,
    algebraic_connectivity,
    fiedler_residual,
    laplacian,
    laplacian_spectrum,
    sturm_count,
    symmetric_eigenvalues,
    tridiag_smallest_eigenvalue,
    tridiagonal_eigenvalues,
)


@pytest.mark.parametrize(
    "name, ac",
    [("petersen", 2.0), ("heawood", 3 - math.sqrt(2)), ("desargues", 1.0), ("cube4", 2.0), ("tutte_coxeter", 1.0)],
)
def test_named_ac(name, ac):
    assert algebraic_connectivity(named_graph(name)) == pytest.approx(ac, abs=1e-9)


def test_ac_matches_networkx():
    for seed in range(5):
        g = random_regular(3, 20, seed)
        G = nx.Graph(list(g.edges))
        if nx.is_connected(G):
            want = nx.algebraic_connectivity(G, method="tracemin_lu", tol=1e-12)
            assert algebraic_connectivity(g) == pytest.approx(want, abs=1e-7)


def test_disconnected_is_reported():
    with pytest.raises(DisconnectedGraphError):
        algebraic_connectivity(from_edge_list(4, [(0, 1), (2, 3)]))


def test_symmetric_check():
    with pytest.raises(ValueError):
        symmetric_eigenvalues(np.array([[0.0, 1.0], [0.5, 0.0]]))
    with pytest.raises(ValueError):
        symmetric_eigenvalues(np.zeros((2, 3)))


def test_analytic_matrix_accuracy():
    # path Laplacian eigenvalues 2 - 2 cos(pi k / n)
    n = 60
    g = from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    want = np.sort(2 - 2 * np.cos(np.pi * np.arange(n) / n))
    assert np.max(np.abs(laplacian_spectrum(g).eigenvalues - want)) < 1e-10


def test_laplacian_is_d_minus_adjacency():
    for seed in range(10):
        g = random_regular(4, 18, seed)
        lap = laplacian_spectrum(g).eigenvalues
        adj = adjacency_spectrum(g).eigenvalues
        assert np.allclose(lap, (4 - adj)[::-1], atol=1e-9)


def test_zero_eigenvector_residual():
    for seed in range(10):
        g = random_regular(3, 24, seed)
        assert fiedler_residual(g) < 1e-8
        assert laplacian_spectrum(g).eigenvalues[0] == pytest.approx(0, abs=1e-9)
        assert np.all(laplacian_spectrum(g).eigenvalues > -1e-9)


def test_laplacian_matrix():
    g = from_edge_list(3, [(0, 1), (1, 2)])
    assert laplacian(g).tolist() == [[1, -1, 0], [-1, 2, -1], [0, -1, 1]]


def test_heawood_spectrum():
    spec = adjacency_spectrum(pg_incidence_graph(2))
    r2 = math.sqrt(2)
    assert spec.matches([(-3, 1), (-r2, 6), (r2, 6), (3, 1)])
    assert spec.grouped()[1][1] == 6


def test_empty_graph_spectrum():
    spec = adjacency_spectrum(from_edge_list(4, []))
    assert spec.eigenvalues.tolist() == [0, 0, 0, 0]


def test_spectrum_grouping():
    r = SpectrumResult(np.array([0.0, 1.0, 1.0 + 5e-8, 2.0]))
    assert [k for _, k in r.grouped()] == [1, 2, 1]


# --- tridiagonal systems --------------------------------------------------


def test_tridiag_examples():
    assert tridiag_smallest_eigenvalue(TridiagonalSystem(2, 3, 3, 3, 3)) == pytest.approx(3 - math.sqrt(3), abs=1e-11)
    assert tridiag_smallest_eigenvalue(TridiagonalSystem(3, 3, 3, 5, 3)) == pytest.approx(1.0, abs=1e-11)
    # [[3, -2], [-1, 5]] has characteristic polynomial x^2 - 8x + 13
    assert tridiag_smallest_eigenvalue(TridiagonalSystem(2, 3, 2, 5, 3)) == pytest.approx(4 - math.sqrt(3), abs=1e-11)
    # the girth-5 corner for d = 3 has c = d + 1 = 4, giving the Petersen value
    assert tridiag_smallest_eigenvalue(TridiagonalSystem(2, 3, 2, 4, 3)) == pytest.approx(2.0, abs=1e-11)


def test_tridiag_validation():
    with pytest.raises(ValueError):
        TridiagonalSystem(0, 3, 3, 3, 3)
    with pytest.raises(ValueError):
        TridiagonalSystem(2, 3, 0, 3, 3)
    with pytest.raises(ValueError):
        TridiagonalSystem(2, 3, 3, 3, 2)


def test_symmetrisation_is_similar():
    t = TridiagonalSystem(6, 4, 3, 9, 5)
    a = np.sort(np.linalg.eigvals(t.dense()).real)
    b = np.linalg.eigvalsh(t.symmetric_dense())
    assert np.allclose(a, b, atol=1e-10)


def test_tridiag_against_mpmath():
    for K, kind in [(5, Kind.EVEN_DIAMETER), (7, Kind.ODD_DIAMETER), (6, Kind.EVEN_GIRTH), (4, Kind.ODD_GIRTH)]:
        t = corner_system(BoundConstraint(kind, K, 5))
        mpmath.mp.dps = 40
        m = mpmath.matrix(t.dense().tolist())
        ev = mpmath.eig(m, left=False, right=False)
        want = min(float(mpmath.re(x)) for x in ev)
        assert tridiag_smallest_eigenvalue(t) == pytest.approx(want, abs=1e-11)


def test_tridiag_vs_dense_all_corners():
    worst = 0.0
    for kind in Kind:
        for d in range(3, 17):
            for K in range(1, 41):
                if kind is Kind.EVEN_GIRTH and K < 2:
                    continue
                t = corner_system(BoundConstraint(kind, K, d))
                dense = symmetric_eigenvalues(t.symmetric_dense()).eigenvalues[0]
                worst = max(worst, abs(tridiag_smallest_eigenvalue(t) - dense))
    assert worst < 1e-9


def test_sturm_count_against_dense():
    rng = np.random.default_rng(12)
    for _ in range(200):
        k = int(rng.integers(1, 30))
        diag = rng.normal(size=k) * 3
        off = rng.normal(size=k - 1)
        m = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
        ev = np.linalg.eigvalsh(m)
        x = float(rng.normal() * 3)
        if np.min(np.abs(ev - x)) < 1e-9:
            continue
        assert sturm_count(diag, off, x) == int(np.sum(ev < x))
    diag = rng.normal(size=12)
    off = rng.normal(size=11)
    m = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
    assert np.allclose(tridiagonal_eigenvalues(diag, off), np.linalg.eigvalsh(m), atol=1e-10)
