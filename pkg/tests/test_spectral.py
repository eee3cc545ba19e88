import math

import numpy as np
import pytest

from core.errors import EigenSolverError, PseudoinverseError
from core.graph.properties import is_bipartite
from core.spectral.linalg import (
    laplacian,
    pseudoinverse,
    sigma,
    spectral_gap_parameters,
    symmetric_eigen,
    transition_spectrum,
)
from tests.conftest import family


def test_identity_eigenvalues():
    eig = symmetric_eigen(np.eye(3))
    assert eig.values == pytest.approx([1.0, 1.0, 1.0])


def test_k2_laplacian_eigenvalues():
    eig = symmetric_eigen([[1.0, -1.0], [-1.0, 1.0]])
    assert eig.values == pytest.approx([0.0, 2.0], abs=1e-12)


def test_normalized_adjacency_of_triangle():
    s = (np.ones((3, 3)) - np.eye(3)) / 2.0
    eig = symmetric_eigen(s)
    assert eig.values == pytest.approx([-0.5, -0.5, 1.0])


def test_decomposition_reconstructs_and_is_orthonormal():
    rng = np.random.default_rng(7)
    a = rng.normal(size=(30, 30))
    a = a + a.T
    eig = symmetric_eigen(a)
    assert np.max(np.abs(eig.reconstruct() - a)) <= 1e-9 * np.max(np.abs(a))
    assert np.max(np.abs(eig.vectors.T @ eig.vectors - np.eye(30))) <= 1e-10
    assert np.all(np.diff(eig.values) >= 0)


def test_eigenvector_sign_convention():
    eig = symmetric_eigen(laplacian(family("path:n=6")))
    for k in range(6):
        column = eig.vectors[:, k]
        leading = column[np.flatnonzero(np.abs(column) > 1e-12)[0]]
        assert leading > 0


def test_non_finite_input_is_rejected():
    with pytest.raises(EigenSolverError):
        symmetric_eigen([[1.0, float("nan")], [float("nan"), 1.0]])


def test_laplacian_examples():
    assert laplacian(family("complete:n=2")).tolist() == [[1.0, -1.0], [-1.0, 1.0]]
    path = laplacian(family("path:n=3"))
    assert np.diag(path).tolist() == [1.0, 2.0, 1.0]
    c4 = laplacian(family("cycle:n=4"))
    assert np.diag(c4).tolist() == [2.0] * 4
    assert np.allclose(c4.sum(axis=1), 0.0)


def test_pseudoinverse_of_k2():
    lp = pseudoinverse(laplacian(family("complete:n=2")))
    assert lp == pytest.approx(np.array([[0.25, -0.25], [-0.25, 0.25]]))


def test_pseudoinverse_of_complete_graph_is_l_over_n_squared():
    l = laplacian(family("complete:n=3"))
    assert np.allclose(pseudoinverse(l), l / 9.0, atol=1e-12)


@pytest.mark.parametrize("text", ["petersen", "sun:n=8", "path:n=7", "leaf_path_tree:depth=3"])
def test_pseudoinverse_identities(text):
    g = family(text)
    l = laplacian(g)
    lp = pseudoinverse(l)
    assert np.max(np.abs(l @ lp @ l - l)) <= 1e-8
    assert np.allclose(lp, lp.T)
    assert np.allclose(lp.sum(axis=1), 0.0, atol=1e-8)
    assert np.trace(l @ lp) == pytest.approx(g.n - 1, abs=1e-8)


def test_pseudoinverse_rejects_a_disconnected_laplacian():
    two_edges = np.array(
        [[1.0, -1.0, 0.0, 0.0], [-1.0, 1.0, 0.0, 0.0], [0.0, 0.0, 1.0, -1.0], [0.0, 0.0, -1.0, 1.0]]
    )
    with pytest.raises(PseudoinverseError):
        pseudoinverse(two_edges)


@pytest.mark.parametrize("n", [3, 5, 9])
def test_star_spectral_parameters(n):
    spectrum = transition_spectrum(family(f"star:n={n}"))
    assert spectrum.lambda2 == pytest.approx(0.0, abs=1e-12)
    assert spectrum.k_param == 1
    assert spectrum.theta == pytest.approx(1.0)


def test_triangle_spectrum():
    spectrum = transition_spectrum(family("complete:n=3"))
    assert spectrum.lambdas == pytest.approx([1.0, -0.5, -0.5])
    assert spectrum.k_param == 0
    assert spectrum.theta == pytest.approx(1.5)


@pytest.mark.parametrize("n", [3, 4, 7, 12])
def test_complete_graph_sigma(n):
    g = family(f"complete:n={n}")
    assert sigma(g) == pytest.approx(1.0 / math.sqrt(n - 1))
    # lambda_2 = -1/(N-1) sits exactly on an integer ratio; the snap keeps k at 0
    assert transition_spectrum(g).k_param == 0


def test_sigma_examples():
    assert sigma(family("complete:n=3")) == pytest.approx(1 / math.sqrt(2))
    assert sigma(family("biregular_bipartite:n1=10,a=4,n2=4,b=10")) == pytest.approx(math.sqrt(1 / 7))
    assert sigma(family("sun:n=20")) == pytest.approx(math.sqrt((0.45 + 10 / 9 + 10 / 30) / 10))
    assert sigma(family("sun:n=20")) == pytest.approx(0.43525, abs=1e-5)


def test_single_edge_has_no_spectral_gap_parameters():
    spectrum = transition_spectrum(family("complete:n=2"))
    assert spectrum.lambdas == pytest.approx([1.0, -1.0])
    assert spectrum.k_param is None and spectrum.theta is None
    assert spectral_gap_parameters(-1.0, 2) == (None, None)


def test_spectral_invariants_on_corpus(corpus):
    for item in corpus:
        g, spectrum = item.graph, item.spectrum
        lambdas = spectrum.lambdas
        assert lambdas[0] == pytest.approx(1.0, abs=1e-9), item.label
        assert np.all(lambdas <= 1 + 1e-9) and np.all(lambdas >= -1 - 1e-9), item.label
        assert np.all(np.diff(lambdas) <= 1e-12), item.label
        assert lambdas[1] < 1 - 1e-12, item.label
        assert abs(lambdas.sum()) <= 1e-9 * g.n, item.label
        assert spectrum.sigma ** 2 == pytest.approx(float(np.sum(lambdas ** 2)) / g.n, abs=1e-9), item.label
        assert np.allclose((spectrum.v ** 2).sum(axis=1), 1.0, atol=1e-9), item.label
        assert (abs(lambdas[-1] + 1) <= 1e-9) == is_bipartite(g), item.label


def test_symmetrized_matrix_is_similar_to_the_transition_matrix():
    g = family("sun:n=8")
    d = g.degrees.astype(float)
    p = g.adjacency_matrix / d[:, None]
    s = np.diag(np.sqrt(d)) @ p @ np.diag(1 / np.sqrt(d))
    assert np.allclose(s, s.T)
    eigenvalues = np.sort(np.linalg.eigvals(p).real)[::-1]
    assert eigenvalues == pytest.approx(transition_spectrum(g).lambdas, abs=1e-7)


