import numpy as np
import pytest

from config.settings import settings
from core.graph.edge_list import read_edge_list
from core.graph.properties import is_tree
from core.indices.enumeration import BruteForceResult, brute_force_minimum, merge_results
from core.indices.hitting import hitting_times
from core.indices.identities import verify_all, verify_decomposition, verify_hitting_spectral
from core.indices.kirchhoff import (
    additive_index,
    degree_distance,
    index_values,
    multiplicative_index,
    multiplicative_index_spectral,
)
from core.indices.resistance import ResistanceMatrix, effective_resistances, resistance_floor_violations
from tests.conftest import family


# --- resistances and indices -----------------------------------------------------

def test_triangle_resistances_and_indices():
    g = family("complete:n=3")
    rm = effective_resistances(g)
    off_diagonal = rm.r[~np.eye(3, dtype=bool)]
    assert off_diagonal == pytest.approx([2 / 3] * 6)
    values = index_values(g, rm)
    assert values.r == pytest.approx(2.0)
    assert values.r_star == pytest.approx(8.0)
    assert values.r_plus == pytest.approx(8.0)


def test_path_resistances_are_distances():
    g = family("path:n=3")
    rm = effective_resistances(g)
    assert rm[0, 2] == pytest.approx(2.0)
    values = index_values(g, rm)
    assert (values.r, values.r_star, values.r_plus) == pytest.approx((4.0, 6.0, 10.0))


def test_star_indices():
    values = index_values(family("star:n=4"))
    assert (values.r, values.r_star, values.r_plus) == pytest.approx((9.0, 15.0, 24.0))


def test_resistance_matrix_shape_and_symmetry(petersen_path):
    rm = effective_resistances(read_edge_list(petersen_path))
    assert rm.n == 10
    assert np.array_equal(rm.r, rm.r.T)
    assert np.all(np.diag(rm.r) == 0.0)
    assert rm.r_max <= 1.0 + 1e-12


@pytest.mark.parametrize("text, expected", [("cycle:n=5", 40.0), ("complete:n=6", 50.0)])
def test_additive_index_examples(text, expected):
    g = family(text)
    assert additive_index(g, effective_resistances(g)) == pytest.approx(expected)


@pytest.mark.parametrize("n", range(2, 31))
def test_complete_graph_closed_form(n):
    assert index_values(family(f"complete:n={n}")).r_plus == pytest.approx(2 * (n - 1) ** 2, rel=1e-10)


@pytest.mark.parametrize("n", range(3, 31))
def test_star_closed_form(n):
    assert index_values(family(f"star:n={n}")).r_plus == pytest.approx(3 * n * n - 7 * n + 4, rel=1e-10)


@pytest.mark.parametrize("n", range(3, 31))
def test_cycle_closed_form(n):
    assert index_values(family(f"cycle:n={n}")).r_plus == pytest.approx((n ** 3 - n) / 3, rel=1e-10)


@pytest.mark.parametrize("n", range(3, 21))
def test_lollipop_closed_form(n):
    expected = 3 * n * n - 8 * n + 8 - 2 / (n - 1)
    assert index_values(family(f"lollipop:n={n}")).r_plus == pytest.approx(expected, rel=1e-10)


@pytest.mark.parametrize("half", range(1, 11))
def test_balanced_complete_bipartite_closed_form(half):
    n = 2 * half
    g = family(f"complete_bipartite:r={half},s={half}")
    assert index_values(g).r_plus == pytest.approx(n * (2 * n - 3), rel=1e-10)


def test_barbell_values():
    assert index_values(family("barbell_thirds:n=9")).r_plus == pytest.approx(848 / 3, rel=1e-10)
    assert index_values(family("barbell_thirds:n=12")).r_plus == pytest.approx(843.0, rel=1e-10)
    assert index_values(family("barbell_thirds:n=30")).r_plus == pytest.approx(30005.6, rel=1e-10)


def test_barbell_growth_stays_below_two_over_27():
    ratios = {}
    for n in range(9, 31, 3):
        g = family(f"barbell_thirds:n={n}")
        r_plus = index_values(g).r_plus
        ratios[n] = r_plus / n ** 4
        vertices = g.n
        assert r_plus > 2 * (vertices - 1) ** 2
        assert r_plus > 3 * vertices ** 2 - 7 * vertices + 4
        assert r_plus > (vertices ** 3 - vertices) / 3
    assert all(ratio < 2 / 27 for ratio in ratios.values())
    assert ratios[9] > ratios[12] > ratios[30]


def test_trees_match_degree_distance(corpus):
    trees = [item for item in corpus if is_tree(item.graph)]
    assert len(trees) >= 50
    for item in trees:
        assert item.indices.r_plus == pytest.approx(degree_distance(item.graph), rel=1e-9), item.label


def test_degree_distance_exceeds_resistance_form_off_trees():
    g = family("cycle:n=6")
    assert degree_distance(g) > index_values(g).r_plus


# --- hitting times ---------------------------------------------------------------

def test_hitting_times_examples():
    k3 = family("complete:n=3")
    ht = hitting_times(k3, effective_resistances(k3))
    assert ht.h[~np.eye(3, dtype=bool)] == pytest.approx([2.0] * 6)

    k2 = family("complete:n=2")
    assert hitting_times(k2, effective_resistances(k2)).h[0, 1] == pytest.approx(1.0)

    p3 = family("path:n=3")
    ht = hitting_times(p3, effective_resistances(p3))
    assert ht.h[0, 2] == pytest.approx(4.0)
    assert ht.h[0, 1] == pytest.approx(1.0)
    assert ht.h[1, 0] == pytest.approx(3.0)
    assert ht.commute_time(0, 2) == pytest.approx(8.0)
    assert ht.pi == pytest.approx([0.25, 0.5, 0.25])


# --- identities -----------------------------------------------------------------

def test_every_identity_holds_on_corpus(corpus):
    for item in corpus:
        report = verify_all(item.graph, settings.VERIFY_TOL, rm=item.resistances, spectrum=item.spectrum)
        assert report.passed, (item.label, [c.identity for c in report.failures()])


def test_multiplicative_index_two_routes(corpus):
    for item in corpus:
        g = item.graph
        direct = multiplicative_index(g, item.resistances)
        assert multiplicative_index_spectral(g, item.spectrum) == pytest.approx(direct, rel=1e-9), item.label


def test_verification_lists_every_identity():
    g = family("sun:n=8")
    report = verify_all(g)
    names = {check.identity for check in report.checks}
    assert names == {
        "commute_time",
        "multiplicative_spectral",
        "bipartite_spectrum",
        "resistance_floors",
        "decomposition",
        "decomposition_spectral",
        "hitting_spectral",
        "eigenvector_normalization",
    }
    assert len([c for c in report.checks if c.identity == "hitting_spectral"]) == g.n
    assert report.max_rel_error <= settings.VERIFY_TOL


def test_decomposition_and_hitting_spectral_standalone():
    g = family("leaf_path_tree:depth=3")
    assert verify_decomposition(g).passed
    assert verify_hitting_spectral(g).passed


def test_tampered_resistances_fail_verification():
    g = family("petersen")
    rm = effective_resistances(g)
    report = verify_all(g, rm=ResistanceMatrix(r=rm.r * 1.1))
    assert not report.passed
    assert "multiplicative_spectral" in {c.identity for c in report.failures()}


# --- resistance floors ------------------------------------------------------------

def test_no_resistance_floor_violations_on_corpus(corpus):
    for item in corpus:
        assert resistance_floor_violations(item.graph, item.resistances) == [], item.label


def test_floor_is_tight_on_star_edges():
    g = family("star:n=4")
    rm = effective_resistances(g)
    assert rm[0, 1] == pytest.approx((1 + 3 - 2) / (3 - 1))
    assert rm[1, 2] == pytest.approx(2.0)


def test_shrunken_resistances_violate_floors():
    g = family("cycle:n=6")
    rm = effective_resistances(g)
    violations = resistance_floor_violations(g, ResistanceMatrix(r=rm.r * 0.5))
    assert violations
    i, j, value, floor = violations[0]
    assert value < floor


# --- brute-force minimum -------------------------------------------------------

@pytest.mark.parametrize("n, connected", [(2, 1), (3, 4), (4, 38), (5, 728)])
def test_brute_force_minimum_is_the_complete_graph(n, connected):
    result = brute_force_minimum(n)
    assert result.graphs_checked == connected
    assert result.min_r_plus == pytest.approx(2 * (n - 1) ** 2)
    assert len(result.minimizers) == 1
    assert result.argmin == family(f"complete:n={n}").edges


@pytest.mark.slow
def test_brute_force_minimum_six_vertices():
    result = brute_force_minimum(6, partitions=4)
    assert result.graphs_checked == 26704
    assert result.min_r_plus == pytest.approx(50.0)
    assert result.argmin == family("complete:n=6").edges


def test_partitioning_does_not_change_the_result():
    assert brute_force_minimum(5, partitions=1) == brute_force_minimum(5, partitions=7)


def test_merge_ignores_empty_partitions():
    found = BruteForceResult(n=3, graphs_checked=4, min_r_plus=8.0, argmin=((0, 1),), minimizers=(((0, 1),),))
    empty = BruteForceResult(n=3, graphs_checked=0, min_r_plus=float("inf"), argmin=(), minimizers=())
    assert merge_results([empty, found]) == found
