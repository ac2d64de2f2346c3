import pytest
from hypothesis import given, settings, strategies as st

from d2color import library
from d2color.distance2 import (Coloring, Status, chi2, color_exact, color_greedy_dsatur,
                               conflicting_pairs, forbidden_colors, square)
from d2color.generate import GenSpec, generate
from oracles import chi2_naive, square_edges_nx

KNOWN = {
    "c5": 5,           # every pair of C5 vertices is within distance 2
    "p3": 3,
    "star5": 6,        # the square is K6
    "k2": 2,
    "tetrahedron": 4,
    "cube": 4,
    "octahedron": 6,
    "icosahedron": 6,  # square is K12 minus the antipodal matching
    "dodecahedron": 5,
    "w5": 6,
}


@pytest.mark.parametrize("name", sorted(KNOWN))
def test_chi2_named(name):
    g = library.NAMED[name]()
    r = chi2(g)
    assert r.value == KNOWN[name]
    assert r.coloring.is_valid(g) and r.coloring.is_complete(g)
    assert r.coloring.num_colors() == r.value


def test_icosahedron_against_naive():
    g = library.icosahedron()
    assert chi2(g).value == chi2_naive(g) == 6


def test_c5_unsat_at_four():
    r = color_exact(library.cycle(5), 4)
    assert r.status is Status.UNSAT and r.coloring is None


def test_exact_returns_valid_coloring():
    g = library.dodecahedron()
    r = color_exact(g, 5)
    assert r.ok
    assert not conflicting_pairs(g, r.coloring.assignment)
    assert set(r.coloring.assignment.values()) <= set(range(1, 6))


def test_budget_exhaustion_is_reported():
    g = generate(GenSpec(5, 25))
    lo = chi2(g).value - 1
    r = color_exact(g, lo, budget=3)
    assert r.status is Status.BUDGET
    assert r.decisions <= 3


def test_palette_range_checked():
    with pytest.raises(ValueError):
        Coloring({0: 0}, 3)
    with pytest.raises(ValueError):
        Coloring({0: 4}, 3)


def test_forbidden_colors_on_path():
    g = library.path(5)  # 0-1-2-3-4
    col = {0: 1, 1: 2, 3: 3, 4: 4}
    assert forbidden_colors(g, col, 2) == {1, 2, 3, 4}
    assert forbidden_colors(g, col, 0) == {2}


def test_conflict_at_distance_two_detected():
    g = library.path(3)
    assert conflicting_pairs(g, {0: 1, 1: 2, 2: 1}) == [(0, 2)]
    assert conflicting_pairs(g, {0: 1, 1: 2, 2: 3}) == []


def test_greedy_valid_when_it_succeeds():
    g = library.icosahedron()
    col = color_greedy_dsatur(g, 17)
    assert col is not None and col.is_valid(g)
    assert color_greedy_dsatur(g, 5) is None


def test_square_accepts_mappings():
    sq = square({0: {1}, 1: {0, 2}, 2: {1}})
    assert sq.adj[0] == {1, 2}


_graph = st.builds(lambda s, n, m: generate(GenSpec(s, n, m)),
                   st.integers(0, 2 ** 64 - 1), st.integers(3, 50),
                   st.sampled_from(["triangulation-prune", "grid-patch"]))


@settings(max_examples=60, deadline=None)
@given(_graph)
def test_square_matches_networkx_power(g):
    assert square(g).edges == square_edges_nx(g)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 64 - 1), st.integers(3, 10))
def test_chi2_matches_naive_on_small_graphs(seed, n):
    g = generate(GenSpec(seed, n))
    assert chi2(g).value == chi2_naive(g)


@settings(max_examples=30, deadline=None)
@given(_graph)
def test_chi2_bounds(g):
    r = chi2(g)
    assert g.max_degree() + 1 <= r.value <= 17
    assert r.coloring.is_valid(g)
