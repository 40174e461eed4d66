from fractions import Fraction

import pytest

from clique_extremal import (
    Graph,
    GuardExceeded,
    delta_lower_bound,
    delta_threshold_no_subdivision,
    matching_complement,
    min_tset_missing,
    random_graph,
    sigma_exhaustive,
    star_of_clique,
    t_param,
    tset_missing_upper_estimate,
)

from conftest import brute_min_tset_missing, brute_t_param, complete_graph, cycle_graph


def test_min_tset_missing_spot_values():
    assert min_tset_missing(complete_graph(9), 4)[0] == 0
    assert min_tset_missing(matching_complement(8), 6)[0] == 2
    assert min_tset_missing(star_of_clique(10, 5), 6)[0] == 3


def test_min_tset_missing_witness_is_exact():
    for seed in range(20):
        g = random_graph(seed % 10 + 3, 0.5, seed)
        for t in range(1, g.n + 1):
            value, witness = min_tset_missing(g, t)
            assert len(witness) == t
            assert g.missing_edges_within(witness) == value


def test_min_tset_missing_matches_brute_force():
    for seed in range(25):
        g = random_graph(seed % 9 + 3, (seed % 9 + 1) / 10.0, seed)
        for t in range(1, g.n + 1):
            assert min_tset_missing(g, t)[0] == brute_min_tset_missing(g, t)


def test_min_tset_missing_validates():
    with pytest.raises(ValueError):
        min_tset_missing(complete_graph(3), 0)
    with pytest.raises(ValueError):
        min_tset_missing(complete_graph(3), 4)
    with pytest.raises(GuardExceeded):
        min_tset_missing(Graph.from_edge_list(25, []), 3)
    assert min_tset_missing(Graph.from_edge_list(25, []), 3, limit_n=25)[0] == 3


def test_upper_estimate_bounds_the_minimum():
    for seed in range(20):
        g = random_graph(seed % 12 + 4, 0.5, seed)
        for t in range(2, g.n + 1):
            assert min_tset_missing(g, t)[0] <= tset_missing_upper_estimate(g, t)


def test_t_param_spot_values():
    assert t_param(complete_graph(7)).t_param == 7
    assert t_param(matching_complement(8)).t_param == 6
    assert t_param(star_of_clique(10, 5)).t_param == 6
    assert t_param(cycle_graph(5)).t_param == 3


def test_t_param_matches_brute_force():
    for seed in range(25):
        g = random_graph(seed % 9 + 2, (seed % 9 + 1) / 10.0, seed)
        assert t_param(g).t_param == brute_t_param(g)


def test_t_param_report_fields():
    rep = t_param(matching_complement(8))
    assert rep.delta == 1
    assert (rep.sigma_lower, rep.sigma_upper) == (5, 6)
    assert matching_complement(8).missing_edges_within(rep.witness) <= 8 - rep.t_param
    with pytest.raises(ValueError):
        t_param(Graph.from_edge_list(0, []))


def test_delta_lower_bound_values():
    assert delta_lower_bound(20, 5, 10) == 2
    assert delta_lower_bound(9, 0, 4) == 0
    assert delta_lower_bound(12, 6, 6) == 4
    assert delta_lower_bound(5, 1, 3) == Fraction(10, 9)
    with pytest.raises(ValueError):
        delta_lower_bound(5, 1, 0)
    with pytest.raises(ValueError):
        delta_lower_bound(3, 1, 5)


def test_delta_lower_bound_holds_with_exact_minimum():
    for seed in range(30):
        g = random_graph(seed % 10 + 4, (seed % 9 + 1) / 10.0, seed)
        delta = Fraction(g.max_missing_degree())
        for t in range(1, g.n + 1):
            x, _ = min_tset_missing(g, t)
            assert delta >= delta_lower_bound(g.n, x, t)


def test_delta_lower_bound_tight_on_cycle():
    # C5 at t = n: every 5-set misses 5 edges and 2 * 5 * 5 / 25 = 2 = Delta
    g = cycle_graph(5)
    x, _ = min_tset_missing(g, 5)
    assert x == 5
    assert delta_lower_bound(5, x, 5) == Fraction(2) == Fraction(g.max_missing_degree())


def test_delta_threshold_values():
    assert delta_threshold_no_subdivision(6, 6) == 0
    assert delta_threshold_no_subdivision(10, 5) == Fraction(90, 56)
    assert delta_threshold_no_subdivision(100, 16) == Fraction(16632, 636)
    with pytest.raises(ValueError):
        delta_threshold_no_subdivision(1, 1)
    with pytest.raises(ValueError):
        delta_threshold_no_subdivision(4, 5)


def test_delta_threshold_direction():
    # C5 has sigma = 3 and Delta = 2: without a subdivision of a t-clique
    # the maximum missing degree must exceed the averaging threshold
    g = cycle_graph(5)
    assert sigma_exhaustive(g) == 3
    for t in (4, 5):
        assert Fraction(g.max_missing_degree()) > delta_threshold_no_subdivision(5, t)
    # and at scale: every random graph obeys the implication
    for seed in range(25):
        g = random_graph(seed % 8 + 4, (seed % 9 + 1) / 10.0, seed)
        sigma = sigma_exhaustive(g)
        delta = Fraction(g.max_missing_degree())
        for t in range(sigma + 1, g.n + 1):
            assert delta > delta_threshold_no_subdivision(g.n, t)
