import pytest

from clique_extremal import (
    Graph,
    GuardExceeded,
    count_cliques_oracle,
    count_cliques_peeling,
    matching_complement,
    peel_trace,
    random_graph,
    star_of_clique,
)

from conftest import brute_count_cliques, complete_graph, cycle_graph


def test_oracle_known_values():
    assert count_cliques_oracle(complete_graph(4)).count_including_empty == 16
    assert count_cliques_oracle(complete_graph(4)).clique_number == 4
    mc6 = count_cliques_oracle(matching_complement(6))
    assert mc6.count_including_empty == 27
    assert mc6.clique_number == 3
    assert count_cliques_oracle(star_of_clique(10, 5)).count_including_empty == 64


def test_peeling_known_values():
    stats, _ = count_cliques_peeling(Graph.from_edge_list(3, []))
    assert stats.count_including_empty == 4
    stats, _ = count_cliques_peeling(cycle_graph(5))
    assert stats.count_including_empty == 11
    assert stats.clique_number == 2
    stats, _ = count_cliques_peeling(star_of_clique(12, 5))
    assert stats.count_including_empty == 2 ** 3 * (12 - 5 + 3)


def test_counts_on_empty_vertex_set():
    g = Graph.from_edge_list(0, [])
    assert count_cliques_oracle(g).count_including_empty == 1
    assert count_cliques_oracle(g).clique_number == 0
    stats, trace = count_cliques_peeling(g)
    assert stats.count_including_empty == 1
    assert trace.sizes == (0,)


def test_stats_invariants():
    for seed in range(25):
        g = random_graph(seed % 13 + 1, 0.5, seed)
        stats = count_cliques_oracle(g)
        assert stats.count_including_empty == stats.count_nonempty + 1
        assert 1 <= stats.clique_number <= g.n


def test_oracle_matches_subset_enumeration():
    for seed in range(40):
        g = random_graph(seed % 11 + 2, (seed % 9 + 1) / 10.0, seed)
        count, omega = brute_count_cliques(g)
        stats = count_cliques_oracle(g)
        assert stats.count_including_empty == count
        assert stats.clique_number == omega


def test_peeling_matches_oracle():
    for seed in range(150):
        g = random_graph(seed % 17 + 4, (seed % 9 + 1) / 10.0, seed)
        assert count_cliques_peeling(g)[0] == count_cliques_oracle(g)


def test_oracle_guard():
    with pytest.raises(GuardExceeded):
        count_cliques_oracle(Graph.from_edge_list(41, []))
    # explicit limit overrides the default
    count_cliques_oracle(Graph.from_edge_list(41, []), limit_n=41)


def test_adding_edge_never_decreases_count():
    for seed in range(15):
        g = random_graph(10, 0.4, seed)
        base = count_cliques_oracle(g).count_including_empty
        missing = [
            (u, v)
            for u in range(10)
            for v in range(u + 1, 10)
            if not g.has_edge(u, v)
        ]
        if not missing:
            continue
        u, v = missing[seed % len(missing)]
        bigger = Graph.from_edge_list(10, list(g.edges()) + [(u, v)])
        assert count_cliques_oracle(bigger).count_including_empty >= base


def test_peeling_trace_well_formed():
    for seed in range(10):
        g = random_graph(12, 0.5, seed)
        _, trace = count_cliques_peeling(g)
        assert trace.sizes[0] == g.n
        assert all(a > b for a, b in zip(trace.sizes, trace.sizes[1:]))
        assert len(trace.picked) == len(trace.sizes) - 1
        assert trace.stop_reason == "clique-exhausted"
        # each pick has minimum degree in its residual graph
        residual = set(range(g.n))
        for v in trace.picked:
            degs = {u: sum(1 for w in residual if w != u and g.has_edge(u, w)) for u in residual}
            assert degs[v] == min(degs.values())
            residual.remove(v)


def test_peel_trace_complete_graph_stops_after_first_pick():
    trace = peel_trace(complete_graph(10), 3)
    assert trace.sizes == (10, 9)
    assert trace.picked == (0,)
    assert trace.stop_reason == "small-drop"
    assert trace.stop_index == 1


def test_peel_trace_matching_complement_drops_by_two():
    trace = peel_trace(matching_complement(20), 4)
    assert all(a - b == 2 for a, b in zip(trace.sizes, trace.sizes[1:]))
    assert all(d == 1 for d in trace.missing_degrees)
    assert trace.stop_reason == "small-drop"


def test_peel_trace_star_first_pick_is_pendant():
    g = star_of_clique(30, 10)
    trace = peel_trace(g, 10)
    first = trace.picked[0]
    assert first >= 8  # pendants start after the core of size t - 2
    assert g.degree(first) == 8


def test_peel_trace_size_threshold():
    trace = peel_trace(complete_graph(4), 4)
    assert trace.stop_reason == "size-threshold"
    assert trace.sizes == (4,)
    assert trace.picked == ()


def test_peel_trace_configurable_constants():
    # with exponent 0 a drop counts as small only when it is exactly 1,
    # so the matching complement (drops of 2) runs down to the size floor
    trace = peel_trace(matching_complement(20), 4, drop_exponent=0.0)
    assert trace.stop_reason == "size-threshold"
    assert trace.sizes[-1] <= 4.2
    # with exponent 1 every drop is small: one pick then stop
    trace = peel_trace(matching_complement(20), 4, drop_exponent=1.0)
    assert trace.stop_reason == "small-drop"
    assert len(trace.picked) == 1
    # with a huge size factor the threshold fires immediately
    trace = peel_trace(matching_complement(20), 4, size_factor=10.0)
    assert trace.stop_reason == "size-threshold"
    assert trace.picked == ()


def test_peel_trace_requires_positive_t():
    with pytest.raises(ValueError):
        peel_trace(complete_graph(3), 0)
