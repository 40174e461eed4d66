import random

import pytest

from clique_extremal import (
    FormatError,
    Graph,
    GuardExceeded,
    ImmersionCertificate,
    PreconditionViolation,
    certificate_dumps,
    certificate_from_dict,
    certificate_loads,
    certificate_to_dict,
    has_immersion_with_ends,
    immerse_dense,
    immersion_tightness,
    matching_complement,
    random_graph,
    sigma_exhaustive,
    star_of_clique,
    subdivide_dense,
    verify_immersion,
    verify_subdivision,
)

from conftest import complete_graph, cycle_graph


def k5_minus_edge():
    return Graph.from_edge_list(
        5, [(u, v) for u in range(5) for v in range(u + 1, 5) if (u, v) != (0, 1)]
    )


# -- immerse_dense ------------------------------------------------------------


def test_immerse_dense_complete_graph_uses_direct_edges():
    cert = immerse_dense(complete_graph(5), range(5))
    assert len(cert.paths) == 10
    assert all(len(route) == 2 for route in cert.paths.values())
    assert verify_immersion(complete_graph(5), cert, "strong")


def test_immerse_dense_reroutes_missing_pair():
    g = k5_minus_edge()
    cert = immerse_dense(g, [0, 1, 2])
    assert cert.paths[(0, 1)] == (0, 3, 1)  # lowest-index helper vertex
    assert cert.paths[(0, 2)] == (0, 2)
    assert cert.paths[(1, 2)] == (1, 2)
    assert verify_immersion(g, cert, "strong")


def test_immerse_dense_rejects_tightness_terminal():
    g, terminals = immersion_tightness(10, 4)
    with pytest.raises(PreconditionViolation, match="terminal 0"):
        immerse_dense(g, terminals)


def test_immerse_dense_singleton_terminal_set():
    cert = immerse_dense(complete_graph(3), [1])
    assert cert.paths == {}
    assert verify_immersion(complete_graph(3), cert, "strong")


# -- subdivide_dense -----------------------------------------------------------


def test_subdivide_dense_complete_graph():
    cert = subdivide_dense(complete_graph(6), [0, 2, 3, 5])
    assert all(len(route) == 2 for route in cert.paths.values())
    assert verify_subdivision(complete_graph(6), cert)


def test_subdivide_dense_matching_complement_cases():
    mc8 = matching_complement(8)
    cert = subdivide_dense(mc8, [0, 1, 2, 4])
    assert cert.paths[(0, 1)] == (0, 3, 1)
    assert verify_subdivision(mc8, cert)
    cert = subdivide_dense(mc8, [0, 1, 2, 3])  # 2 missing <= 8 - 4 - 2
    assert cert.paths[(0, 1)] == (0, 4, 1)
    assert cert.paths[(2, 3)] == (2, 5, 3)
    assert verify_subdivision(mc8, cert)


def test_subdivide_dense_rejects_with_instantiated_inequality():
    g, _ = immersion_tightness(10, 4)  # max missing degree 4, hopeless budget
    with pytest.raises(PreconditionViolation, match=r"n - t - 2\*Delta"):
        subdivide_dense(g, [0, 1, 2, 3])


# -- verifiers -----------------------------------------------------------------


def test_verifier_reports_shared_edge():
    g = complete_graph(4)
    cert = ImmersionCertificate(
        frozenset([0, 1, 2]),
        {(0, 1): (0, 3, 1), (0, 2): (0, 3, 2), (1, 2): (1, 3, 2)},
    )
    # every pair routes through vertex 3: edges (0,3) etc. are fine, but
    # (1,3) appears in both the (0,1) and (1,2) routes
    result = verify_immersion(g, cert, "weak")
    assert not result
    assert any("(1, 3)" in v for v in result.violations)


def test_verifier_strong_vs_weak_internal_terminal():
    # the (0, 1) route passes through terminal 2 on fresh edges, so only
    # the strong check objects
    g = complete_graph(5)
    cert = ImmersionCertificate(
        frozenset([0, 1, 2]),
        {(0, 1): (0, 4, 2, 3, 1), (0, 2): (0, 2), (1, 2): (1, 2)},
    )
    assert verify_immersion(g, cert, "weak")
    strong = verify_immersion(g, cert, "strong")
    assert not strong
    assert any("terminals" in v for v in strong.violations)


def test_verifier_missing_and_foreign_pairs():
    g = complete_graph(4)
    cert = ImmersionCertificate(frozenset([0, 1, 2]), {(0, 3): (0, 3)})
    result = verify_immersion(g, cert, "weak")
    assert not result
    assert any("not a terminal pair" in v for v in result.violations)
    assert sum("no path for terminal pair" in v for v in result.violations) == 3


def test_verifier_rejects_broken_routes():
    g = cycle_graph(5)
    bad_endpoint = ImmersionCertificate(frozenset([0, 1]), {(0, 1): (0, 2)})
    assert not verify_immersion(g, bad_endpoint, "weak")
    non_edge = ImmersionCertificate(frozenset([0, 2]), {(0, 2): (0, 2)})
    result = verify_immersion(g, non_edge, "weak")
    assert any("non-edge" in v for v in result.violations)
    repeated = ImmersionCertificate(frozenset([0, 2]), {(0, 2): (0, 1, 0, 1, 2)})
    assert not verify_immersion(g, repeated, "weak")


def test_subdivision_certificate_is_strong_immersion():
    mc8 = matching_complement(8)
    cert = subdivide_dense(mc8, [0, 1, 2, 3])
    assert verify_immersion(mc8, cert, "strong")
    assert verify_immersion(mc8, cert, "weak")


def test_verify_subdivision_rejects_shared_internal():
    g = matching_complement(8)
    cert = subdivide_dense(g, [0, 1, 2, 3])
    tampered = dict(cert.paths)
    tampered[(2, 3)] = (2, 4, 3)  # reuse internal vertex 4 from the (0,1) route
    from clique_extremal import SubdivisionCertificate

    bad = SubdivisionCertificate(cert.branch_vertices, tampered)
    result = verify_subdivision(g, bad)
    assert not result
    assert any("internal vertex 4" in v for v in result.violations)
    # as a plain strong immersion the tampered routes are still edge-disjoint
    assert verify_immersion(g, bad, "strong")


# -- exhaustive searches -------------------------------------------------------


def test_sigma_spot_values():
    assert sigma_exhaustive(cycle_graph(5)) == 3
    assert sigma_exhaustive(complete_graph(5)) == 5
    assert sigma_exhaustive(matching_complement(8)) == 6
    path = Graph.from_edge_list(3, [(0, 1), (1, 2)])
    assert sigma_exhaustive(path) == 2
    claw = Graph.from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
    assert sigma_exhaustive(claw) == 2
    assert sigma_exhaustive(Graph.from_edge_list(3, [])) == 1
    assert sigma_exhaustive(Graph.from_edge_list(0, [])) == 0


def test_sigma_star_of_clique():
    # pendants can never route around each other: sigma sticks at t - 2 + 2
    assert sigma_exhaustive(star_of_clique(10, 5)) == 4


def test_sigma_guard():
    with pytest.raises(GuardExceeded):
        sigma_exhaustive(Graph.from_edge_list(15, []))
    assert sigma_exhaustive(Graph.from_edge_list(15, []), limit_n=15) == 1


def test_sigma_subdivision_needs_long_paths():
    # K4 subdivided: each edge replaced by a path of length 2; only the
    # branch vertices have degree 3, and routing needs the length-2 paths
    edges = []
    internal = 4
    for u in range(4):
        for v in range(u + 1, 4):
            edges.extend([(u, internal), (internal, v)])
            internal += 1
    g = Graph.from_edge_list(internal, edges)
    assert sigma_exhaustive(g) == 4


def test_has_immersion_with_ends_tightness():
    for n, t in [(8, 4), (10, 4)]:
        g, terminals = immersion_tightness(n, t)
        assert not has_immersion_with_ends(g, terminals, strong=True)
        assert has_immersion_with_ends(g, terminals, strong=False)


def test_has_immersion_with_ends_dense_graph():
    g = Graph.from_edge_list(
        6, [(u, v) for u in range(6) for v in range(u + 1, 6) if (u, v) != (0, 1)]
    )
    assert has_immersion_with_ends(g, [0, 1, 2, 3], strong=True)


def test_has_immersion_with_ends_degenerate_and_guard():
    assert has_immersion_with_ends(complete_graph(3), [2])
    assert has_immersion_with_ends(complete_graph(3), [])
    with pytest.raises(GuardExceeded):
        has_immersion_with_ends(Graph.from_edge_list(13, []), [0, 1])


def test_embedder_soundness_random_suite():
    checked = 0
    for k in range(60):
        rng = random.Random(f"unit-immersion:{k}")
        n = rng.randint(8, 14)
        t = rng.randint(3, n - 4)
        g = random_graph(n, rng.uniform(0.7, 0.95), rng.randrange(2 ** 32))
        terminals = sorted(range(n), key=lambda v: (g.missing_degree(v), v))[:t]
        if not all(2 * g.missing_degree(v) < n - t + 2 for v in terminals):
            continue
        cert = immerse_dense(g, terminals)
        assert verify_immersion(g, cert, "strong")
        assert all(len(route) <= 3 for route in cert.paths.values())
        checked += 1
    assert checked >= 30


def test_subdivider_soundness_random_suite():
    checked = 0
    for k in range(60):
        rng = random.Random(f"unit-subdivision:{k}")
        n = rng.randint(8, 14)
        t = rng.randint(3, 6)
        g = random_graph(n, rng.uniform(0.85, 0.98), rng.randrange(2 ** 32))
        budget = n - t - 2 * g.max_missing_degree()
        terminals = sorted(range(n), key=lambda v: (g.missing_degree(v), v))[:t]
        if budget < 0 or g.missing_edges_within(terminals) > budget:
            continue
        cert = subdivide_dense(g, terminals)
        assert verify_subdivision(g, cert)
        checked += 1
    assert checked >= 30


# -- serialization -------------------------------------------------------------


def test_certificate_json_round_trip():
    mc8 = matching_complement(8)
    cert = subdivide_dense(mc8, [0, 1, 2, 3])
    data = certificate_to_dict(cert)
    assert data["kind"] == "subdivision"
    assert data["terminals"] == [0, 1, 2, 3]
    back = certificate_from_dict(data)
    assert back.paths == cert.paths
    assert back.branch_vertices == cert.branch_vertices
    assert verify_subdivision(mc8, certificate_loads(certificate_dumps(cert)))


def test_certificate_json_schema_shape():
    cert = immerse_dense(k5_minus_edge(), [0, 1, 2])
    data = certificate_to_dict(cert)
    assert data["kind"] == "strong_immersion"
    assert data["paths"][0] == {"ends": [0, 1], "route": [0, 3, 1]}


def test_certificate_json_errors():
    with pytest.raises(FormatError):
        certificate_loads("not json")
    with pytest.raises(FormatError):
        certificate_from_dict({"kind": "nonsense", "terminals": [], "paths": []})
    with pytest.raises(FormatError):
        certificate_from_dict({"kind": "subdivision", "terminals": []})
