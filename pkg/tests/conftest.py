"""Shared brute-force oracles for the tests.

These deliberately reimplement the quantities from their definitions with
plain subset enumeration, independent of the library's search strategies.
"""

from itertools import combinations

from clique_extremal import Graph


def brute_count_cliques(g: Graph) -> tuple[int, int]:
    """(number of cliques including the empty one, clique number) by
    checking every vertex subset. Only sensible for n <= 16."""
    n = g.n
    count = 0
    omega = 0
    for mask in range(1 << n):
        members = [v for v in range(n) if mask >> v & 1]
        if all(g.has_edge(u, v) for u, v in combinations(members, 2)):
            count += 1
            omega = max(omega, len(members))
    return count, omega


def brute_min_tset_missing(g: Graph, t: int) -> int:
    return min(g.missing_edges_within(subset) for subset in combinations(range(g.n), t))


def brute_t_param(g: Graph) -> int:
    best = 0
    for t in range(1, g.n + 1):
        if brute_min_tset_missing(g, t) <= g.n - t:
            best = t
    return best


def complete_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edge_list(n, [(v, (v + 1) % n) for v in range(n)])
