"""Deterministic generators for the extremal families and seeded random graphs."""

from __future__ import annotations

import random

from .graph import Graph

__all__ = [
    "star_of_clique",
    "matching_complement",
    "disjoint_union_matching_complements",
    "immersion_tightness",
    "random_graph",
]


def star_of_clique(n: int, t: int) -> Graph:
    """Clique on vertices 0..t-3 plus n-t+2 pendant vertices adjacent to
    exactly that clique. Has 2^(t-2) * (n-t+3) cliques including the empty
    one and no immersion of a clique on t vertices."""
    if t < 3 or n < t - 2:
        raise ValueError(f"star_of_clique needs n >= t - 2 >= 1, got n = {n}, t = {t}")
    core = t - 2
    core_mask = (1 << core) - 1
    rows = []
    for v in range(n):
        if v < core:
            rows.append((core_mask & ~(1 << v)) | (((1 << n) - 1) ^ core_mask))
        else:
            rows.append(core_mask)
    return Graph(n, rows)


def matching_complement(n: int) -> Graph:
    """Complete graph on n vertices minus the perfect matching (2i, 2i+1).
    Every vertex misses exactly one edge; there are 3^(n/2) cliques
    including the empty one."""
    if n < 2 or n % 2:
        raise ValueError(f"matching_complement needs even n >= 2, got {n}")
    full = (1 << n) - 1
    return Graph(n, (full & ~(1 << v) & ~(1 << (v ^ 1)) for v in range(n)))


def _matching_block_size(t: int) -> int:
    """Largest even integer strictly below 4t/3."""
    b = (4 * t - 1) // 3
    if b % 2:
        b -= 1
    return b


def disjoint_union_matching_complements(n: int, t: int) -> Graph:
    """Disjoint union of matching complements, each block small enough that
    no block contains a subdivision of a clique on t vertices.

    Blocks have the largest even size strictly below 4t/3; an even remainder
    becomes a final smaller block.
    """
    if t < 2:
        raise ValueError(f"disjoint_union_matching_complements needs t >= 2, got t = {t}")
    if n % 2:
        raise ValueError(f"even n required to split into matching complements, got n = {n}")
    if 3 * n < 4 * t:
        raise ValueError(f"need n >= 4t/3, got n = {n}, t = {t}")
    block = _matching_block_size(t)
    sizes = [block] * (n // block)
    if n % block:
        sizes.append(n % block)
    edges = []
    offset = 0
    for size in sizes:
        for u in range(size):
            for v in range(u + 1, size):
                if u ^ 1 != v:
                    edges.append((offset + u, offset + v))
        offset += size
    return Graph.from_edge_list(n, edges)


def immersion_tightness(n: int, t: int) -> tuple[Graph, frozenset[int]]:
    """Sharpness example for the dense immersion embedder.

    Vertices 0..t-1 form the designated set T with the single missing pair
    (0, 1); the rest splits into two cliques S1, S2 of size (n-t)/2 with no
    edges between them, S1 complete to T minus {1} and S2 complete to
    T minus {0}. The maximum missing degree is (n-t)/2 + 1 and there is no
    strong immersion of a t-clique with T as end vertices, though a weak
    one exists. Returns the graph and T.
    """
    if t < 2:
        raise ValueError(f"immersion_tightness needs t >= 2, got t = {t}")
    if n <= t or (n - t) % 2:
        raise ValueError(f"immersion_tightness needs n - t even and positive, got n = {n}, t = {t}")
    half = (n - t) // 2
    s1 = range(t, t + half)
    s2 = range(t + half, n)
    edges = []
    for u in range(t):
        for v in range(u + 1, t):
            if (u, v) != (0, 1):
                edges.append((u, v))
    for block in (s1, s2):
        for u in block:
            for v in block:
                if u < v:
                    edges.append((u, v))
    for w in s1:
        edges.extend((term, w) for term in range(t) if term != 1)
    for w in s2:
        edges.extend((term, w) for term in range(t) if term != 0)
    return Graph.from_edge_list(n, edges), frozenset(range(t))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi sample G(n, p), deterministic for a fixed seed."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edge_list(n, edges)
