"""Immutable simple graphs with bitset adjacency rows.

Vertices are dense indices 0..n-1 and every adjacency row is a Python int
used as a bitset, so neighbourhood queries are mask intersections and
popcounts. Graphs never mutate after construction; algorithms that "delete"
vertices carry a residual mask instead.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

__all__ = ["Graph", "vertex_mask", "iter_bits"]


def vertex_mask(vertices: Iterable[int], n: int) -> int:
    """Bitset of the given vertices, validating the 0..n-1 range."""
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for a graph on {n} vertices")
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph. Rows must be symmetric and irreflexive;
    the public constructors guarantee that."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, adjacency_rows: Iterable[int]):
        self.n = n
        self._adj = tuple(adjacency_rows)
        if len(self._adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(self._adj)}")

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Graph with exactly the listed edges; duplicates collapse.

        Rejects endpoints outside 0..n-1 and self-loops, naming the
        offending pair.
        """
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop ({u}, {v}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint out of range for n = {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    # -- basic queries ----------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def missing_degree(self, v: int) -> int:
        """Number of missing edges incident to v, i.e. n - 1 - degree(v)."""
        return self.n - 1 - self._adj[v].bit_count()

    def max_missing_degree(self) -> int:
        if self.n == 0:
            raise ValueError("max_missing_degree is undefined on the empty graph")
        return max(self.missing_degree(v) for v in range(self.n))

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("min_degree is undefined on the empty graph")
        return min(self.degree(v) for v in range(self.n))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self._adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ordered pairs u < v, lexicographic."""
        for u in range(self.n):
            higher = self._adj[u] >> (u + 1) << (u + 1)
            for v in iter_bits(higher):
                yield u, v

    # -- derived graphs ---------------------------------------------------

    def complement(self) -> "Graph":
        full = self.full_mask
        return Graph(self.n, (full & ~row & ~(1 << v) for v, row in enumerate(self._adj)))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Relabelled induced subgraph plus the map new index -> old vertex."""
        keep = sorted(set(vertices))
        vertex_mask(keep, self.n)
        index = {old: new for new, old in enumerate(keep)}
        rows = [0] * len(keep)
        for old in keep:
            new = index[old]
            for w in iter_bits(self._adj[old]):
                if w in index:
                    rows[new] |= 1 << index[w]
        return Graph(len(keep), rows), tuple(keep)

    # -- subset queries ---------------------------------------------------

    def missing_edges_within(self, vertices: Iterable[int]) -> int:
        """Number of non-adjacent unordered pairs inside the vertex set."""
        return self.missing_edges_within_mask(vertex_mask(vertices, self.n))

    def missing_edges_within_mask(self, mask: int) -> int:
        full = self.full_mask
        count = 0
        for v in iter_bits(mask):
            non_neighbours = full & ~self._adj[v] & ~(1 << v)
            count += (non_neighbours & (mask >> (v + 1) << (v + 1))).bit_count()
        return count

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"
