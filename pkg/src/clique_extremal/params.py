"""Extremal parameters: minimum missing-edge counts over t-sets, the
parameter t(G), and the missing-degree bounds tied to subdivisions.

All bound values are exact rationals; the subset searches are exact with a
branch-and-bound over the complement graph and a size guard.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, iter_bits
from .limits import SUBSET_MAX_N, check_guard

__all__ = [
    "ParamReport",
    "min_tset_missing",
    "tset_missing_upper_estimate",
    "t_param",
    "delta_lower_bound",
    "delta_threshold_no_subdivision",
]


@dataclass(frozen=True)
class ParamReport:
    """t(G) with a witness set, the maximum missing degree, and the implied
    sandwich for the clique subdivision number."""

    t_param: int
    witness: frozenset[int]
    delta: int
    sigma_lower: int
    sigma_upper: int


class _Found(Exception):
    pass


def min_tset_missing(
    g: Graph,
    t: int,
    limit_n: int | None = None,
    stop_at: int | None = None,
) -> tuple[int, frozenset[int]]:
    """Minimum number of missing edges over all t-subsets, with a witness.

    Branch and bound on the complement: vertices are tried in ascending
    complement-degree order, a branch is cut once its partial missing count
    plus a cheap completion bound cannot beat the incumbent. ``stop_at``
    ends the search as soon as a subset with at most that many missing
    edges is known (used by threshold queries).
    """
    n = g.n
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t = {t}, n = {n}")
    check_guard("min_tset_missing", n, SUBSET_MAX_N, limit_n)
    comp = tuple(g.complement().adjacency_mask(v) for v in range(n))
    order = sorted(range(n), key=lambda v: (comp[v].bit_count(), v))

    best_mask = 0
    best = 0
    for v in order[:t]:
        best += (comp[v] & best_mask).bit_count()
        best_mask |= 1 << v
    state = [best, best_mask]
    if stop_at is not None and best <= stop_at:
        return best, frozenset(iter_bits(best_mask))

    def completion_bound(i: int, chosen: int, slots: int) -> int:
        if slots <= 0:
            return 0
        margins = sorted((comp[order[j]] & chosen).bit_count() for j in range(i, n))
        return sum(margins[:slots])

    def descend(i: int, k: int, cur: int, chosen: int) -> None:
        if cur >= state[0]:
            return
        if k == t:
            state[0] = cur
            state[1] = chosen
            if stop_at is not None and cur <= stop_at:
                raise _Found
            return
        if n - i < t - k:
            return
        if cur + completion_bound(i, chosen, t - k) >= state[0]:
            return
        v = order[i]
        descend(i + 1, k + 1, cur + (comp[v] & chosen).bit_count(), chosen | (1 << v))
        descend(i + 1, k, cur, chosen)

    try:
        descend(0, 0, 0, 0)
    except _Found:
        pass
    return state[0], frozenset(iter_bits(state[1]))


def tset_missing_upper_estimate(g: Graph, t: int) -> int:
    """Averaging upper bound on min_tset_missing: some t-set misses at most
    total_missing * C(t,2) / C(n,2) edges. Not exact, usable beyond the
    subset-search guard."""
    n = g.n
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t = {t}, n = {n}")
    if n < 2 or t < 2:
        return 0
    total_missing = n * (n - 1) // 2 - g.num_edges
    return total_missing * (t * (t - 1)) // (n * (n - 1))


def t_param(g: Graph, limit_n: int | None = None) -> ParamReport:
    """Largest t admitting a t-set with at most n - t missing edges inside,
    plus the witness and the sandwich t - Delta <= sigma <= t."""
    n = g.n
    if n == 0:
        raise ValueError("t_param is undefined on the empty graph")
    check_guard("t_param", n, SUBSET_MAX_N, limit_n)
    delta = g.max_missing_degree()
    for t in range(n, 0, -1):
        value, witness = min_tset_missing(g, t, limit_n=limit_n, stop_at=n - t)
        if value <= n - t:
            return ParamReport(t, witness, delta, t - delta, t)
    raise AssertionError("unreachable: t = 1 always qualifies")


def delta_lower_bound(n: int, x: int, t: int) -> Fraction:
    """If every t-set of an n-vertex graph misses at least x edges, the
    maximum missing degree is at least 2nx/t^2 (exact rational)."""
    if t == 0:
        raise ValueError("t must be positive")
    if n < t:
        raise ValueError(f"need n >= t, got n = {n}, t = {t}")
    return Fraction(2 * n * x, t * t)


def delta_threshold_no_subdivision(n: int, t: int) -> Fraction:
    """Averaging threshold 2(n-t)(n-1) / (4(n-1) + t(t-1)).

    Any n-vertex graph without a subdivision of a t-clique has maximum
    missing degree strictly greater than this value: otherwise some t-set
    would miss few enough edges for the dense subdivision embedder.
    """
    if n < 2:
        raise ValueError(f"threshold undefined for n < 2, got n = {n}")
    if t > n:
        raise ValueError(f"need t <= n, got t = {t}, n = {n}")
    return Fraction(2 * (n - t) * (n - 1), 4 * (n - 1) + t * (t - 1))
