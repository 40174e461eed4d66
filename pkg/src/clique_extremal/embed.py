"""Immersion and subdivision certificates: constructive embedders for the
dense regimes, certificate verifiers, and exhaustive desk-scale searches.

A certificate is a terminal set plus one explicit path per terminal pair.
Weak immersions need pairwise edge-disjoint paths; strong immersions
additionally keep internal vertices off the terminals; subdivisions are
strong immersions whose paths are internally vertex-disjoint.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

from .errors import FormatError, PreconditionViolation
from .graph import Graph, iter_bits, vertex_mask
from .limits import IMMERSION_MAX_N, SIGMA_MAX_N, check_guard

__all__ = [
    "ImmersionCertificate",
    "SubdivisionCertificate",
    "VerificationResult",
    "immerse_dense",
    "subdivide_dense",
    "verify_immersion",
    "verify_subdivision",
    "sigma_exhaustive",
    "has_immersion_with_ends",
    "certificate_to_dict",
    "certificate_from_dict",
    "certificate_dumps",
    "certificate_loads",
]

KIND_STRONG = "strong_immersion"
KIND_WEAK = "weak_immersion"
KIND_SUBDIVISION = "subdivision"


@dataclass
class ImmersionCertificate:
    terminals: frozenset[int]
    paths: dict[tuple[int, int], tuple[int, ...]]
    kind: str = KIND_STRONG


@dataclass
class SubdivisionCertificate:
    branch_vertices: frozenset[int]
    paths: dict[tuple[int, int], tuple[int, ...]]
    kind: str = KIND_SUBDIVISION

    @property
    def terminals(self) -> frozenset[int]:
        return self.branch_vertices


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    violations: tuple[str, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.ok


# -- constructive embedders ---------------------------------------------------


def immerse_dense(g: Graph, terminals: Iterable[int]) -> ImmersionCertificate:
    """Strong immersion of a complete graph with the given end vertices,
    using only paths of length one or two.

    Requires every terminal to have missing degree strictly below
    (n - t + 2) / 2. Missing terminal pairs are processed in lexicographic
    order over an edge-availability overlay; each gets the lowest-indexed
    outside vertex whose two connecting edges are still free. The counting
    behind the precondition guarantees such a vertex exists.
    """
    t_set = sorted(set(terminals))
    t_mask = vertex_mask(t_set, g.n)
    n, t = g.n, len(t_set)
    for v in t_set:
        if 2 * g.missing_degree(v) >= n - t + 2:
            raise PreconditionViolation(
                f"terminal {v} has missing degree {g.missing_degree(v)}, "
                f"needs < (n - t + 2)/2 = {(n - t + 2) / 2}"
            )
    avail = [g.adjacency_mask(v) for v in range(n)]
    outside = g.full_mask & ~t_mask
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for u, v in combinations(t_set, 2):
        if g.has_edge(u, v):
            paths[(u, v)] = (u, v)
    for u, v in combinations(t_set, 2):
        if g.has_edge(u, v):
            continue
        candidates = avail[u] & avail[v] & outside
        if not candidates:
            raise AssertionError(f"no free common neighbour left for pair ({u}, {v})")
        w = (candidates & -candidates).bit_length() - 1
        avail[u] &= ~(1 << w)
        avail[w] &= ~(1 << u)
        avail[v] &= ~(1 << w)
        avail[w] &= ~(1 << v)
        paths[(u, v)] = (u, w, v)
    return ImmersionCertificate(frozenset(t_set), paths, KIND_STRONG)


def subdivide_dense(g: Graph, terminals: Iterable[int]) -> SubdivisionCertificate:
    """Subdivision of a complete graph with the given branch vertices, using
    only paths of length one or two.

    With D the maximum missing degree of g (so the minimum degree is
    n - D - 1 by definition), requires at most n - t - 2D missing edges
    inside the terminal set. Missing pairs are processed in lexicographic
    order, each greedily taking the lowest-indexed unused common neighbour
    outside the terminals.
    """
    t_set = sorted(set(terminals))
    t_mask = vertex_mask(t_set, g.n)
    n, t = g.n, len(t_set)
    delta = g.max_missing_degree() if n else 0
    missing = g.missing_edges_within_mask(t_mask)
    budget = n - t - 2 * delta
    if missing > budget:
        raise PreconditionViolation(
            f"{missing} missing edges inside the terminal set exceed "
            f"n - t - 2*Delta = {n} - {t} - 2*{delta} = {budget}"
        )
    outside = g.full_mask & ~t_mask
    used = 0
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for u, v in combinations(t_set, 2):
        if g.has_edge(u, v):
            paths[(u, v)] = (u, v)
            continue
        candidates = g.adjacency_mask(u) & g.adjacency_mask(v) & outside & ~used
        if not candidates:
            raise AssertionError(f"no unused common neighbour left for pair ({u}, {v})")
        w = (candidates & -candidates).bit_length() - 1
        used |= 1 << w
        paths[(u, v)] = (u, w, v)
    return SubdivisionCertificate(frozenset(t_set), paths, KIND_SUBDIVISION)


# -- verifiers ----------------------------------------------------------------


def _check_paths(g: Graph, cert, strong: bool) -> list[str]:
    violations: list[str] = []
    terminals = sorted(cert.terminals)
    for v in terminals:
        if not 0 <= v < g.n:
            violations.append(f"terminal {v} out of range")
            return violations
    expected = {tuple(sorted(p)) for p in combinations(terminals, 2)}
    seen_pairs: set[tuple[int, int]] = set()
    edge_owner: dict[frozenset[int], tuple[int, int]] = {}
    for raw_pair, route in sorted(cert.paths.items()):
        pair = tuple(sorted(raw_pair))
        if pair in seen_pairs:
            violations.append(f"duplicate path for pair {pair}")
            continue
        seen_pairs.add(pair)
        if pair not in expected:
            violations.append(f"path for {pair} which is not a terminal pair")
            continue
        if len(route) < 2 or {route[0], route[-1]} != set(pair):
            violations.append(f"route for {pair} does not join its endpoints: {route}")
            continue
        if any(not 0 <= v < g.n for v in route):
            violations.append(f"route for {pair} leaves the vertex range: {route}")
            continue
        if len(set(route)) != len(route):
            violations.append(f"route for {pair} repeats a vertex: {route}")
            continue
        for a, b in zip(route, route[1:]):
            if not g.has_edge(a, b):
                violations.append(f"route for {pair} uses a non-edge ({a}, {b})")
        for a, b in zip(route, route[1:]):
            edge = frozenset((a, b))
            if edge in edge_owner:
                violations.append(
                    f"edge ({min(edge)}, {max(edge)}) used by both {edge_owner[edge]} and {pair}"
                )
            else:
                edge_owner[edge] = pair
        if strong:
            bad = [v for v in route[1:-1] if v in cert.terminals]
            if bad:
                violations.append(f"route for {pair} passes through terminals {bad}")
    for pair in sorted(expected - seen_pairs):
        violations.append(f"no path for terminal pair {pair}")
    return violations


def verify_immersion(g: Graph, cert, mode: str = "strong") -> VerificationResult:
    """Check all immersion certificate invariants; violations are reported,
    never raised. Accepts subdivision certificates as well (a subdivision is
    in particular a strong immersion)."""
    if mode not in ("weak", "strong"):
        raise ValueError(f"mode must be 'weak' or 'strong', got {mode!r}")
    violations = _check_paths(g, cert, strong=(mode == "strong"))
    return VerificationResult(not violations, tuple(violations))


def verify_subdivision(g: Graph, cert) -> VerificationResult:
    """Strong immersion checks plus internal vertex disjointness."""
    violations = _check_paths(g, cert, strong=True)
    internal_owner: dict[int, tuple[int, int]] = {}
    for raw_pair, route in sorted(cert.paths.items()):
        pair = tuple(sorted(raw_pair))
        for v in route[1:-1]:
            if v in internal_owner:
                violations.append(
                    f"internal vertex {v} shared by {internal_owner[v]} and {pair}"
                )
            else:
                internal_owner[v] = pair
    return VerificationResult(not violations, tuple(violations))


# -- exhaustive searches ------------------------------------------------------


def _reachable(adj: tuple[int, ...], u: int, v: int, pool: int) -> bool:
    allowed = pool | (1 << v)
    reached = 1 << u
    frontier = 1 << u
    while frontier:
        grown = 0
        for w in iter_bits(frontier):
            grown |= adj[w]
        frontier = grown & allowed & ~reached
        if frontier >> v & 1:
            return True
        reached |= frontier
    return False


def _match_length_two(adj: tuple[int, ...], pairs: list[tuple[int, int]], pool: int) -> bool:
    """Can every pair take a distinct common neighbour from the pool?"""
    cands = [adj[u] & adj[v] & pool for u, v in pairs]
    matched: dict[int, int] = {}

    def assign(i: int, banned: list[int]) -> bool:
        free = cands[i] & ~banned[0]
        for w in iter_bits(free):
            banned[0] |= 1 << w
            j = matched.get(w)
            if j is None or assign(j, banned):
                matched[w] = i
                return True
        return False

    return all(assign(i, [0]) for i in range(len(pairs)))


def _internal_sets(adj: tuple[int, ...], u: int, v: int, avail: int) -> Iterator[int]:
    """Masks of internal vertex sets of simple u-v paths with internals
    drawn from ``avail``, by increasing path length, each set once."""
    limit = avail.bit_count()
    for k in range(1, limit + 1):
        seen: set[int] = set()

        def walk(cur: int, used: int, remaining: int) -> Iterator[int]:
            if remaining == 0:
                if adj[cur] >> v & 1 and used not in seen:
                    seen.add(used)
                    yield used
                return
            for w in iter_bits(adj[cur] & avail & ~used):
                yield from walk(w, used | (1 << w), remaining - 1)

        yield from walk(u, 0, k)


def _route_internally_disjoint(
    adj: tuple[int, ...], missing: list[tuple[int, int]], pool: int
) -> bool:
    for u, v in missing:
        if not _reachable(adj, u, v, pool):
            return False
    if _match_length_two(adj, missing, pool):
        return True
    order = sorted(missing, key=lambda p: ((adj[p[0]] & adj[p[1]] & pool).bit_count(), p))
    dead: set[tuple[int, int]] = set()

    def assign(idx: int, avail: int) -> bool:
        if idx == len(order):
            return True
        key = (idx, avail)
        if key in dead:
            return False
        u, v = order[idx]
        for used in _internal_sets(adj, u, v, avail):
            if assign(idx + 1, avail & ~used):
                return True
        dead.add(key)
        return False

    return assign(0, pool)


def sigma_exhaustive(g: Graph, limit_n: int | None = None) -> int:
    """Exact clique subdivision number: the largest h such that some h-set of
    branch vertices can be joined by internally vertex-disjoint paths whose
    internal vertices avoid the branch set.

    Branch sets are scanned for descending h with degree pruning (a branch
    vertex needs degree at least h - 1); path packing is exhaustive with a
    fast distinct-common-neighbour pass first, so paths of any length count.
    """
    check_guard("sigma_exhaustive", g.n, SIGMA_MAX_N, limit_n)
    n = g.n
    if n == 0:
        return 0
    adj = tuple(g.adjacency_mask(v) for v in range(n))
    degrees = sorted((g.degree(v) for v in range(n)), reverse=True)
    h_max = 1
    for h in range(n, 1, -1):
        if degrees[h - 1] >= h - 1:
            h_max = h
            break
    full = g.full_mask
    for h in range(h_max, 1, -1):
        candidates = [v for v in range(n) if g.degree(v) >= h - 1]
        if len(candidates) < h:
            continue
        for branch in combinations(candidates, h):
            b_mask = vertex_mask(branch, n)
            missing = [
                (u, v) for u, v in combinations(branch, 2) if not g.has_edge(u, v)
            ]
            if not missing:
                return h
            if _route_internally_disjoint(adj, missing, full & ~b_mask):
                return h
    return 1


def has_immersion_with_ends(
    g: Graph,
    terminals: Iterable[int],
    strong: bool = True,
    limit_n: int | None = None,
) -> bool:
    """Exact decision: is there an immersion of a complete graph with exactly
    the given end vertices?

    Packs edge-disjoint paths over the missing terminal pairs by exhaustive
    backtracking. Adjacent terminal pairs always use their direct edge (a
    rerouting exchange shows this loses nothing). In strong mode the internal
    vertices are restricted to non-terminals; weak mode lifts only that
    restriction.
    """
    check_guard("has_immersion_with_ends", g.n, IMMERSION_MAX_N, limit_n)
    t_set = sorted(set(terminals))
    t_mask = vertex_mask(t_set, g.n)
    if len(t_set) <= 1:
        return True
    n = g.n
    avail = [g.adjacency_mask(v) for v in range(n)]
    missing: list[tuple[int, int]] = []
    for u, v in combinations(t_set, 2):
        if g.has_edge(u, v):
            avail[u] &= ~(1 << v)
            avail[v] &= ~(1 << u)
        else:
            missing.append((u, v))
    if not missing:
        return True
    internal_ok = g.full_mask & ~t_mask if strong else g.full_mask

    def edge_paths(u: int, v: int) -> Iterator[tuple[int, ...]]:
        allowed = internal_ok & ~(1 << u) & ~(1 << v)
        for k in range(1, n - 1):

            def walk(cur: int, used: int, route: tuple[int, ...], remaining: int) -> Iterator[tuple[int, ...]]:
                if remaining == 0:
                    if avail[cur] >> v & 1:
                        yield route + (v,)
                    return
                for w in iter_bits(avail[cur] & allowed & ~used):
                    yield from walk(w, used | (1 << w), route + (w,), remaining - 1)

            yield from walk(u, 1 << u, (u,), k)

    def consume(route: tuple[int, ...]) -> None:
        for a, b in zip(route, route[1:]):
            avail[a] &= ~(1 << b)
            avail[b] &= ~(1 << a)

    def restore(route: tuple[int, ...]) -> None:
        for a, b in zip(route, route[1:]):
            avail[a] |= 1 << b
            avail[b] |= 1 << a

    def pack(idx: int) -> bool:
        if idx == len(missing):
            return True
        u, v = missing[idx]
        for route in edge_paths(u, v):
            consume(route)
            if pack(idx + 1):
                return True
            restore(route)
        return False

    return pack(0)


# -- serialization ------------------------------------------------------------


def certificate_to_dict(cert) -> dict:
    return {
        "kind": cert.kind,
        "terminals": sorted(cert.terminals),
        "paths": [
            {"ends": list(pair), "route": list(route)}
            for pair, route in sorted((tuple(sorted(p)), r) for p, r in cert.paths.items())
        ],
    }


def certificate_from_dict(data: dict):
    try:
        kind = data["kind"]
        terminals = frozenset(int(v) for v in data["terminals"])
        paths: dict[tuple[int, int], tuple[int, ...]] = {}
        for entry in data["paths"]:
            u, v = (int(x) for x in entry["ends"])
            pair = (u, v) if u < v else (v, u)
            if pair in paths:
                raise FormatError(f"duplicate path entry for pair {pair}")
            paths[pair] = tuple(int(x) for x in entry["route"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed certificate: {exc}") from exc
    if kind == KIND_SUBDIVISION:
        return SubdivisionCertificate(terminals, paths)
    if kind in (KIND_STRONG, KIND_WEAK):
        return ImmersionCertificate(terminals, paths, kind)
    raise FormatError(f"unknown certificate kind {kind!r}")


def certificate_dumps(cert) -> str:
    return json.dumps(certificate_to_dict(cert), indent=2) + "\n"


def certificate_loads(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"certificate is not valid JSON: {exc}") from exc
    return certificate_from_dict(data)
