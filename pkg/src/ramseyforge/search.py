"""Small exact Ramsey numbers and size-Ramsey bounds with verified witnesses."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .arrow import ArrowResult, arrows
from .constructions import (
    SteinerParams,
    blowup_path_host,
    clique,
    clique_hypergraph,
    ell_path,
    find_ell_tree_order,
    greedy_partial_steiner,
)
from .errors import CapsTooSmallError
from .hypergraph import EdgeColoring, KUniformHypergraph, are_isomorphic

ALL_STRATEGIES = ("clique-host", "steiner-host", "blowup-host", "random-host")


@dataclass
class SizeRamseyBound:
    pattern: KUniformHypergraph
    lower: int
    upper: Optional[int]
    witness_host: Optional[KUniformHypergraph]
    witness_certificate: Optional[EdgeColoring] = None  # unused; arrows has none
    methods: dict = field(default_factory=dict)  # strategy -> edge count
    caps: dict = field(default_factory=dict)  # recorded search caps, exact mode

    def __post_init__(self):
        if self.upper is not None and self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")


def ramsey_number_small(
    pattern: KUniformHypergraph, cap: int, node_cap: int = 100_000_000
) -> Optional[int]:
    """Least N <= cap with complete-host arrowing, or None (not found or
    budget exhausted; the two are deliberately not distinguished here)."""
    start = max(pattern.n, pattern.k)
    for n in range(start, cap + 1):
        verdict = arrows(clique(pattern.k, n), pattern, node_cap)
        if verdict.result == ArrowResult.ARROWS:
            return n
        if verdict.result == ArrowResult.UNKNOWN:
            return None
    return None


def _reverify(host: KUniformHypergraph, pattern: KUniformHypergraph, node_cap: int):
    verdict = arrows(host, pattern, node_cap)
    if verdict.result != ArrowResult.ARROWS:
        raise AssertionError("witness host failed re-verification")


def size_ramsey_upper(
    pattern: KUniformHypergraph,
    strategies: tuple[str, ...] = ALL_STRATEGIES,
    node_cap: int = 100_000_000,
    ramsey_cap: int = 8,
    max_host_edges: int = 18,
    seed: int = 0,
) -> SizeRamseyBound:
    """Best verified upper bound over the requested host strategies.

    Hosts with more than max_host_edges edges are skipped (the arrow
    decision is exhaustive).  When no strategy verifies, the bound carries
    the lower bound only.
    """
    unknown = [s for s in strategies if s not in ALL_STRATEGIES]
    if unknown:
        raise ValueError(f"unknown strategies: {unknown}")
    lower = max(pattern.num_edges, 1)
    best: Optional[KUniformHypergraph] = None
    methods: dict = {}

    def consider(name: str, host: KUniformHypergraph) -> None:
        nonlocal best
        if host.num_edges > max_host_edges:
            return
        if best is not None and host.num_edges >= best.num_edges:
            return
        verdict = arrows(host, pattern, node_cap)
        if verdict.result == ArrowResult.ARROWS:
            methods[name] = host.num_edges
            best = host

    if "clique-host" in strategies:
        r = ramsey_number_small(pattern, ramsey_cap, node_cap)
        if r is not None:
            consider("clique-host", clique(pattern.k, r))

    if "blowup-host" in strategies:
        for host in _blowup_hosts(pattern, ramsey_cap, node_cap):
            consider("blowup-host", host)

    if "steiner-host" in strategies:
        for host in _steiner_hosts(pattern, max_host_edges, seed):
            consider("steiner-host", host)

    if "random-host" in strategies:
        for host in _random_hosts(pattern, max_host_edges, seed):
            consider("random-host", host)

    if best is not None:
        _reverify(best, pattern, node_cap)
        upper = best.num_edges
        if upper < lower:
            # a verified host can't beat the |E(pattern)| floor
            raise AssertionError("verified upper bound below the edge-count floor")
        return SizeRamseyBound(pattern, lower, upper, best, methods=methods)
    return SizeRamseyBound(pattern, lower, None, None, methods=methods)


def _detect_ell_path(pattern: KUniformHypergraph) -> Optional[tuple[int, int]]:
    """(ell, n) such that pattern is isomorphic to the ell-path, or None."""
    k = pattern.k
    for ell in range(1, k):
        if (pattern.n - ell) % (k - ell):
            continue
        if pattern.n < k:
            continue
        candidate = ell_path(k, ell, pattern.n)
        if candidate.num_edges == pattern.num_edges and are_isomorphic(
            pattern, candidate
        ):
            return ell, pattern.n
    return None


def _blowup_hosts(
    pattern: KUniformHypergraph, ramsey_cap: int, node_cap: int
) -> Iterator[KUniformHypergraph]:
    detected = _detect_ell_path(pattern)
    if detected is None:
        return
    ell, _ = detected
    if ell > pattern.k // 2:
        return
    # monochromatic graph paths with the same edge count lift to ell-paths
    graph_path = ell_path(2, 1, pattern.num_edges + 1)
    r = ramsey_number_small(graph_path, ramsey_cap, node_cap)
    if r is None:
        return
    yield blowup_path_host(clique(2, r), pattern.k, ell)


def _steiner_hosts(
    pattern: KUniformHypergraph, max_host_edges: int, seed: int
) -> Iterator[KUniformHypergraph]:
    k = pattern.k
    for ell in range(1, k):
        if find_ell_tree_order(pattern, ell) is None:
            continue
        for big_n in range(k, 3 * pattern.n + 2):
            result = greedy_partial_steiner(SteinerParams(ell + 1, k, big_n, seed))
            if result.hypergraph.num_edges > max_host_edges:
                break
            yield result.hypergraph
        break  # smallest workable ell only


def _random_hosts(
    pattern: KUniformHypergraph, max_host_edges: int, seed: int, samples: int = 20
) -> Iterator[KUniformHypergraph]:
    rng = random.Random(seed)
    k = pattern.k
    for _ in range(samples):
        n = rng.randint(pattern.n, pattern.n + k + 2)
        m = rng.randint(pattern.num_edges, max_host_edges)
        pool = list(itertools.combinations(range(n), k))
        if m > len(pool):
            continue
        edges = rng.sample(pool, m)
        yield KUniformHypergraph.from_edges(k, n, edges)


# -- exact tiny search over non-isomorphic hosts ---------------------------


def enumerate_hosts(k: int, num_edges: int, vcap: int) -> Iterator[KUniformHypergraph]:
    """All k-graphs with the given edge count, no isolated vertices and at
    most vcap vertices, one representative per labeled canonical form.

    Edges are added in any order but new vertices always take the next
    free indices, which collapses most relabelings; exact duplicates are
    removed via the canonical edge list.
    """
    seen: set[tuple] = set()

    def build(edges: list[tuple[int, ...]], used: int) -> Iterator[KUniformHypergraph]:
        if len(edges) == num_edges:
            h = KUniformHypergraph.from_edges(k, used, edges)
            if h.num_edges == num_edges and h.edges not in seen:
                seen.add(h.edges)
                yield h
            return
        # a new edge may introduce up to k fresh vertices, consecutively
        remaining = num_edges - len(edges)
        for fresh in range(0, k + 1):
            if used + fresh > vcap:
                break
            new_part = tuple(range(used, used + fresh))
            for old_part in itertools.combinations(range(used), k - fresh):
                e = tuple(sorted(old_part + new_part))
                if e in edges:
                    continue
                # leave enough room: unused room check is implicit via vcap
                yield from build(edges + [e], used + fresh)

    yield from build([], 0)


def size_ramsey_exact_tiny(
    pattern: KUniformHypergraph,
    vcap: int = 9,
    ecap: int = 12,
    node_cap: int = 100_000_000,
    dedup_isomorphic: bool = True,
) -> SizeRamseyBound:
    """Exact size-Ramsey number under the stated host caps.

    Scans hosts by increasing edge count and returns the first count that
    admits an arrowing host; the caps ride along in the result so callers
    cannot overclaim exactness.
    """
    floor = max(pattern.num_edges, 1)
    for m in range(floor, ecap + 1):
        kept: list[KUniformHypergraph] = []
        for host in enumerate_hosts(pattern.k, m, vcap):
            if dedup_isomorphic and any(are_isomorphic(host, other) for other in kept):
                continue
            kept.append(host)
            verdict = arrows(host, pattern, node_cap)
            if verdict.result == ArrowResult.ARROWS:
                return SizeRamseyBound(
                    pattern,
                    m,
                    m,
                    host,
                    caps={"vcap": vcap, "ecap": ecap},
                )
    raise CapsTooSmallError(
        f"no arrowing host with <= {ecap} edges on <= {vcap} vertices"
    )
