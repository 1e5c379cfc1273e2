"""Canonical k-uniform hypergraphs and two-colorings of their edge lists.

Vertices are dense integer indices 0..n-1.  Edges are stored sorted
ascending and the edge list is sorted lexicographically, so a coloring is
just an array aligned with the edge list and serialized artifacts are
reproducible byte for byte.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import Budget, BudgetExceededError

RED = "R"
BLUE = "B"
COLORS = (RED, BLUE)


def opposite(color: str) -> str:
    return BLUE if color == RED else RED


@dataclass(frozen=True)
class KUniformHypergraph:
    """A k-graph in canonical form.

    Invariants: every edge has exactly k distinct vertices below n; the
    edge list is strictly increasing lexicographically (no duplicates).
    k=2 gives ordinary graphs and runs through the same code paths.
    """

    k: int
    n: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"uniformity k must be >= 2, got {self.k}")
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        prev = None
        for e in self.edges:
            if len(e) != self.k or len(set(e)) != self.k:
                raise ValueError(f"edge {e} is not a {self.k}-set")
            if tuple(sorted(e)) != e:
                raise ValueError(f"edge {e} is not sorted")
            if e[0] < 0 or e[-1] >= self.n:
                raise ValueError(f"edge {e} out of range for n={self.n}")
            if prev is not None and e <= prev:
                raise ValueError("edge list is not strictly increasing")
            prev = e
        object.__setattr__(self, "_edge_sets", tuple(frozenset(e) for e in self.edges))

    @classmethod
    def from_edges(cls, k: int, n: int, edges: Iterable[Iterable[int]]) -> "KUniformHypergraph":
        """Canonicalize an arbitrary edge collection (sorts and deduplicates)."""
        canon = sorted({tuple(sorted(e)) for e in edges})
        return cls(k, n, tuple(canon))

    # -- basic queries ----------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_sets(self) -> tuple[frozenset, ...]:
        return self._edge_sets  # type: ignore[attr-defined]

    def is_edge(self, vertices: Iterable[int]) -> bool:
        return frozenset(vertices) in set(self.edge_sets())

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for e in self.edges:
            for v in e:
                d[v] += 1
        return d

    def set_degree(self, subset: Iterable[int]) -> int:
        """Number of edges containing the given set (1 <= |U| < k)."""
        u = frozenset(subset)
        if not 1 <= len(u) < self.k:
            raise ValueError(f"subset size must be in [1, {self.k - 1}], got {len(u)}")
        if any(v < 0 or v >= self.n for v in u):
            raise ValueError("subset members out of range")
        return sum(1 for es in self.edge_sets() if u <= es)

    def min_nonzero_ell_degree(self, ell: int) -> Optional[int]:
        """Minimum set_degree over ell-subsets lying inside at least one edge.

        Returns None when the hypergraph has no edges.
        """
        if not 1 <= ell < self.k:
            raise ValueError(f"ell must be in [1, {self.k - 1}], got {ell}")
        if not self.edges:
            return None
        counts: dict[frozenset, int] = {}
        for e in self.edges:
            for u in itertools.combinations(e, ell):
                fu = frozenset(u)
                counts[fu] = counts.get(fu, 0) + 1
        return min(counts.values())

    def induced(self, subset: Iterable[int]) -> "KUniformHypergraph":
        """Induced sub-hypergraph on |S| vertices, re-indexed order-preservingly."""
        s = sorted(set(subset))
        if s and (s[0] < 0 or s[-1] >= self.n):
            raise ValueError("subset members out of range")
        rank = {v: i for i, v in enumerate(s)}
        ss = set(s)
        edges = [tuple(rank[v] for v in e) for e in self.edges if ss.issuperset(e)]
        return KUniformHypergraph.from_edges(self.k, len(s), edges)

    # -- serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        return {"k": self.k, "n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> "KUniformHypergraph":
        return cls(data["k"], data["n"], tuple(tuple(e) for e in data["edges"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "KUniformHypergraph":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class EdgeColoring:
    """Total Red/Blue assignment over the host's canonical edge list."""

    host: KUniformHypergraph
    colors: tuple[str, ...]

    def __post_init__(self):
        if len(self.colors) != self.host.num_edges:
            raise ValueError("coloring length differs from host edge count")
        for c in self.colors:
            if c not in COLORS:
                raise ValueError(f"bad color {c!r}")

    def color_of(self, edge: Iterable[int]) -> str:
        key = tuple(sorted(edge))
        idx = self.host.edges.index(key)
        return self.colors[idx]

    def indices_of(self, color: str) -> list[int]:
        return [i for i, c in enumerate(self.colors) if c == color]

    def monochromatic_subgraph(self, color: str) -> KUniformHypergraph:
        edges = [e for e, c in zip(self.host.edges, self.colors) if c == color]
        return KUniformHypergraph(self.host.k, self.host.n, tuple(edges))

    def swapped(self) -> "EdgeColoring":
        return EdgeColoring(self.host, tuple(opposite(c) for c in self.colors))

    def to_list(self) -> list[str]:
        return list(self.colors)

    @classmethod
    def from_list(cls, host: KUniformHypergraph, colors: Iterable[str]) -> "EdgeColoring":
        return cls(host, tuple(colors))


# -- independence number ------------------------------------------------


def independence_number(h: KUniformHypergraph, node_cap: int = 2_000_000) -> int:
    """Size of a largest vertex set spanning no edge (exact branch and bound).

    Raises BudgetExceededError when the node cap is hit; callers should
    shrink the instance.  Intended for a few dozen vertices.
    """
    if h.n == 0:
        raise ValueError("independence number of an empty vertex set is undefined")
    budget = Budget(node_cap)
    edge_sets = h.edge_sets()
    best = 0

    def recurse(excluded: frozenset, forced: frozenset) -> None:
        nonlocal best
        budget.spend()
        candidate = h.n - len(excluded)
        if candidate <= best:
            return
        violating = None
        for es in edge_sets:
            if not es & excluded:
                violating = es
                return _branch(violating, excluded, forced)
        best = candidate

    def _branch(edge: frozenset, excluded: frozenset, forced: frozenset) -> None:
        kept = forced
        for v in sorted(edge - forced):
            recurse(excluded | {v}, kept)
            kept = kept | {v}
        # all vertices of `edge` forced in -> infeasible branch, drop it

    recurse(frozenset(), frozenset())
    return best


def independence_number_bruteforce(h: KUniformHypergraph) -> int:
    """Exhaustive subset enumeration; oracle for small n only."""
    edge_sets = h.edge_sets()
    for size in range(h.n, -1, -1):
        for s in itertools.combinations(range(h.n), size):
            ss = set(s)
            if not any(es <= ss for es in edge_sets):
                return size
    return 0


# -- isomorphism and automorphisms ---------------------------------------


def _refined_colors(h: KUniformHypergraph, initial: Optional[list] = None) -> tuple:
    """Iterated degree-style refinement; returns a per-vertex invariant tuple.

    Each round replaces a vertex color by (color, multiset of incident
    edge color-profiles) until the partition stabilizes.
    """
    colors = list(initial) if initial is not None else [0] * h.n
    incident: list[list[tuple[int, ...]]] = [[] for _ in range(h.n)]
    for e in h.edges:
        for v in e:
            incident[v].append(e)
    while True:
        sigs = []
        for v in range(h.n):
            profiles = sorted(
                tuple(sorted(colors[w] for w in e if w != v)) for e in incident[v]
            )
            sigs.append((colors[v], tuple(profiles)))
        relabel = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new_colors = [relabel[sig] for sig in sigs]
        if new_colors == colors:
            return tuple(colors)
        colors = new_colors


def _match(
    h1: KUniformHypergraph,
    h2: KUniformHypergraph,
    fixed: dict[int, int],
    budget: Budget,
    count_all: bool,
) -> tuple[int, Optional[dict[int, int]]]:
    """Backtracking vertex matcher; returns (#complete maps, first map).

    With count_all=False it stops at the first complete map.
    """
    c1 = _refined_colors(h1)
    c2 = _refined_colors(h2)
    if sorted(c1) != sorted(c2):
        return 0, None
    for u, v in fixed.items():
        if c1[u] != c2[v]:
            return 0, None

    edge_set2 = set(h2.edge_sets())
    # edges of h1 grouped by the position of their last-mapped vertex
    order = sorted(range(h1.n), key=lambda v: (c1[v], v))
    pos = {v: i for i, v in enumerate(order)}
    edges_closing_at: list[list[tuple[int, ...]]] = [[] for _ in range(h1.n)]
    for e in h1.edges:
        edges_closing_at[max(pos[v] for v in e)].append(e)

    by_color2: dict[int, list[int]] = {}
    for v in range(h2.n):
        by_color2.setdefault(c2[v], []).append(v)

    mapping: dict[int, int] = {}
    used: set[int] = set()
    found: list[Optional[dict[int, int]]] = [None]
    count = [0]

    def place(i: int) -> bool:
        budget.spend()
        if i == h1.n:
            count[0] += 1
            if found[0] is None:
                found[0] = dict(mapping)
            return not count_all
        u = order[i]
        if u in fixed:
            candidates = [fixed[u]]
        else:
            candidates = by_color2.get(c1[u], [])
        for w in candidates:
            if w in used:
                continue
            if c2[w] != c1[u]:
                continue
            mapping[u] = w
            used.add(w)
            ok = all(
                frozenset(mapping[x] for x in e) in edge_set2
                for e in edges_closing_at[i]
            )
            if ok and place(i + 1):
                return True
            del mapping[u]
            used.discard(w)
        return False

    place(0)
    return count[0], found[0]


def find_isomorphism(
    h1: KUniformHypergraph, h2: KUniformHypergraph, node_cap: int = 5_000_000
) -> Optional[dict[int, int]]:
    """Vertex bijection mapping edges onto edges, or None."""
    if h1.k != h2.k or h1.n != h2.n or h1.num_edges != h2.num_edges:
        return None
    _, mapping = _match(h1, h2, {}, Budget(node_cap), count_all=False)
    return mapping


def are_isomorphic(
    h1: KUniformHypergraph, h2: KUniformHypergraph, node_cap: int = 5_000_000
) -> bool:
    return find_isomorphism(h1, h2, node_cap) is not None


def automorphism_count(
    h: KUniformHypergraph,
    fixed: Iterable[int] = (),
    node_cap: int = 10_000_000,
) -> int:
    """Order of the automorphism group (exhaustive with pruning, n <= ~20).

    `fixed` lists vertices that must map to themselves, e.g. the root of a
    rooted construction whose group is taken root-preservingly.
    """
    pins = {v: v for v in fixed}
    count, _ = _match(h, h, pins, Budget(node_cap), count_all=True)
    return count
