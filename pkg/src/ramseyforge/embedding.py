"""Copy detection, ell-degree peeling and the greedy ell-tree embedding.

Copies are not required to be induced: an injective vertex map is a copy
as soon as every pattern edge lands on a host edge (of the requested
color, when a filter is given).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import Budget
from .hypergraph import EdgeColoring, KUniformHypergraph


@dataclass(frozen=True)
class Embedding:
    """Injective vertex map from pattern to host; mapping[p] = host vertex."""

    mapping: tuple[int, ...]
    color_filter: Optional[str] = None

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.mapping))

    def image_edges(self, pattern: KUniformHypergraph) -> list[frozenset]:
        return [frozenset(self.mapping[v] for v in e) for e in pattern.edges]

    def is_valid(
        self,
        pattern: KUniformHypergraph,
        host: KUniformHypergraph,
        coloring: Optional[EdgeColoring] = None,
    ) -> bool:
        if len(set(self.mapping)) != pattern.n:
            return False
        allowed = _allowed_edges(host, coloring, self.color_filter)
        return all(img in allowed for img in self.image_edges(pattern))


def _allowed_edges(
    host: KUniformHypergraph,
    coloring: Optional[EdgeColoring],
    color: Optional[str],
) -> set[frozenset]:
    if color is None:
        return set(host.edge_sets())
    if coloring is None:
        raise ValueError("a color filter requires a coloring")
    return {
        es for es, c in zip(host.edge_sets(), coloring.colors) if c == color
    }


def _pattern_order(pattern: KUniformHypergraph) -> list[int]:
    """Connectivity-first vertex order: each next vertex maximizes contact
    with the already placed ones (ties: higher degree, lower index)."""
    deg = pattern.degrees()
    placed: list[int] = []
    placed_set: set[int] = set()
    remaining = set(range(pattern.n))
    contact = {v: 0 for v in remaining}
    incident: list[list[frozenset]] = [[] for _ in range(pattern.n)]
    for es in pattern.edge_sets():
        for v in es:
            incident[v].append(es)
    while remaining:
        v = max(remaining, key=lambda u: (contact[u], deg[u], -u))
        placed.append(v)
        placed_set.add(v)
        remaining.discard(v)
        for es in incident[v]:
            for w in es:
                if w in remaining:
                    contact[w] += 1
    return placed


def enumerate_copies(
    pattern: KUniformHypergraph,
    host: KUniformHypergraph,
    coloring: Optional[EdgeColoring] = None,
    color: Optional[str] = None,
    node_cap: int = 10_000_000,
) -> Iterator[tuple[int, ...]]:
    """Yield every injective copy of pattern in host as a mapping tuple.

    Deterministic order: candidates are tried in increasing vertex index
    along a fixed connectivity-first pattern order.
    """
    if pattern.k != host.k:
        raise ValueError("pattern and host must share the uniformity")
    if pattern.n > host.n:
        return
    budget = Budget(node_cap)
    allowed = _allowed_edges(host, coloring, color)
    order = _pattern_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    closing: list[list[frozenset]] = [[] for _ in range(pattern.n)]
    for es in pattern.edge_sets():
        closing[max(pos[v] for v in es)].append(es)

    host_deg = [0] * host.n
    for es in allowed:
        for v in es:
            host_deg[v] += 1
    pat_deg = pattern.degrees()

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def place(i: int) -> Iterator[tuple[int, ...]]:
        if i == pattern.n:
            yield tuple(mapping[v] for v in range(pattern.n))
            return
        u = order[i]
        for w in range(host.n):
            budget.spend()
            if w in used or host_deg[w] < pat_deg[u]:
                continue
            mapping[u] = w
            used.add(w)
            if all(
                frozenset(mapping[x] for x in es) in allowed for es in closing[i]
            ):
                yield from place(i + 1)
            del mapping[u]
            used.discard(w)

    yield from place(0)


def find_copy(
    pattern: KUniformHypergraph,
    host: KUniformHypergraph,
    coloring: Optional[EdgeColoring] = None,
    color: Optional[str] = None,
    node_cap: int = 10_000_000,
) -> Optional[Embedding]:
    """First copy found, or None; deterministic given the inputs."""
    for mapping in enumerate_copies(pattern, host, coloring, color, node_cap):
        return Embedding(mapping, color)
    return None


def copy_edge_masks(
    pattern: KUniformHypergraph,
    host: KUniformHypergraph,
    node_cap: int = 10_000_000,
) -> list[int]:
    """Distinct bitmasks (over host edge indices) of the edge sets of all
    copies of pattern in host, reduced to inclusion-minimal masks.

    A coloring contains a monochromatic copy iff one of these masks is
    monochromatic, which is what the arrow search checks at every node.
    """
    if pattern.n > host.n:
        return []
    # isolated pattern vertices only need spare room in the host, so
    # enumerate over the edge-covered core and check the head count
    covered = sorted({v for e in pattern.edges for v in e})
    core = pattern.induced(covered)
    if host.n - core.n < pattern.n - core.n:
        return []
    if core.num_edges == 0:
        return [0]
    index = {es: i for i, es in enumerate(host.edge_sets())}
    masks: set[int] = set()
    for mapping in enumerate_copies(core, host, node_cap=node_cap):
        mask = 0
        for es in core.edge_sets():
            mask |= 1 << index[frozenset(mapping[v] for v in es)]
        masks.add(mask)
    minimal = [
        m for m in masks if not any(o != m and o & m == o for o in masks)
    ]
    minimal.sort(key=lambda m: (bin(m).count("1"), m))
    return minimal


@dataclass(frozen=True)
class PeelResult:
    hypergraph: KUniformHypergraph
    removed_edges: int


def peel_to_min_degree(
    h: KUniformHypergraph, ell: int, threshold: int
) -> PeelResult:
    """Delete edges through low-degree ell-sets until the minimum non-zero
    ell-degree reaches the threshold or no edges remain.

    Vertices are kept as isolates so indices stay stable.  The low ell-set
    chosen each round is the lexicographically least one; the result is
    independent of that choice but this makes runs reproducible.
    """
    if not 1 <= ell < h.k:
        raise ValueError(f"need 1 <= ell < k, got ell={ell}, k={h.k}")
    edges = list(h.edges)
    removed = 0
    while edges:
        counts: dict[tuple[int, ...], int] = {}
        for e in edges:
            for u in itertools.combinations(e, ell):
                counts[u] = counts.get(u, 0) + 1
        low = sorted(u for u, c in counts.items() if c < threshold)
        if not low:
            break
        target = set(low[0])
        before = len(edges)
        edges = [e for e in edges if not target.issubset(e)]
        removed += before - len(edges)
    return PeelResult(KUniformHypergraph.from_edges(h.k, h.n, edges), removed)


@dataclass(frozen=True)
class EmbedFailure:
    """Greedy embedding got stuck: no host edge meets the used set exactly
    in the attachment image."""

    blocking_set: tuple[int, ...]
    step: int


def greedy_tree_embed(
    tree: KUniformHypergraph,
    host: KUniformHypergraph,
    ell: int,
    edge_order: Optional[list[int]] = None,
) -> Embedding | EmbedFailure:
    """Embed an ell-tree edge by edge into the host.

    For each new tree edge the attachment set U (its intersection with the
    already embedded part, |U| <= ell) must be hit exactly: we take the
    lexicographically least host edge f with f intersecting the used image
    precisely in the image of U.  Success is guaranteed when the host is
    linear in (ell+1)-tuples with min non-zero ell-degree >= |V(tree)|;
    otherwise a failure report carries the blocking attachment set.
    """
    if tree.k != host.k:
        raise ValueError("tree and host must share the uniformity")
    if edge_order is None:
        from .constructions import find_ell_tree_order

        edge_order = find_ell_tree_order(tree, ell)
        if edge_order is None:
            raise ValueError(f"input is not an ell-tree for ell={ell}")
    if sorted(edge_order) != list(range(tree.num_edges)):
        raise ValueError("edge_order must enumerate the tree's edges")

    mapping: dict[int, int] = {}
    used: set[int] = set()
    for step, idx in enumerate(edge_order):
        e = tree.edges[idx]
        attach = [v for v in e if v in mapping]
        if len(attach) > ell:
            raise ValueError("edge order violates the ell-tree overlap bound")
        u_img = {mapping[v] for v in attach}
        chosen = None
        for f in host.edges:
            fs = set(f)
            if fs & used == u_img and u_img <= fs:
                chosen = f
                break
        if chosen is None:
            return EmbedFailure(tuple(sorted(attach)), step)
        fresh_host = sorted(set(chosen) - u_img)
        fresh_tree = sorted(v for v in e if v not in mapping)
        for tv, hv in zip(fresh_tree, fresh_host):
            mapping[tv] = hv
        used.update(chosen)

    # isolated tree vertices (order n can exceed the edge span)
    spare = iter(sorted(set(range(host.n)) - used))
    full = []
    for v in range(tree.n):
        if v in mapping:
            full.append(mapping[v])
        else:
            try:
                full.append(next(spare))
            except StopIteration:
                return EmbedFailure((v,), tree.num_edges)
    emb = Embedding(tuple(full))
    assert emb.is_valid(tree, host)
    return emb
