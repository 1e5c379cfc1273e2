"""Exact arrow decisions and the adversarial coloring constructions.

arrows() decides H -> G by DFS over 2-colorings with color-swap symmetry
broken on the first edge.  Monochromatic-copy checks run against the
precomputed inclusion-minimal copy masks, so a partial coloring is pruned
as soon as its fully colored edges already contain a copy.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import Budget, BudgetExceededError, InvalidBaseColoringError
from .hypergraph import (
    BLUE,
    RED,
    EdgeColoring,
    KUniformHypergraph,
    opposite,
)
from .embedding import copy_edge_masks, enumerate_copies, find_copy

ARROWS_NODE_CAP = 100_000_000
COPY_NODE_CAP = 10_000_000


class ArrowResult(enum.Enum):
    ARROWS = "Arrows"
    NOT_ARROWS = "NotArrows"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class ArrowVerdict:
    result: ArrowResult
    certificate: Optional[EdgeColoring]  # verified mono-copy-free when NotArrows
    nodes: int


def _verify_certificate(
    host: KUniformHypergraph,
    pattern: KUniformHypergraph,
    coloring: EdgeColoring,
) -> bool:
    return (
        find_copy(pattern, host, coloring, RED) is None
        and find_copy(pattern, host, coloring, BLUE) is None
    )


def arrows(
    host: KUniformHypergraph,
    pattern: KUniformHypergraph,
    node_cap: int = ARROWS_NODE_CAP,
    copy_node_cap: int = COPY_NODE_CAP,
) -> ArrowVerdict:
    """Decide whether every 2-coloring of host contains a monochromatic
    copy of pattern; NotArrows comes with a verified certificate coloring.
    """
    if host.k != pattern.k:
        raise ValueError("host and pattern must share the uniformity")
    m = host.num_edges
    try:
        masks = copy_edge_masks(pattern, host, copy_node_cap)
    except BudgetExceededError:
        return ArrowVerdict(ArrowResult.UNKNOWN, None, 0)

    if not masks:
        # pattern does not embed at all; any coloring is a certificate
        cert = EdgeColoring(host, tuple(RED for _ in range(m)))
        assert _verify_certificate(host, pattern, cert)
        return ArrowVerdict(ArrowResult.NOT_ARROWS, cert, 0)
    if masks[0] == 0:
        # edgeless pattern embeds regardless of colors
        return ArrowVerdict(ArrowResult.ARROWS, None, 0)

    budget = Budget(node_cap)
    full = (1 << m) - 1

    def mono(colored_mask: int) -> bool:
        return any(cm & colored_mask == cm for cm in masks)

    certificate_mask: Optional[int] = None

    def dfs(idx: int, red: int, blue: int) -> bool:
        """True iff every completion of this partial coloring is mono."""
        nonlocal certificate_mask
        budget.spend()
        if mono(red) or mono(blue):
            return True
        if idx == m:
            certificate_mask = red
            return False
        bit = 1 << idx
        return dfs(idx + 1, red | bit, blue) and dfs(idx + 1, red, blue | bit)

    try:
        # color-swap symmetry: fix edge 0 red
        ok = dfs(1, 1, 0)
    except BudgetExceededError:
        return ArrowVerdict(ArrowResult.UNKNOWN, None, budget.used)
    if ok:
        return ArrowVerdict(ArrowResult.ARROWS, None, budget.used)
    colors = tuple(
        RED if certificate_mask >> i & 1 else BLUE for i in range(m)
    )
    cert = EdgeColoring(host, colors)
    assert _verify_certificate(host, pattern, cert)
    return ArrowVerdict(ArrowResult.NOT_ARROWS, cert, budget.used)


# -- degree-threshold coloring (star-like tree lower bound) ---------------


def degree_threshold_coloring(h: KUniformHypergraph, n: int) -> EdgeColoring:
    """Red iff every vertex of the edge has degree below (n-1)/(2k-2).

    The threshold is compared exactly as a rational, never as a float.
    """
    threshold = Fraction(n - 1, 2 * h.k - 2)
    deg = h.degrees()
    colors = tuple(
        RED if all(deg[v] < threshold for v in e) else BLUE for e in h.edges
    )
    return EdgeColoring(h, colors)


# -- pair contraction and the clique coloring lift ------------------------


@dataclass(frozen=True)
class ContractResult:
    hypergraph: KUniformHypergraph
    vertex_map: dict[int, int]  # old index -> new index (v is dropped)


def contract_pair(h: KUniformHypergraph, u: int, v: int) -> ContractResult:
    """The 3-graph on V(h) minus v: edges avoiding v are kept, edges through
    v (but not u) are rerouted through u, and edges containing both u and v
    are dropped (they would contract to 2-sets and neither rule branch
    produces them).
    """
    if h.k != 3:
        raise ValueError("pair contraction is defined for 3-graphs")
    if u == v or not (0 <= u < h.n and 0 <= v < h.n):
        raise ValueError("u and v must be distinct vertices of h")
    kept = {es for es in h.edge_sets() if v not in es}
    rerouted = set()
    for es in h.edge_sets():
        if v in es and u not in es:
            candidate = frozenset((es - {v}) | {u})
            if candidate not in kept:
                rerouted.add(candidate)
    remaining = sorted(set(range(h.n)) - {v})
    vmap = {old: new for new, old in enumerate(remaining)}
    edges = [tuple(sorted(vmap[x] for x in es)) for es in kept | rerouted]
    return ContractResult(
        KUniformHypergraph.from_edges(3, h.n - 1, edges), vmap
    )


@dataclass(frozen=True)
class LiftPartition:
    """Greedy split of the co-neighborhood T of the contracted pair.

    Blocks are subsets of T of size >= n/4 whose induced link at u is
    monochromatic under the base coloring; the remainder holds what is
    left when no further block exists.  All vertex indices are in the
    original hypergraph's numbering.
    """

    t_set: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    block_colors: tuple[str, ...]
    remainder: tuple[int, ...]


@dataclass(frozen=True)
class LiftResult:
    coloring: EdgeColoring
    partition: LiftPartition
    warnings: tuple[str, ...]


def _link_color(
    base: EdgeColoring, hu: KUniformHypergraph, members: set[int]
) -> Optional[str]:
    """Common color of the edges inside members, RED when edgeless, None
    when the induced link is bichromatic."""
    seen = None
    for es, c in zip(hu.edge_sets(), base.colors):
        if es <= members:
            if seen is None:
                seen = c
            elif seen != c:
                return None
    return seen if seen is not None else RED


def clique_lift_coloring(
    h: KUniformHypergraph,
    u: int,
    v: int,
    base: EdgeColoring,
    n: int,
) -> LiftResult:
    """Lift a coloring of the contracted 3-graph to the full hypergraph.

    Rules: edges avoiding v copy the base color; edges {v,x,y} take the
    base color of {u,x,y}; edges {u,v,x} take the opposite of x's block
    color, or red when x sits in the remainder.

    Raises InvalidBaseColoringError when the base already has a
    monochromatic complete 3-graph of order n (the lift's guarantee needs
    a mono-free base).  Warns, without refusing, when deg(u,v) is too
    large for the mono-freeness guarantee to apply.
    """
    from .constructions import clique as _clique

    contracted = contract_pair(h, u, v)
    hu, vmap = contracted.hypergraph, contracted.vertex_map
    if base.host != hu:
        raise ValueError("base coloring host differs from contract_pair(h, u, v)")

    pattern = _clique(3, n)
    for color in (RED, BLUE):
        if find_copy(pattern, hu, base, color) is not None:
            raise InvalidBaseColoringError(
                f"base coloring has a monochromatic order-{n} clique"
            )

    warnings: list[str] = []
    t_set = sorted(w for w in range(h.n) if h.is_edge((u, v, w)))
    if len(t_set) > 16:
        raise ValueError(
            "co-neighborhood of (u, v) too large for exact block extraction"
        )
    if 32 * len(t_set) >= n * n:
        warnings.append(
            f"deg(u,v)={len(t_set)} is not below n^2/32; the mono-freeness "
            "guarantee does not apply"
        )

    # greedy block extraction: repeatedly the largest monochromatic-link
    # subset of size >= n/4, ties broken lexicographically
    min_block = -(-n // 4)  # ceil(n/4)
    remaining = list(t_set)
    blocks: list[tuple[int, ...]] = []
    block_colors: list[str] = []
    while len(remaining) >= min_block:
        found = None
        for size in range(len(remaining), min_block - 1, -1):
            for subset in itertools.combinations(remaining, size):
                members = {vmap[x] for x in subset} | {vmap[u]}
                c = _link_color(base, hu, members)
                if c is not None:
                    found = (subset, c)
                    break
            if found:
                break
        if not found:
            break
        subset, c = found
        blocks.append(subset)
        block_colors.append(c)
        remaining = [x for x in remaining if x not in set(subset)]

    block_of = {}
    for i, blk in enumerate(blocks):
        for x in blk:
            block_of[x] = i

    colors = []
    for es in h.edge_sets():
        if v not in es:
            mapped = frozenset(vmap[x] for x in es)
            colors.append(base.color_of(mapped))
        elif u not in es:
            x, y = sorted(es - {v})
            mapped = frozenset((vmap[u], vmap[x], vmap[y]))
            colors.append(base.color_of(mapped))
        else:
            (x,) = es - {u, v}
            if x in block_of:
                colors.append(opposite(block_colors[block_of[x]]))
            else:
                colors.append(RED)  # rule for the remainder, fixed for determinism

    partition = LiftPartition(
        tuple(t_set),
        tuple(blocks),
        tuple(block_colors),
        tuple(remaining),
    )
    return LiftResult(EdgeColoring(h, tuple(colors)), partition, tuple(warnings))


# -- high/low degree coloring against a gadget family ---------------------


@dataclass(frozen=True)
class VhighVlowReport:
    v_high: tuple[int, ...]
    copy_counts: tuple[int, ...]
    selected_index: int
    root_edges: tuple[tuple[int, ...], ...]  # edges of h, original indices
    f_vertex_count: int


def vhigh_vlow_coloring(
    h: KUniformHypergraph,
    d: int,
    gadgets: list[KUniformHypergraph],
    node_cap: int = COPY_NODE_CAP,
) -> tuple[EdgeColoring, VhighVlowReport]:
    """Blue = edges meeting the high-degree part plus the root edges of all
    low-part copies of the rarest gadget; red = everything else.

    Gadgets must be rooted at vertex 0 (as produced by the gadget
    constructor); a copy's root edge is the image of the unique gadget
    edge containing the root.  Copies are counted as distinct image edge
    sets, so automorphic re-embeddings do not inflate the counts.
    """
    deg = h.degrees()
    v_high = tuple(sorted(x for x in range(h.n) if deg[x] >= d))
    v_low = sorted(set(range(h.n)) - set(v_high))
    h_low = h.induced(v_low)
    to_orig = {i: x for i, x in enumerate(v_low)}

    counts = []
    roots_per_gadget = []
    for g in gadgets:
        g_root = next(e for e in g.edges if 0 in e)
        seen: set[frozenset] = set()
        roots: set[frozenset] = set()
        for mapping in enumerate_copies(g, h_low, node_cap=node_cap):
            image = frozenset(
                frozenset(mapping[x] for x in e) for e in g.edges
            )
            if image in seen:
                continue
            seen.add(image)
            roots.add(frozenset(to_orig[mapping[x]] for x in g_root))
        counts.append(len(seen))
        roots_per_gadget.append(
            {frozenset(x for x in r) for r in roots}
        )
    selected = min(range(len(gadgets)), key=lambda i: (counts[i], i))
    f_edges = roots_per_gadget[selected]

    high = set(v_high)
    colors = tuple(
        BLUE if (es & high or es in f_edges) else RED for es in h.edge_sets()
    )
    report = VhighVlowReport(
        v_high=v_high,
        copy_counts=tuple(counts),
        selected_index=selected,
        root_edges=tuple(sorted(tuple(sorted(e)) for e in f_edges)),
        f_vertex_count=len({x for e in f_edges for x in e}),
    )
    return EdgeColoring(h, colors), report
