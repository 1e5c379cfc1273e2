import itertools

import pytest
from hypothesis import given, settings, strategies as st

from ramseyforge.constructions import (
    SteinerParams,
    clique,
    ell_path,
    greedy_partial_steiner,
    random_ell_tree,
)
from ramseyforge.embedding import (
    EmbedFailure,
    Embedding,
    copy_edge_masks,
    enumerate_copies,
    find_copy,
    greedy_tree_embed,
    peel_to_min_degree,
)
from ramseyforge.errors import BudgetExceededError, UnreachableOrderError
from ramseyforge.hypergraph import BLUE, RED, EdgeColoring, KUniformHypergraph


def bruteforce_copies(pattern, host, allowed=None):
    """All injective maps sending every pattern edge onto an allowed host edge."""
    if allowed is None:
        allowed = set(host.edge_sets())
    out = []
    for img in itertools.permutations(range(host.n), pattern.n):
        if all(frozenset(img[v] for v in e) in allowed for e in pattern.edges):
            out.append(img)
    return out


def test_enumerate_matches_bruteforce():
    cases = [
        (ell_path(2, 1, 3), clique(2, 4)),
        (clique(2, 3), clique(2, 5)),
        (ell_path(3, 2, 4), clique(3, 5)),
        (ell_path(3, 1, 5), ell_path(3, 1, 7)),
    ]
    for pattern, host in cases:
        got = sorted(enumerate_copies(pattern, host))
        want = sorted(bruteforce_copies(pattern, host))
        assert got == want


def test_no_copy_cases():
    # 4-clique needs a vertex pair in 3 edges; a tight path has none
    k4 = clique(3, 4)
    tp6 = ell_path(3, 2, 6)
    assert find_copy(k4, tp6) is None
    # pattern larger than host
    assert find_copy(clique(2, 5), clique(2, 4)) is None


def test_color_filtered_copies():
    host = clique(2, 4)
    colors = tuple(RED if 0 in e else BLUE for e in host.edges)
    coloring = EdgeColoring(host, colors)
    tri = clique(2, 3)
    assert find_copy(tri, host, coloring, RED) is None  # red part is a star
    blue = find_copy(tri, host, coloring, BLUE)
    assert blue is not None and 0 not in blue.mapping
    with pytest.raises(ValueError):
        find_copy(tri, host, None, RED)


def test_embedding_validity_and_dict():
    host = clique(2, 4)
    tri = clique(2, 3)
    emb = find_copy(tri, host)
    assert emb.is_valid(tri, host)
    assert emb.as_dict() == dict(enumerate(emb.mapping))
    bad = Embedding((0, 0, 1))
    assert not bad.is_valid(tri, host)


def test_copy_budget():
    with pytest.raises(BudgetExceededError):
        list(enumerate_copies(ell_path(2, 1, 5), clique(2, 9), node_cap=10))


def test_copy_edge_masks_triangle_in_k4():
    tri = clique(2, 3)
    k4 = clique(2, 4)
    masks = copy_edge_masks(tri, k4)
    assert len(masks) == 4  # one per vertex triple
    assert all(bin(m).count("1") == 3 for m in masks)


def test_copy_edge_masks_minimality_and_edge_cases():
    # pattern with an isolated vertex: masks come from the core
    pat = KUniformHypergraph.from_edges(2, 3, [(0, 1)])
    host = clique(2, 3)
    masks = copy_edge_masks(pat, host)
    assert masks == [1, 2, 4]
    # edgeless pattern fits anywhere it has room
    empty2 = KUniformHypergraph.from_edges(2, 2, [])
    assert copy_edge_masks(empty2, host) == [0]
    assert copy_edge_masks(clique(2, 5), host) == []
    # supersets are pruned: P3 inside a triangle-with-pendant
    p3 = ell_path(2, 1, 3)
    h = KUniformHypergraph.from_edges(2, 4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    masks = copy_edge_masks(p3, h)
    for a, b in itertools.combinations(masks, 2):
        assert a & b != a and a & b != b


def test_peel_to_min_degree():
    # star plus a pendant path: peeling at threshold 2 strips the path tail
    h = KUniformHypergraph.from_edges(
        2, 6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]
    )
    res = peel_to_min_degree(h, 1, 2)
    assert res.removed_edges == 5  # cascade kills everything here
    dense = clique(2, 5)
    res2 = peel_to_min_degree(dense, 1, 3)
    assert res2.removed_edges == 0 and res2.hypergraph == dense
    with pytest.raises(ValueError):
        peel_to_min_degree(h, 0, 2)


def test_peel_keeps_vertex_indices():
    h = KUniformHypergraph.from_edges(2, 5, [(0, 1), (2, 3), (3, 4)])
    res = peel_to_min_degree(h, 1, 2)
    assert res.hypergraph.n == 5


def test_greedy_tree_embed_into_steiner():
    host = greedy_partial_steiner(SteinerParams(2, 3, 15, seed=0)).hypergraph
    peeled = peel_to_min_degree(host, 1, 4).hypergraph
    assert peeled.num_edges > 0
    ok = 0
    for seed in range(30):
        try:
            tree = random_ell_tree(3, 1, 7, seed)
        except UnreachableOrderError:
            continue
        emb = greedy_tree_embed(tree, peeled, 1)
        assert isinstance(emb, Embedding)
        assert emb.is_valid(tree, peeled)
        ok += 1
    assert ok > 0


def test_greedy_tree_embed_failure_report():
    tree = random_ell_tree(3, 1, 5, seed=0)
    tiny = KUniformHypergraph.from_edges(3, 3, [(0, 1, 2)])
    res = greedy_tree_embed(tree, tiny, 1)
    assert isinstance(res, EmbedFailure)


def test_greedy_tree_embed_rejects_non_tree():
    with pytest.raises(ValueError):
        greedy_tree_embed(clique(3, 4), clique(3, 6), 1)
