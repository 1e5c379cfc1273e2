import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from ramseyforge.constructions import (
    GadgetSpec,
    SteinerParams,
    binary_three_tree,
    binary_tree_leaves,
    blowup_path_host,
    clique,
    clique_hypergraph,
    disjoint_union,
    ell_path,
    enumerate_cliques,
    find_ell_tree_order,
    gadget,
    gadget_family,
    greedy_partial_steiner,
    random_ell_tree,
    root_edge,
    star_tree,
    verify_ell_tree,
)
from ramseyforge.errors import UnreachableOrderError
from ramseyforge.hypergraph import KUniformHypergraph, are_isomorphic


def test_ell_path_interval_formula():
    # edge i spans [(i-1)(k-l), (i-1)(k-l)+k-1] for every feasible (k,l,n)
    for k in range(2, 6):
        for ell in range(1, k):
            step = k - ell
            for m in range(1, 8):
                n = ell + m * step
                if n > 20:
                    continue
                h = ell_path(k, ell, n)
                assert h.num_edges == m == (n - ell) // step
                for i, e in enumerate(h.edges):
                    assert e == tuple(range(i * step, i * step + k))
                # consecutive overlap exactly ell, others smaller
                for i in range(m - 1):
                    assert len(set(h.edges[i]) & set(h.edges[i + 1])) == ell


def test_ell_path_rejects_bad_order():
    with pytest.raises(ValueError):
        ell_path(4, 2, 9)  # (9-2) % (4-2) = 1
    with pytest.raises(ValueError):
        ell_path(3, 1, 6)  # (6-1) % 2 = 1
    with pytest.raises(ValueError):
        ell_path(3, 2, 2)  # below one edge


def test_tight_and_loose_special_cases():
    tight = ell_path(3, 2, 6)
    assert tight.edges == ((0, 1, 2), (1, 2, 3), (2, 3, 4), (3, 4, 5))
    loose = ell_path(3, 1, 7)
    assert loose.edges == ((0, 1, 2), (2, 3, 4), (4, 5, 6))


def test_clique_counts():
    h = clique(3, 5)
    assert h.num_edges == math.comb(5, 3)
    g = clique(2, 4)
    assert g.num_edges == 6


def test_star_tree_structure():
    # (n-1)/(2k-2) arms of two edges each, all arms meeting only at the center
    h = star_tree(3, 9)
    assert h.n == 9 and h.num_edges == 4
    assert h.degree(0) == 2  # center lies in one edge per arm
    assert verify_ell_tree(h, 1)
    with pytest.raises(ValueError):
        star_tree(3, 8)  # (8-1) % 4 != 0


@settings(max_examples=40, deadline=None)
@given(
    st.integers(2, 4).flatmap(
        lambda k: st.tuples(
            st.just(k),
            st.integers(0, k - 1).flatmap(
                lambda ell: st.tuples(st.just(max(ell, 1)), st.integers(1, 5))
            ),
        )
    ),
    st.integers(0, 10**6),
)
def test_random_ell_tree_verifies(params, seed):
    k, (ell, m) = params
    n = k + (m - 1) * 1  # at least this many vertices are reachable; use formula
    # order grows by k - overlap each step; max order = k + (m-1)k, pick middle
    n = k + (m - 1) * (k - ell)
    try:
        t = random_ell_tree(k, ell, n, seed)
    except UnreachableOrderError:
        return
    assert t.n == n
    assert verify_ell_tree(t, ell)
    assert find_ell_tree_order(t, ell) is not None


def test_ell_paths_are_ell_trees():
    for k, ell, n in [(3, 1, 9), (3, 2, 7), (4, 2, 10), (5, 4, 9)]:
        assert verify_ell_tree(ell_path(k, ell, n), ell)


def test_verify_rejects_non_tree():
    k4 = clique(3, 4)
    assert not verify_ell_tree(k4, 1)
    assert not verify_ell_tree(k4, 2)


def test_binary_three_tree():
    for t in range(1, 4):
        b = binary_three_tree(t)
        assert b.n == 2 ** (t + 1) - 1
        assert b.num_edges == 2**t - 1
        assert root_edge(t) == (0, 1, 2)
        leaves = binary_tree_leaves(t)
        assert len(leaves) == 2**t
        assert all(b.degree(v) == 1 for v in leaves)
        assert verify_ell_tree(b, 1)


def test_gadget_shape():
    spec = GadgetSpec(2, (2, 0, 3, 1))
    g = gadget(spec)
    b = binary_three_tree(2)
    assert g.n == b.n
    # tree edges plus a tight path over the 4 leaves (2 extra edges)
    assert g.num_edges == b.num_edges + 2
    with pytest.raises(ValueError):
        GadgetSpec(2, (0, 1, 2))  # wrong length
    with pytest.raises(ValueError):
        GadgetSpec(2, (0, 1, 2, 2))  # not a permutation


def test_gadget_family_distinct_members():
    members, union = gadget_family(3, 2, seed=0)
    assert len(members) == 2
    assert not are_isomorphic(members[0], members[1])
    assert union.n == sum(m.n for m in members)
    assert union.num_edges == sum(m.num_edges for m in members)
    # max degree 4: root of the leaf path inside the tree
    assert all(max(m.degrees()) == 4 for m in members)


def test_disjoint_union_offsets():
    a = KUniformHypergraph.from_edges(3, 3, [(0, 1, 2)])
    u = disjoint_union([a, a])
    assert u.n == 6 and u.edges == ((0, 1, 2), (3, 4, 5))


def test_greedy_partial_steiner_linear():
    for t, k, n in [(2, 3, 15), (3, 4, 20)]:
        res = greedy_partial_steiner(SteinerParams(t, k, n, seed=0))
        h = res.hypergraph
        seen = set()
        for e in h.edges:
            for sub in itertools.combinations(e, t):
                assert sub not in seen
                seen.add(sub)
        assert 0 < res.density <= 1


def test_steiner_t_equals_k_is_complete():
    res = greedy_partial_steiner(SteinerParams(3, 3, 6, seed=1))
    assert res.hypergraph.num_edges == math.comb(6, 3)
    assert res.density == 1


def test_steiner_determinism():
    a = greedy_partial_steiner(SteinerParams(2, 3, 12, seed=5))
    b = greedy_partial_steiner(SteinerParams(2, 3, 12, seed=5))
    assert a.hypergraph == b.hypergraph


def test_blowup_path_host():
    # triangle blown up to k=4, l=2: every graph edge becomes one 4-edge
    g = clique(2, 3)
    h = blowup_path_host(g, 4, 2)
    assert h.k == 4
    assert h.num_edges == g.num_edges
    # vertex count: 2 per graph vertex plus (k-2l)=0 private per edge
    assert h.n == 2 * g.n
    # a graph path with m edges lifts to an ell-path with m edges
    p = blowup_path_host(ell_path(2, 1, 4), 4, 2)
    assert are_isomorphic(p, ell_path(4, 2, 8))


def test_clique_hypergraph_and_enumeration():
    g = clique(2, 5)
    ch = clique_hypergraph(g, 3)
    assert ch.num_edges == math.comb(5, 3)
    # C5 has no triangles
    c5 = KUniformHypergraph.from_edges(2, 5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert clique_hypergraph(c5, 3).num_edges == 0
    assert len(enumerate_cliques(g, 4)) == math.comb(5, 4)


def test_enumerate_cliques_matches_bruteforce():
    g = KUniformHypergraph.from_edges(
        2, 7, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (3, 5), (5, 6)]
    )
    for size in range(1, 5):
        naive = [
            c
            for c in itertools.combinations(range(7), size)
            if all(g.is_edge(p) for p in itertools.combinations(c, 2))
        ]
        assert sorted(enumerate_cliques(g, size)) == sorted(naive)
