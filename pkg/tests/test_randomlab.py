import itertools
import math
import random

import pytest

from ramseyforge.constructions import clique_hypergraph
from ramseyforge.hypergraph import BLUE, RED, EdgeColoring, KUniformHypergraph
from ramseyforge.randomlab import (
    NO_SEED,
    PATH_FOUND,
    TRASH_FULL,
    GnpParams,
    clique_stats,
    default_alpha,
    default_beta,
    gnp,
    grow_monochromatic_tight_path,
    iterated_procedure,
    lambda_constant,
    nu_constant,
    property_check,
)


def naive_clique_stats(g, k, a_set=(), b_family=(), c_set=()):
    """All-k-subsets reference for the clique statistics."""
    a = set(a_set)
    c = set(c_set)
    family = [frozenset(b) for b in b_family]
    inside = a | {v for b in family for v in b}
    cliques = [
        set(q)
        for q in itertools.combinations(range(g.n), k)
        if all(g.is_edge(p) for p in itertools.combinations(q, 2))
    ]
    x = y = z = 0
    for q in cliques:
        if q & c:
            z += 1
        member = next((b for b in family if b <= q), None)
        if member is not None:
            (w,) = q - member
            if w in inside:
                y += 1
            else:
                x += 1
    return len(cliques), x, y, z


def test_gnp_params_resolution():
    p = GnpParams(n=32, d=1.0, k=3)
    assert math.isclose(p.resolved_beta(), 1.0 / 2)
    assert math.isclose(p.resolved_alpha(), 1.0 / 2)
    assert math.isclose(p.resolved_p(), (5 / 32) ** 0.5)
    assert math.isclose(p.resolved_c(), 3.0**-9)
    # explicit p wins
    assert GnpParams(n=32, p=0.25, d=9.0).resolved_p() == 0.25
    with pytest.raises(ValueError):
        GnpParams(n=10).resolved_p()
    with pytest.raises(ValueError):
        GnpParams(n=4, d=50.0).resolved_p()  # formula value above 1
    with pytest.raises(ValueError):
        GnpParams(n=10, p=1.5).resolved_p()


def test_constants():
    assert math.isclose(nu_constant(3, 2.0), (1.5**3) * 8 / 2)
    assert math.isclose(lambda_constant(3, 2.0), 0.25 * 8 / 2)
    assert math.isclose(default_beta(4), 1 / 4)
    assert math.isclose(default_alpha(4), 1 / 2)


def test_gnp_is_seeded_and_plausible():
    a = gnp(GnpParams(n=25, p=0.3, seed=9))
    b = gnp(GnpParams(n=25, p=0.3, seed=9))
    assert a == b
    c = gnp(GnpParams(n=25, p=0.3, seed=10))
    assert a != c
    assert a.k == 2 and a.n == 25
    assert gnp(GnpParams(n=10, p=0.0, seed=0)).num_edges == 0
    assert gnp(GnpParams(n=10, p=1.0, seed=0)).num_edges == math.comb(10, 2)


def test_clique_stats_no_cliques():
    c5 = KUniformHypergraph.from_edges(
        2, 5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
    )
    st = clique_stats(c5, 3)
    assert st.t_k == 0 and st.x_ab == 0 and st.y_ab == 0 and st.z_c == 0
    assert st.t_ell == {1: 5, 2: 5, 3: 0}


def test_clique_stats_matches_naive_oracle():
    rng = random.Random(7)
    for trial in range(8):
        n = rng.randint(8, 15)
        g = gnp(GnpParams(n=n, p=0.45, seed=trial))
        pairs = [
            frozenset(e) for e in g.edges
        ]  # edges are the 2-cliques for k=3
        family = []
        used = set()
        rng.shuffle(pairs)
        for b in pairs:
            if len(family) == 2:
                break
            if not b & used:
                family.append(b)
                used |= b
        outside = [v for v in range(n) if v not in used]
        a_set = rng.sample(outside, min(2, len(outside)))
        c_set = rng.sample(range(n), 3)
        st = clique_stats(g, 3, a_set, family, c_set)
        t_k, x, y, z = naive_clique_stats(g, 3, a_set, family, c_set)
        assert st.t_k == t_k and st.x_ab == x and st.y_ab == y and st.z_c == z
        assert st.x_ab + st.y_ab == sum(
            1
            for q in itertools.combinations(range(n), 3)
            if all(g.is_edge(p) for p in itertools.combinations(q, 2))
            and any(b <= set(q) for b in family)
        )
        assert st.z_c <= st.t_k


def test_clique_stats_validation():
    g = gnp(GnpParams(n=8, p=0.9, seed=1))
    with pytest.raises(ValueError):
        clique_stats(g, 3, b_family=[(0, 1), (1, 2)])  # overlap
    with pytest.raises(ValueError):
        clique_stats(g, 3, a_set=(0,), b_family=[(0, 1)])  # A meets family
    with pytest.raises(ValueError):
        clique_stats(g, 3, b_family=[(0, 1, 2)])  # wrong size
    sparse = KUniformHypergraph.from_edges(2, 4, [(0, 1)])
    with pytest.raises(ValueError):
        clique_stats(sparse, 3, b_family=[(2, 3)])  # not a clique


def test_property_check_runs():
    g = gnp(GnpParams(n=15, p=0.5, seed=3))
    rep = property_check(g, 3, c=0.15, trials=6, seed=0, d=1.0)
    assert len(rep.samples) == 6
    assert 0.0 <= rep.ratio_pass_fraction <= 1.0
    assert rep.t_k_bound is not None


def make_host_and_coloring(n, p, seed, colorseed):
    g = gnp(GnpParams(n=n, p=p, seed=seed))
    host = clique_hypergraph(g, 3)
    rng = random.Random(colorseed)
    coloring = EdgeColoring(
        host, tuple(rng.choice((RED, BLUE)) for _ in host.edges)
    )
    return host, coloring


def test_grow_path_statuses_and_invariants():
    host, coloring = make_host_and_coloring(25, 0.45, 2, 5)
    st = grow_monochromatic_tight_path(host, coloring, BLUE, 5)
    assert st.status in (TRASH_FULL, NO_SEED, PATH_FOUND)
    # trash tuples are pairwise disjoint and sized k-1
    flat = [v for t in st.trash for v in t]
    assert len(flat) == len(set(flat))
    assert all(len(t) == 2 for t in st.trash)
    assert len(st.trash) <= 5
    if st.status == PATH_FOUND:
        assert len(st.path) == 5
        # consecutive triples are blue edges
        blue = {
            frozenset(e)
            for e, c in zip(host.edges, coloring.colors)
            if c == BLUE
        }
        for i in range(len(st.path) - 2):
            assert frozenset(st.path[i : i + 3]) in blue


def test_grow_path_no_seed_on_all_red():
    host, _ = make_host_and_coloring(12, 0.6, 0, 0)
    allred = EdgeColoring(host, tuple(RED for _ in host.edges))
    st = grow_monochromatic_tight_path(host, allred, BLUE, 4)
    assert st.status == NO_SEED
    assert st.path == () and st.trash == ()


def test_grow_path_found_on_all_blue():
    host, _ = make_host_and_coloring(12, 0.9, 0, 0)
    allblue = EdgeColoring(host, tuple(BLUE for _ in host.edges))
    st = grow_monochromatic_tight_path(host, allblue, BLUE, 6)
    assert st.status == PATH_FOUND
    assert len(st.path) == 6


def test_grow_path_deterministic():
    host, coloring = make_host_and_coloring(30, 0.4, 4, 9)
    a = grow_monochromatic_tight_path(host, coloring, BLUE, 6)
    b = grow_monochromatic_tight_path(host, coloring, BLUE, 6)
    assert a == b


def test_iterated_procedure_accounting_identities():
    for colorseed in range(6):
        host, coloring = make_host_and_coloring(22, 0.5, colorseed, colorseed + 50)
        acc = iterated_procedure(host, coloring, BLUE, 4)
        assert acc.t_sought + acc.t_other == acc.t_k == host.num_edges
        assert acc.trash_families_disjoint
        assert acc.max_edge_x_count <= host.k
        assert acc.verdict_x_bound  # sum_x <= k * t_other
        assert not acc.round_cap_exceeded
        last = acc.rounds[-1].status
        assert last in (NO_SEED, PATH_FOUND)
        if last == NO_SEED:
            assert acc.verdict_sought_bound is not None
        else:
            assert acc.found_path is not None


def test_iterated_procedure_round_cap():
    host, coloring = make_host_and_coloring(22, 0.5, 1, 2)
    acc = iterated_procedure(host, coloring, BLUE, 4, round_cap=0)
    assert acc.round_cap_exceeded and acc.rounds == []
