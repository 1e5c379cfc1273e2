"""Random-graph clique hosts, exact clique statistics and the
monochromatic tight-path growing procedure with its accounting.

The asymptotic constants behind the random host are kept as configuration
because the published values push the edge probability past 1 at any
feasible n; reports always carry both the formula value and the value
actually used.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .constructions import enumerate_cliques
from .hypergraph import BLUE, RED, EdgeColoring, KUniformHypergraph

TRASH_FULL = "TrashFull"
NO_SEED = "NoSeed"
PATH_FOUND = "PathFound"


def default_beta(k: int) -> float:
    return 1.0 / (math.comb(k - 1, 2) + 1)


def default_alpha(k: int) -> float:
    return (k - 2) * default_beta(k)


def nu_constant(k: int, d: float) -> float:
    return (1.5**k) * d ** math.comb(k, 2) / ((k - 1) * (k - 2))


def lambda_constant(k: int, d: float) -> float:
    return 0.5 ** (k - 1) * d ** math.comb(k, 2) / ((k - 1) * (k - 2))


@dataclass(frozen=True)
class GnpParams:
    """G(n, p) parameters plus the tunable constants of the clique pipeline.

    p may be given directly; otherwise it is evaluated as d*(log2(n)/n)**beta.
    beta and alpha are recomputed from k unless overridden.  Logarithms are
    base 2 throughout.
    """

    n: int
    p: Optional[float] = None
    seed: int = 0
    k: int = 3
    d: Optional[float] = None
    c: Optional[float] = None
    beta: Optional[float] = None
    alpha: Optional[float] = None

    def resolved_beta(self) -> float:
        return self.beta if self.beta is not None else default_beta(self.k)

    def resolved_alpha(self) -> float:
        return self.alpha if self.alpha is not None else default_alpha(self.k)

    def resolved_c(self) -> float:
        return self.c if self.c is not None else 3.0 ** (-3 * self.k)

    def formula_p(self) -> Optional[float]:
        if self.d is None:
            return None
        return self.d * (math.log2(self.n) / self.n) ** self.resolved_beta()

    def resolved_p(self) -> float:
        if self.p is not None:
            if not 0.0 <= self.p <= 1.0:
                raise ValueError(f"p must lie in [0, 1], got {self.p}")
            return self.p
        p = self.formula_p()
        if p is None:
            raise ValueError("either p or d must be given")
        if not 0.0 <= p <= 1.0:
            raise ValueError(
                f"formula p={p:.4g} is outside [0, 1] at n={self.n}; "
                "override p directly"
            )
        return p


def gnp(params: GnpParams) -> KUniformHypergraph:
    """Seeded G(n, p): each pair is an edge independently with probability p."""
    p = params.resolved_p()
    rng = random.Random(params.seed)
    edges = [
        e for e in itertools.combinations(range(params.n), 2) if rng.random() < p
    ]
    return KUniformHypergraph.from_edges(2, params.n, edges)


# -- exact clique statistics ----------------------------------------------


@dataclass
class CliqueStatsReport:
    t_ell: dict[int, int]  # order -> clique count, orders 1..k
    deg_k: list[int]  # per-vertex count of k-cliques through it
    t_k: int
    x_ab: int
    y_ab: int
    z_c: int
    nu: Optional[float] = None
    lam: Optional[float] = None


def clique_stats(
    g: KUniformHypergraph,
    k: int,
    a_set: Iterable[int] = (),
    b_family: Iterable[Iterable[int]] = (),
    c_set: Iterable[int] = (),
    d: Optional[float] = None,
) -> CliqueStatsReport:
    """Exact clique counts on a graph plus the completion statistics for a
    disjoint family of (k-1)-cliques.

    x counts k-cliques made of a family member plus an outside vertex, y
    those completed inside A or the family's own vertices, z those meeting
    C.  The family members must be vertex-disjoint (k-1)-cliques and A must
    avoid their vertices.
    """
    if g.k != 2:
        raise ValueError("clique statistics are defined on graphs (k=2)")
    a = frozenset(a_set)
    c = frozenset(c_set)
    family = [frozenset(b) for b in b_family]
    union_b: set[int] = set()
    for b in family:
        if len(b) != k - 1:
            raise ValueError(f"family member {sorted(b)} is not a (k-1)-set")
        if union_b & b:
            raise ValueError("family members must be pairwise vertex-disjoint")
        if any(not g.is_edge(pair) for pair in itertools.combinations(sorted(b), 2)):
            raise ValueError(f"family member {sorted(b)} does not induce a clique")
        union_b |= b
    if a & union_b:
        raise ValueError("A must be disjoint from the family's vertices")

    t_ell = {ell: len(enumerate_cliques(g, ell)) for ell in range(1, k + 1)}
    k_cliques = [frozenset(q) for q in enumerate_cliques(g, k)]
    deg_k = [0] * g.n
    for q in k_cliques:
        for v in q:
            deg_k[v] += 1

    inside = a | union_b
    x = y = z = 0
    for q in k_cliques:
        if q & c:
            z += 1
        member = next((b for b in family if b <= q), None)
        if member is not None:
            (w,) = q - member
            if w in inside:
                y += 1
            else:
                x += 1
    return CliqueStatsReport(
        t_ell=t_ell,
        deg_k=deg_k,
        t_k=len(k_cliques),
        x_ab=x,
        y_ab=y,
        z_c=z,
        nu=nu_constant(k, d) if d is not None else None,
        lam=lambda_constant(k, d) if d is not None else None,
    )


@dataclass
class PropertySample:
    a_set: tuple[int, ...]
    family: tuple[tuple[int, ...], ...]
    c_set: tuple[int, ...]
    x_ab: int
    y_ab: int
    z_c: int
    ratio_ok: bool  # (k+1) * y <= x, vacuous-pass when x = y = 0
    z_ok: bool  # 4k * z <= t_k


@dataclass
class PropertyCheckReport:
    n: int
    k: int
    c: float
    t_k: int
    samples: list[PropertySample]
    ratio_pass_fraction: float
    z_pass_fraction: float
    t_k_bound: Optional[float]  # nu * n^(k-1-alpha) * log2(n)^(1+alpha)
    t_k_ok: Optional[bool]


def _random_disjoint_family(
    cliques: list[frozenset], size: int, rng: random.Random
) -> list[frozenset]:
    pool = cliques[:]
    rng.shuffle(pool)
    family: list[frozenset] = []
    used: set[int] = set()
    for q in pool:
        if len(family) == size:
            break
        if not q & used:
            family.append(q)
            used |= q
    return family


def property_check(
    g: KUniformHypergraph,
    k: int,
    c: Optional[float] = None,
    trials: int = 20,
    seed: int = 0,
    d: Optional[float] = None,
    extra_families: Iterable[Iterable[Iterable[int]]] = (),
) -> PropertyCheckReport:
    """Sampled check of the completion-ratio, intersection and total-count
    properties of a clique host.

    Full quantification over (A, family, C) is infeasible, so each trial
    draws a random disjoint family and a random A; C is the greedy
    largest-degree-first representative.  extra_families lets callers feed
    adversarial families (e.g. trash sets from procedure runs).
    """
    if c is None:
        c = 3.0 ** (-3 * k)
    rng = random.Random(seed)
    stats0 = clique_stats(g, k, d=d)
    t_k = stats0.t_k
    km1 = [frozenset(q) for q in enumerate_cliques(g, k - 1)]

    family_budget = max(1, math.floor(c * g.n))
    a_budget = max(0, math.floor(c * g.n))
    c_budget = max(0, math.floor((k - 1) * c * g.n))

    deg = g.degrees()
    greedy_c = tuple(
        sorted(
            sorted(range(g.n), key=lambda v: (-deg[v], v))[:c_budget]
        )
    )

    samples: list[PropertySample] = []
    planned: list[list[frozenset]] = [
        [frozenset(b) for b in fam] for fam in extra_families
    ]
    for _ in range(trials):
        planned.append(_random_disjoint_family(km1, family_budget, rng))
    for family in planned:
        used = {v for b in family for v in b}
        outside = [v for v in range(g.n) if v not in used]
        a_size = min(a_budget, len(outside))
        a_set = tuple(sorted(rng.sample(outside, a_size))) if a_size else ()
        st = clique_stats(g, k, a_set, family, greedy_c, d=d)
        samples.append(
            PropertySample(
                a_set=a_set,
                family=tuple(tuple(sorted(b)) for b in family),
                c_set=greedy_c,
                x_ab=st.x_ab,
                y_ab=st.y_ab,
                z_c=st.z_c,
                ratio_ok=(k + 1) * st.y_ab <= st.x_ab or (st.x_ab == 0 and st.y_ab == 0),
                z_ok=4 * k * st.z_c <= t_k,
            )
        )

    bound = None
    t_k_ok = None
    if d is not None:
        alpha = default_alpha(k)
        bound = nu_constant(k, d) * g.n ** (k - 1 - alpha) * math.log2(g.n) ** (
            1 + alpha
        )
        t_k_ok = t_k <= bound
    total = len(samples) or 1
    return PropertyCheckReport(
        n=g.n,
        k=k,
        c=c,
        t_k=t_k,
        samples=samples,
        ratio_pass_fraction=sum(s.ratio_ok for s in samples) / total,
        z_pass_fraction=sum(s.z_ok for s in samples) / total,
        t_k_bound=bound,
        t_k_ok=t_k_ok,
    )


# -- the path-growing procedure --------------------------------------------


@dataclass
class ProcedureState:
    status: str  # TrashFull | NoSeed | PathFound
    path: tuple[int, ...]
    trash: tuple[tuple[int, ...], ...]
    unused: tuple[int, ...]
    seeds: int
    extensions: int
    rewinds: int
    steps: int
    # (trashed tuple, unused snapshot at insertion) so runs can be re-checked
    trash_log: list = field(default_factory=list)


def grow_monochromatic_tight_path(
    h: KUniformHypergraph,
    coloring: EdgeColoring,
    color: str,
    m: int,
) -> ProcedureState:
    """Grow a tight path in one color, retiring dead (k-1)-tails to a trash
    set of pairwise disjoint tuples.

    Stops when the trash holds m tuples (TrashFull), when no seeding edge
    remains inside the unused set (NoSeed), or when the path itself reaches
    m vertices (PathFound).  Seed edges and extension vertices are chosen
    lexicographically least, so runs are reproducible.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    k = h.k
    colored = [e for e, c in zip(h.edges, coloring.colors) if c == color]
    colored_set = {frozenset(e) for e in colored}

    unused = set(range(h.n))
    path: list[int] = []
    trash: list[tuple[int, ...]] = []
    trash_log: list = []
    seeds = extensions = rewinds = steps = 0
    status = None

    while status is None:
        steps += 1
        if len(trash) >= m:
            status = TRASH_FULL
            break
        if not path:
            seed_edge = next((e for e in colored if unused.issuperset(e)), None)
            if seed_edge is None:
                status = NO_SEED
                break
            path = list(seed_edge)
            unused -= set(seed_edge)
            seeds += 1
            if len(path) >= m:
                status = PATH_FOUND
            continue
        tail = path[-(k - 1):]
        ext = next(
            (w for w in sorted(unused) if frozenset(tail + [w]) in colored_set),
            None,
        )
        if ext is not None:
            path.append(ext)
            unused.discard(ext)
            extensions += 1
            if len(path) >= m:
                status = PATH_FOUND
            continue
        # dead tail: retire it and rewind
        tup = tuple(sorted(tail))
        trash.append(tup)
        trash_log.append((tup, tuple(sorted(unused))))
        del path[-(k - 1):]
        rewinds += 1
        if len(trash) >= m:
            status = TRASH_FULL
            break
        if len(path) < k:
            unused |= set(path)
            path = []

    return ProcedureState(
        status=status,
        path=tuple(path),
        trash=tuple(trash),
        unused=tuple(sorted(unused)),
        seeds=seeds,
        extensions=extensions,
        rewinds=rewinds,
        steps=steps,
        trash_log=trash_log,
    )


# -- iterated procedure and red/blue accounting -----------------------------


@dataclass
class RoundRecord:
    status: str
    trash: tuple[tuple[int, ...], ...]
    a_set: tuple[int, ...]
    x: int
    y: int
    state: ProcedureState


@dataclass
class AccountingReport:
    sought_color: str
    t_sought: int  # edges of the sought color in the original host
    t_other: int
    t_k: int
    sum_x: int
    sum_y: int
    z_c: int
    c_set: tuple[int, ...]
    rounds: list[RoundRecord]
    found_path: Optional[tuple[int, ...]]
    verdict_sought_bound: Optional[bool]  # t_sought <= sum_y + z_c
    verdict_x_bound: bool  # sum_x <= k * t_other
    max_edge_x_count: int  # each edge should be x-counted at most k times
    trash_families_disjoint: bool
    round_cap: int
    round_cap_exceeded: bool


def iterated_procedure(
    h: KUniformHypergraph,
    coloring: EdgeColoring,
    color: str,
    m: int,
    round_cap: Optional[int] = None,
) -> AccountingReport:
    """Run the path-growing procedure round after round, stripping the
    sought-color edges through each full trash set, and collect the exact
    red/blue accounting.

    Terminates on NoSeed (normal), PathFound (a monochromatic tight path
    of order m exists) or when the round cap is exceeded, which is flagged
    as an anomaly rather than raised.
    """
    k = h.k
    if round_cap is None:
        round_cap = 4 * k * m
    t_sought = sum(1 for c in coloring.colors if c == color)
    t_other = h.num_edges - t_sought

    current: list[tuple[tuple[int, ...], str]] = list(zip(h.edges, coloring.colors))
    rounds: list[RoundRecord] = []
    x_counts: dict[tuple[int, ...], int] = {}
    sum_x = sum_y = 0
    z_c = 0
    c_final: tuple[int, ...] = ()
    found_path = None
    cap_exceeded = False

    while True:
        if len(rounds) >= round_cap:
            cap_exceeded = True
            break
        edges = tuple(e for e, _ in current)
        sub = KUniformHypergraph(k, h.n, edges)
        sub_coloring = EdgeColoring(sub, tuple(c for _, c in current))
        state = grow_monochromatic_tight_path(sub, sub_coloring, color, m)

        if state.status == PATH_FOUND:
            found_path = state.path
            rounds.append(
                RoundRecord(state.status, state.trash, state.path, 0, 0, state)
            )
            break

        a_set = tuple(state.path)
        x = y = 0
        inside = set(a_set) | {v for tup in state.trash for v in tup}
        for e, _c in current:
            member = next(
                (tup for tup in state.trash if set(tup).issubset(e)), None
            )
            if member is None:
                continue
            (w,) = set(e) - set(member)
            if w in inside:
                y += 1
            else:
                x += 1
                x_counts[e] = x_counts.get(e, 0) + 1
        sum_x += x
        sum_y += y
        rounds.append(RoundRecord(state.status, state.trash, a_set, x, y, state))

        if state.status == NO_SEED:
            c_final = tuple(sorted({v for tup in state.trash for v in tup}))
            z_c = sum(1 for es in h.edge_sets() if es & set(c_final))
            break

        # TrashFull: drop the sought-color edges through the trash
        trash_sets = [set(tup) for tup in state.trash]
        current = [
            (e, c)
            for e, c in current
            if not (c == color and any(t.issubset(e) for t in trash_sets))
        ]

    all_families = [set(r.trash) for r in rounds]
    disjoint = all(
        not (all_families[i] & all_families[j])
        for i in range(len(all_families))
        for j in range(i + 1, len(all_families))
    )

    return AccountingReport(
        sought_color=color,
        t_sought=t_sought,
        t_other=t_other,
        t_k=h.num_edges,
        sum_x=sum_x,
        sum_y=sum_y,
        z_c=z_c,
        c_set=c_final,
        rounds=rounds,
        found_path=found_path,
        verdict_sought_bound=(
            None if found_path is not None or cap_exceeded
            else t_sought <= sum_y + z_c
        ),
        verdict_x_bound=sum_x <= k * t_other,
        max_edge_x_count=max(x_counts.values(), default=0),
        trash_families_disjoint=disjoint,
        round_cap=round_cap,
        round_cap_exceeded=cap_exceeded,
    )
