"""Command line front end: seeded, reproducible runs with JSON reports.

Exit codes: 0 success, 1 bad input, 2 budget exhausted / Unknown verdict.
Reports embed the tool version, the effective config and the seed; the
timestamp field is the only part excluded from byte-for-byte determinism.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Optional

from . import __version__
from .arrow import (
    ARROWS_NODE_CAP,
    ArrowResult,
    arrows,
    degree_threshold_coloring,
    vhigh_vlow_coloring,
)
from .constructions import (
    GadgetSpec,
    SteinerParams,
    binary_three_tree,
    blowup_path_host,
    clique,
    clique_hypergraph,
    ell_path,
    gadget,
    gadget_family,
    greedy_partial_steiner,
    random_ell_tree,
    star_tree,
)
from .errors import BudgetExceededError, CapsTooSmallError
from .hypergraph import (
    BLUE,
    RED,
    EdgeColoring,
    KUniformHypergraph,
    automorphism_count,
    are_isomorphic,
    independence_number,
)
from .embedding import find_copy
from .randomlab import (
    GnpParams,
    clique_stats,
    gnp,
    iterated_procedure,
)
from .search import (
    ALL_STRATEGIES,
    ramsey_number_small,
    size_ramsey_exact_tiny,
    size_ramsey_upper,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2


def _resolve_seed(value: Optional[int]) -> int:
    if value is not None:
        return value
    env = os.environ.get("RF_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise ValueError(f"RF_SEED is not an integer: {env!r}") from exc
    return 0


def _load_hypergraph(path: str) -> KUniformHypergraph:
    with open(path) as fh:
        return KUniformHypergraph.from_dict(json.load(fh))


def _load_coloring(path: str, host: KUniformHypergraph) -> EdgeColoring:
    with open(path) as fh:
        colors = json.load(fh)
    return EdgeColoring.from_list(host, colors)


def _parse_color(name: str) -> str:
    table = {"r": RED, "red": RED, "b": BLUE, "blue": BLUE}
    try:
        return table[name.lower()]
    except KeyError:
        raise ValueError(f"unknown color {name!r}; use red or blue")


def _write_json(path: Optional[str], payload) -> None:
    text = json.dumps(payload, indent=2)
    if path is None:
        print(text)
    else:
        with open(path, "w") as fh:
            fh.write(text + "\n")


def _report(command: str, config: dict, seed: Optional[int], body: dict) -> dict:
    out = {
        "version": __version__,
        "command": command,
        "config": config,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
    }
    if seed is not None:
        out["seed"] = seed
    out.update(body)
    return out


# -- construct --------------------------------------------------------------

CONSTRUCT_KINDS = (
    "ell-path",
    "clique",
    "ell-tree",
    "star-tree",
    "binary-tree",
    "gadget",
    "gadget-family",
    "steiner",
    "blowup",
    "clique-hypergraph",
)


def _cmd_construct(args) -> int:
    seed = _resolve_seed(args.seed)
    kind = args.kind
    if kind == "ell-path":
        h = ell_path(args.k, args.l, args.n)
    elif kind == "clique":
        h = clique(args.k, args.n)
    elif kind == "ell-tree":
        h = random_ell_tree(args.k, args.l, args.n, seed)
    elif kind == "star-tree":
        h = star_tree(args.k, args.n)
    elif kind == "binary-tree":
        h = binary_three_tree(args.t)
    elif kind == "gadget":
        import random as _random

        leaves = list(range(2**args.t))
        _random.Random(seed).shuffle(leaves)
        h = gadget(GadgetSpec(args.t, tuple(leaves)))
    elif kind == "gadget-family":
        members, union = gadget_family(args.t, args.q, seed)
        payload = {
            "members": [m.to_dict() for m in members],
            "union": union.to_dict(),
        }
        _write_json(args.out, payload)
        return EXIT_OK
    elif kind == "steiner":
        result = greedy_partial_steiner(SteinerParams(args.t, args.k, args.n, seed))
        h = result.hypergraph
    elif kind == "blowup":
        if args.host is None:
            raise ValueError("blowup needs --host (a graph JSON file)")
        g = _load_hypergraph(args.host)
        h = blowup_path_host(g, args.k, args.l)
    elif kind == "clique-hypergraph":
        if args.host is None:
            raise ValueError("clique-hypergraph needs --host (a graph JSON file)")
        g = _load_hypergraph(args.host)
        h = clique_hypergraph(g, args.k)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    _write_json(args.out, h.to_dict())
    return EXIT_OK


# -- arrows -----------------------------------------------------------------


def _cmd_arrows(args) -> int:
    host = _load_hypergraph(args.host)
    pattern = _load_hypergraph(args.pattern)
    verdict = arrows(host, pattern, args.budget)
    body: dict = {"result": verdict.result.value, "nodes": verdict.nodes}
    if verdict.certificate is not None:
        body["certificate"] = verdict.certificate.to_list()
        if args.certificate:
            _write_json(args.certificate, verdict.certificate.to_list())
    report = _report(
        "arrows",
        {"host": args.host, "pattern": args.pattern, "budget": args.budget},
        None,
        body,
    )
    _write_json(args.out, report)
    return EXIT_BUDGET if verdict.result == ArrowResult.UNKNOWN else EXIT_OK


# -- embed ------------------------------------------------------------------


def _cmd_embed(args) -> int:
    pattern = _load_hypergraph(args.pattern)
    host = _load_hypergraph(args.host)
    coloring = None
    color = None
    if args.color is not None:
        color = _parse_color(args.color)
        if args.coloring is None:
            raise ValueError("--color requires --coloring")
        coloring = _load_coloring(args.coloring, host)
    emb = find_copy(pattern, host, coloring, color, args.budget)
    if emb is None:
        print("none")
    else:
        print(json.dumps(list(emb.mapping)))
    return EXIT_OK


# -- color ------------------------------------------------------------------


def _majority_coloring(host: KUniformHypergraph) -> EdgeColoring:
    # Red iff the edge puts at least ceil(k/2) vertices in the top-degree half
    deg = host.degrees()
    ranked = sorted(range(host.n), key=lambda v: (-deg[v], v))
    top = set(ranked[: host.n // 2])
    need = -(-host.k // 2)
    colors = tuple(
        RED if len(top.intersection(e)) >= need else BLUE for e in host.edges
    )
    return EdgeColoring(host, colors)


def _random_coloring(host: KUniformHypergraph, seed: int) -> EdgeColoring:
    import random as _random

    rng = _random.Random(seed)
    return EdgeColoring(
        host, tuple(rng.choice((RED, BLUE)) for _ in host.edges)
    )


def _cmd_color(args) -> int:
    host = _load_hypergraph(args.host)
    seed = _resolve_seed(args.seed)
    if args.scheme == "random":
        coloring = _random_coloring(host, seed)
    elif args.scheme == "majority":
        coloring = _majority_coloring(host)
    elif args.scheme == "degree-threshold":
        if args.n is None:
            raise ValueError("degree-threshold needs --n (target tree order)")
        coloring = degree_threshold_coloring(host, args.n)
    elif args.scheme == "vhigh-vlow":
        members, _ = gadget_family(args.t, args.q, seed)
        coloring, _report_obj = vhigh_vlow_coloring(host, args.d, members)
    else:
        raise ValueError(f"unknown scheme {args.scheme!r}")
    _write_json(args.out, coloring.to_list())
    return EXIT_OK


# -- ramsey / size-ramsey ----------------------------------------------------


def _cmd_ramsey(args) -> int:
    pattern = _load_hypergraph(args.pattern)
    n = ramsey_number_small(pattern, args.cap, args.budget)
    report = _report(
        "ramsey",
        {"pattern": args.pattern, "cap": args.cap, "budget": args.budget},
        None,
        {"ramsey_number": n, "result": "Found" if n is not None else "Unknown"},
    )
    _write_json(args.out, report)
    return EXIT_OK if n is not None else EXIT_BUDGET


def _cmd_size_ramsey(args) -> int:
    pattern = _load_hypergraph(args.pattern)
    seed = _resolve_seed(args.seed)
    if args.mode == "upper":
        strategies = (
            tuple(args.strategies.split(",")) if args.strategies else ALL_STRATEGIES
        )
        bound = size_ramsey_upper(
            pattern,
            strategies,
            node_cap=args.budget,
            ramsey_cap=args.ramsey_cap,
            max_host_edges=args.max_host_edges,
            seed=seed,
        )
    else:
        bound = size_ramsey_exact_tiny(
            pattern, vcap=args.vcap, ecap=args.ecap, node_cap=args.budget
        )
    body = {
        "lower": bound.lower,
        "upper": bound.upper,
        "witness_host": (
            bound.witness_host.to_dict() if bound.witness_host else None
        ),
        "methods": bound.methods,
        "caps": bound.caps,
    }
    report = _report(
        f"size-ramsey {args.mode}", {"pattern": args.pattern}, seed, body
    )
    _write_json(args.out, report)
    if args.mode == "upper" and bound.upper is None:
        return EXIT_BUDGET
    return EXIT_OK


# -- randomlab ----------------------------------------------------------------


def _cmd_randomlab(args) -> int:
    seed = _resolve_seed(args.seed)
    params = GnpParams(n=args.n, p=args.p, seed=seed, k=args.k, d=args.d)
    graph = gnp(params)
    host = clique_hypergraph(graph, args.k)
    if args.coloring:
        coloring = _load_coloring(args.coloring, host)
    elif args.coloring_scheme == "majority":
        coloring = _majority_coloring(host)
    else:
        coloring = _random_coloring(host, seed)
    stats = clique_stats(graph, args.k, d=args.d)
    account = iterated_procedure(host, coloring, BLUE, args.m)
    body = {
        "graph_edges": graph.num_edges,
        "clique_stats": {
            "t_ell": {str(l): c for l, c in stats.t_ell.items()},
            "t_k": stats.t_k,
            "deg_k_max": max(stats.deg_k, default=0),
            "nu": stats.nu,
            "lambda": stats.lam,
        },
        "rounds": [
            {
                "status": r.status,
                "trash": [list(t) for t in r.trash],
                "a_set": list(r.a_set),
                "x": r.x,
                "y": r.y,
            }
            for r in account.rounds
        ],
        "accounting": {
            "sought_color": account.sought_color,
            "t_sought": account.t_sought,
            "t_other": account.t_other,
            "t_k": account.t_k,
            "sum_x": account.sum_x,
            "sum_y": account.sum_y,
            "z_c": account.z_c,
            "c_set": list(account.c_set),
            "found_path": (
                list(account.found_path) if account.found_path else None
            ),
            "verdict_sought_bound": account.verdict_sought_bound,
            "verdict_x_bound": account.verdict_x_bound,
            "max_edge_x_count": account.max_edge_x_count,
            "trash_families_disjoint": account.trash_families_disjoint,
            "round_cap": account.round_cap,
            "round_cap_exceeded": account.round_cap_exceeded,
        },
    }
    config = {
        "n": args.n,
        "k": args.k,
        "p": args.p,
        "d": args.d,
        "m": args.m,
        "coloring": args.coloring,
        "coloring_scheme": args.coloring_scheme,
    }
    _write_json(args.out, _report("randomlab pipeline", config, seed, body))
    return EXIT_BUDGET if account.round_cap_exceeded else EXIT_OK


# -- gadget audit -------------------------------------------------------------


def _cmd_gadget_audit(args) -> int:
    seed = _resolve_seed(args.seed)
    tree = binary_three_tree(args.t)
    members, union = gadget_family(args.t, args.q, seed)
    iso = [
        [bool(are_isomorphic(a, b)) for b in members] for a in members
    ]
    alpha = independence_number(union)
    body = {
        "tree_vertices": tree.n,
        "tree_edges": tree.num_edges,
        "rooted_automorphisms": automorphism_count(tree, fixed=(0,)),
        "family_size": len(members),
        "pairwise_isomorphic": iso,
        "max_degree": [max(m.degrees(), default=0) for m in members],
        "union_vertices": union.n,
        "independence_number": alpha,
        "independence_bound": 8 * union.n / 9,
        "independence_ok": 9 * alpha <= 8 * union.n,
    }
    config = {"t": args.t, "q": args.q}
    _write_json(args.out, _report("gadget-audit", config, seed, body))
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramseyforge",
        description="size-Ramsey constructions, arrow decisions and experiments",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a hypergraph and emit its JSON")
    p.add_argument("kind", choices=CONSTRUCT_KINDS)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--host", help="input graph JSON (blowup, clique-hypergraph)")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("arrows", help="decide the arrow relation host -> pattern")
    p.add_argument("--host", required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--budget", type=int, default=ARROWS_NODE_CAP)
    p.add_argument("--certificate", help="write a NotArrows certificate here")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_arrows)

    p = sub.add_parser("embed", help="find one copy of pattern in host")
    p.add_argument("--pattern", required=True)
    p.add_argument("--host", required=True)
    p.add_argument("--coloring")
    p.add_argument("--color")
    p.add_argument("--budget", type=int, default=10_000_000)
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("color", help="emit a coloring for a host")
    p.add_argument(
        "scheme", choices=("random", "majority", "degree-threshold", "vhigh-vlow")
    )
    p.add_argument("--host", required=True)
    p.add_argument("--n", type=int, help="target tree order (degree-threshold)")
    p.add_argument("--d", type=int, default=3, help="degree threshold (vhigh-vlow)")
    p.add_argument("--t", type=int, default=2, help="gadget depth (vhigh-vlow)")
    p.add_argument("--q", type=int, default=2, help="gadget count (vhigh-vlow)")
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("ramsey", help="least N with complete-host arrowing")
    p.add_argument("--pattern", required=True)
    p.add_argument("--cap", type=int, required=True)
    p.add_argument("--budget", type=int, default=ARROWS_NODE_CAP)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_ramsey)

    p = sub.add_parser("size-ramsey", help="size-Ramsey bounds with witnesses")
    p.add_argument("mode", choices=("upper", "exact"))
    p.add_argument("--pattern", required=True)
    p.add_argument("--strategies", help="comma list (upper mode)")
    p.add_argument("--ramsey-cap", type=int, default=8)
    p.add_argument("--max-host-edges", type=int, default=18)
    p.add_argument("--vcap", type=int, default=9)
    p.add_argument("--ecap", type=int, default=12)
    p.add_argument("--budget", type=int, default=ARROWS_NODE_CAP)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_size_ramsey)

    p = sub.add_parser("randomlab", help="random clique-host experiment pipeline")
    p.add_argument("mode", choices=("pipeline",))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--p", type=float)
    p.add_argument("--d", type=float)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--coloring", help="coloring JSON for the clique hypergraph")
    p.add_argument(
        "--coloring-scheme", choices=("random", "majority"), default="random"
    )
    p.add_argument("--out")
    p.set_defaults(func=_cmd_randomlab)

    p = sub.add_parser("gadget-audit", help="verify the gadget family's facts")
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gadget_audit)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CapsTooSmallError as exc:
        print(f"caps too small: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, json.JSONDecodeError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
