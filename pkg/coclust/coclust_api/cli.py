"""
Command-line front end: ``coclust cluster | metrics | synth | oracle``.

Results go to standard output as one JSON object per run; logging goes to
standard error.

Exit codes: 0 success, 1 I/O or parse failure, 2 usage / configuration /
size cap, 3 token mismatch, 4 strict-budget failure.
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional

import numpy as np
from pydantic import ValidationError

from coclust_api.config import settings
from coclust_api.errors import (
    AssignmentFormatError,
    BudgetNotMetError,
    ConfigurationError,
    EdgeListParseError,
    InvalidInputError,
    TokenMismatchError,
)
from coclust_api.graph import BipartiteGraph, build_graph, read_edge_list, write_edge_list
from coclust_api.metrics import accl, cluster_size_histogram, cross_cluster_edges, gini, pair_item_clusters
from coclust_api.objective import objective_pairsum
from coclust_api.pipeline import budget_from_ratio, calibrate_gamma, cluster_graph
from coclust_api.presets import PROFILES, FrameworkPreset, get_profile, preset_scheme
from coclust_api.sketch import align_to_graph, load_assignment, save_assignment
from coclust_api.solver import DEFAULT_MAX_ITERS, NodeOrder, SolverConfig
from coclust_api.synth import brute_force_optimum, planted_bipartite, random_bipartite
from coclust_api.weighting import SchemeName, WeightScheme, compute_weights

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_CONFIG = 2
EXIT_TOKENS = 3
EXIT_BUDGET = 4

_SCHEMES = [s.value for s in SchemeName if s is not SchemeName.CUSTOM]


def _emit(payload: Dict[str, Any]) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=False) + "\n")
    sys.stdout.flush()


def _load_graph(path: str) -> BipartiteGraph:
    return build_graph(read_edge_list(path))


def cmd_cluster(args: argparse.Namespace) -> int:
    graph = _load_graph(args.edges)

    scheme = SchemeName(args.scheme)
    gamma = args.gamma
    if gamma is None and args.profile:
        gamma = get_profile(args.profile).gamma
        logger.info(f"📊 Using γ={gamma} from profile {args.profile}")
    if args.preset:
        scheme, zero_gamma = preset_scheme(FrameworkPreset(args.preset))
        if zero_gamma:
            if args.calibrate_gamma:
                raise ConfigurationError(f"preset {args.preset} fixes γ=0 and cannot be calibrated")
            gamma = 0.0
    if args.calibrate_gamma:
        gamma = 0.0
    elif gamma is None:
        raise ConfigurationError("--gamma is required unless --profile or --calibrate-gamma supplies it")

    budget = args.budget if args.budget is not None else budget_from_ratio(graph, args.ratio)
    config = SolverConfig(
        gamma=gamma,
        budget=budget,
        dim=args.dim,
        max_iters=args.max_iters,
        scheme=scheme,
        scu=args.scu,
        scu_distinct=args.scu_distinct,
        strict_budget=args.strict_budget,
        order=NodeOrder(args.order),
        seed=args.seed,
    )
    if args.calibrate_gamma:
        config = config.model_copy(update={"gamma": calibrate_gamma(graph, config)})

    result = cluster_graph(graph, config)
    save_assignment(args.out, result.assignment)
    _emit(result.summary())
    return EXIT_OK


def cmd_metrics(args: argparse.Namespace) -> int:
    graph = _load_graph(args.edges)
    assignment = align_to_graph(load_assignment(args.assignment), graph)
    joint = pair_item_clusters(graph, assignment)

    user_sizes = np.bincount(assignment.user_primary)
    item_sizes = np.bincount(assignment.item_cluster)
    histogram = cluster_size_histogram(joint)
    sizes = list(histogram.values())
    weights = compute_weights(graph, WeightScheme.of(args.scheme))

    _emit({
        "gini_user": gini(user_sizes[user_sizes > 0]),
        "gini_item": gini(item_sizes[item_sizes > 0]),
        "gini_joint": gini(sizes),
        "accl": accl(graph, joint),
        "cross_edges": cross_cluster_edges(graph, joint),
        "objective": objective_pairsum(graph, weights, joint, args.gamma),
        "gamma": args.gamma,
        "scheme": args.scheme,
        "k_user": assignment.k_user,
        "k_item": assignment.k_item,
        "histogram": {
            "clusters": len(sizes),
            "min": min(sizes),
            "max": max(sizes),
            "mean": float(np.mean(sizes)),
            "singletons": sum(1 for s in sizes if s == 1),
        },
    })
    return EXIT_OK


def cmd_synth(args: argparse.Namespace) -> int:
    truth = None
    if args.profile:
        profile = get_profile(args.profile)
        graph = random_bipartite(
            max(1, round(profile.n_users * args.scale)),
            max(1, round(profile.n_items * args.scale)),
            max(1, round(profile.n_interactions * args.scale)),
            args.seed,
        )
    elif args.kind == "random":
        if args.n_users is None or args.n_items is None or args.n_edges is None:
            raise ConfigurationError("--kind random needs --n-users, --n-items and --n-edges")
        graph = random_bipartite(args.n_users, args.n_items, args.n_edges, args.seed)
    else:
        graph, truth = planted_bipartite(
            args.blocks, args.users_per_block, args.items_per_block, args.pu, args.po, args.seed,
        )

    if args.out == "-":
        write_edge_list(graph.token_pairs(), sys.stdout)
        sys.stdout.flush()
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as f:
            write_edge_list(graph.token_pairs(), f)
        logger.info(f"💾 Edge list written to {args.out}")

    if args.truth:
        if truth is None:
            raise ConfigurationError("--truth is only available for planted graphs")
        with open(args.truth, "w", encoding="utf-8", newline="\n") as f:
            for token, block in zip(graph.user_tokens, truth[:graph.n_users].tolist()):
                f.write(f"U\t{token}\t{block}\n")
            for token, block in zip(graph.item_tokens, truth[graph.n_users:].tolist()):
                f.write(f"I\t{token}\t{block}\n")
        logger.info(f"💾 Planted blocks written to {args.truth}")

    if args.out != "-":
        _emit({"users": graph.n_users, "items": graph.n_items, "edges": graph.n_edges, "out": args.out})
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    graph = _load_graph(args.edges)
    weights = compute_weights(graph, WeightScheme.of(args.scheme))
    labels, score = brute_force_optimum(graph, weights, args.gamma, max_nodes=args.max_nodes)
    nu = graph.n_users
    _emit({
        "score": score,
        "users": dict(zip(graph.user_tokens, labels[:nu].tolist())),
        "items": dict(zip(graph.item_tokens, labels[nu:].tolist())),
    })
    return EXIT_OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coclust", description="Balanced co-clustering for embedding sketches.")
    parser.add_argument("--verbose", "-v", action="store_true", help="log at DEBUG level")
    sub = parser.add_subparsers(dest="command", required=True)

    cluster = sub.add_parser("cluster", help="co-cluster a graph and write the sketch assignment")
    cluster.add_argument("--edges", required=True)
    cluster.add_argument("--out", required=True)
    cluster.add_argument("--gamma", type=float)
    cluster.add_argument("--calibrate-gamma", action="store_true",
                         help="search the largest γ whose run still fits the budget (ignores --gamma)")
    budget = cluster.add_mutually_exclusive_group(required=True)
    budget.add_argument("--budget", type=int, help="codebook rows B")
    budget.add_argument("--ratio", type=float, help="codebook rows as a share of n_users + n_items")
    cluster.add_argument("--dim", type=int)
    cluster.add_argument("--max-iters", type=int, default=DEFAULT_MAX_ITERS)
    cluster.add_argument("--scheme", choices=_SCHEMES, default=SchemeName.HWS.value)
    cluster.add_argument("--scu", action="store_true", help="give every user a secondary cluster")
    cluster.add_argument("--scu-distinct", action="store_true", help="secondary cluster must differ from the primary")
    cluster.add_argument("--strict-budget", action="store_true")
    cluster.add_argument("--order", choices=[o.value for o in NodeOrder], default=NodeOrder.BY_INDEX.value)
    cluster.add_argument("--seed", type=int, default=0)
    cluster.add_argument("--profile", choices=sorted(PROFILES), help="take γ from a dataset profile")
    cluster.add_argument("--preset", choices=[p.value for p in FrameworkPreset],
                         help="framework instantiation (overrides --scheme)")
    cluster.set_defaults(handler=cmd_cluster)

    metrics = sub.add_parser("metrics", help="evaluate a saved assignment against its graph")
    metrics.add_argument("--edges", required=True)
    metrics.add_argument("--assignment", required=True)
    metrics.add_argument("--gamma", type=float, default=0.0)
    metrics.add_argument("--scheme", choices=_SCHEMES, default=SchemeName.HWS.value)
    metrics.set_defaults(handler=cmd_metrics)

    synth = sub.add_parser("synth", help="write a synthetic edge list")
    synth.add_argument("--kind", choices=["planted", "random"], default="planted")
    synth.add_argument("--blocks", type=_positive_int, default=2)
    synth.add_argument("--users-per-block", type=_positive_int, default=5)
    synth.add_argument("--items-per-block", type=_positive_int, default=5)
    synth.add_argument("--pu", type=float, default=0.8, help="edge probability inside a block")
    synth.add_argument("--po", type=float, default=0.05, help="edge probability across blocks")
    synth.add_argument("--n-users", type=_positive_int)
    synth.add_argument("--n-items", type=_positive_int)
    synth.add_argument("--n-edges", type=_positive_int)
    synth.add_argument("--profile", choices=sorted(PROFILES), help="random graph at a dataset's size")
    synth.add_argument("--scale", type=float, default=1.0)
    synth.add_argument("--seed", type=int, default=0)
    synth.add_argument("--out", default="-", help="edge-list path, '-' for standard output")
    synth.add_argument("--truth", help="write planted block labels here")
    synth.set_defaults(handler=cmd_synth)

    oracle = sub.add_parser("oracle", help="exhaustive optimum of a tiny graph")
    oracle.add_argument("--edges", required=True)
    oracle.add_argument("--gamma", type=float, required=True)
    oracle.add_argument("--scheme", choices=_SCHEMES, default=SchemeName.HWS.value)
    oracle.add_argument("--max-nodes", type=int, default=settings.ORACLE_MAX_NODES)
    oracle.set_defaults(handler=cmd_oracle)

    return parser


def _run(handler: Callable[[argparse.Namespace], int], args: argparse.Namespace) -> int:
    try:
        return handler(args)
    except BudgetNotMetError as e:
        logger.error(f"❌ {e}")
        _emit({"budget_met": False, "report": e.report.model_dump()})
        return EXIT_BUDGET
    except TokenMismatchError as e:
        logger.error(f"❌ Token mismatch: {e}")
        return EXIT_TOKENS
    except ValidationError as e:
        logger.error(f"❌ Invalid configuration: {e}")
        return EXIT_CONFIG
    except (ConfigurationError, InvalidInputError) as e:
        logger.error(f"❌ {e}")
        return EXIT_CONFIG
    except (EdgeListParseError, AssignmentFormatError) as e:
        logger.error(f"❌ Parse error: {e}")
        return EXIT_IO
    except OSError as e:
        logger.error(f"❌ I/O error: {e}")
        return EXIT_IO


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_CONFIG

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.LOG_LEVEL,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    logger.info(f"🚀 coclust {args.command}")
    return _run(args.handler, args)


if __name__ == "__main__":
    sys.exit(main())
