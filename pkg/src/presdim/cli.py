"""Command-line interface: generate, analyze, embed, verify, doubling, experiment.

Exit codes: 0 success, 1 negative verification (a failed certificate or an
exhausted probabilistic construction), 2 usage or I/O errors. All randomness
sits behind an explicit --seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from typing import Sequence

from . import bounds, construct, experiment, metric, preserve
from .config import DEFAULT_LIMITS
from .graph import (
    GenerationError,
    NAMED_FAMILIES,
    gen_gnp,
    gen_kregular,
    gen_named,
    gen_planted_partition,
    read_edge_list,
    write_edge_list,
)

__all__ = ["main"]

CONSTRUCTIONS = (
    "spm",
    "collapse",
    "prop6",
    "frechet",
    "frechet-q",
    "schoenberg",
    "simplex-jl",
)


def _need_seed(args: argparse.Namespace) -> int:
    if args.seed is None:
        raise ValueError("this operation is randomized; pass --seed")
    return args.seed


def _cmd_generate(args: argparse.Namespace) -> int:
    family = args.family
    if family == "gnp":
        g = gen_gnp(args.n, args.p, _need_seed(args))
    elif family == "kregular":
        g = gen_kregular(args.n, args.k, _need_seed(args))
    elif family == "planted":
        if args.k <= 0 or args.n % args.k:
            raise ValueError("planted generation needs n divisible by --k blocks")
        g = gen_planted_partition([args.n // args.k] * args.k, args.p, args.q, _need_seed(args))
    else:
        g = gen_named(family, args.n)
    write_edge_list(g, args.out)
    print(f"wrote {args.out}: n={g.n} edges={g.edge_count}")
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = read_edge_list(args.graph)
    limits = DEFAULT_LIMITS
    if args.mode == "greedy":
        limits = replace(DEFAULT_LIMITS, exact_cover=0)
    rep = bounds.report(g, args.alpha, limits=limits)
    print(bounds.format_report(rep))
    doc = bounds.report_to_json(rep)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(doc + "\n")
    return 0


def _cmd_embed(args: argparse.Namespace) -> int:
    g = read_edge_list(args.graph)
    name = args.construction
    if name == "spm":
        res = construct.shortest_path_metric(g)
    elif name == "collapse":
        res = construct.clique_collapse_linf(g, args.alpha)
    elif name == "prop6":
        res = construct.pseudo_metric_embedding(g, args.alpha)
    elif name == "frechet":
        res = construct.frechet_embedding(g)
    elif name == "frechet-q":
        res = construct.frechet_quotient_embedding(g)
    elif name == "schoenberg":
        res = construct.schoenberg_embedding(g)
    elif name == "simplex-jl":
        res = construct.simplex_embedding(g, args.alpha, _need_seed(args))
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown construction {name}")
    doc = construct.result_to_json(res)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(doc + "\n")
        print(f"wrote {args.out}: source={res.source} dim_bound={res.claimed_dim_bound}")
    else:
        print(doc)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = read_edge_list(args.graph)
    with open(args.embedding) as fh:
        res = construct.result_from_json(fh.read())
    cert = preserve.check(g, res, args.alpha)
    doc = preserve.certificate_to_json(cert)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(doc + "\n")
    print(doc)
    return 0 if cert.passed else 1


def _cmd_doubling(args: argparse.Namespace) -> int:
    if args.metric:
        m = metric.read_metric(args.metric)
    elif args.points:
        m = metric.induced_metric(metric.read_points(args.points))
    else:
        with open(args.embedding) as fh:
            res = construct.result_from_json(fh.read())
        target = res.target
        m = metric.induced_metric(target) if isinstance(target, metric.PointSet) else target
    d = metric.doubling_dimension(m, mode=args.mode)
    print(json.dumps({"mode": args.mode, "n": m.n, "doubling_dimension": d}))
    return 0


def _cmd_experiment(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "sweep":
        if not args.config:
            raise ValueError("sweep needs --config")
        cfg = experiment.parse_config(args.config)
        records = experiment.sweep(cfg, jobs=args.jobs)
        if args.out:
            experiment.write_csv(records, args.out)
            print(f"wrote {args.out}: {len(records)} rows")
        else:
            sys.stdout.write(experiment.rows_to_csv(records))
        return 0
    seed = _need_seed(args)
    trials = args.trials
    if trials is None:
        trials = 200 if kind in ("clique", "theorem2") else 500
    if kind == "diameter2":
        res = experiment.mc_diameter2(args.n, args.q, trials, seed, jobs=args.jobs)
    elif kind == "clique":
        res = experiment.mc_clique_number(args.n, trials, seed, jobs=args.jobs)
    elif kind == "theorem2":
        res = experiment.mc_theorem2(args.n, args.alpha, trials, seed, jobs=args.jobs)
    elif kind == "planted":
        res = experiment.mc_planted(
            args.n, args.k, args.p, args.q, args.alpha, trials, seed, jobs=args.jobs
        )
    else:  # pragma: no cover
        raise ValueError(f"unknown experiment {kind}")
    doc = json.dumps(res.to_dict(), indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(doc + "\n")
    print(doc)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="presdim",
        description="neighborhood-preserving embeddings: bounds, constructions, certificates",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("generate", help="write a graph edge list")
    p.add_argument("--family", required=True, choices=NAMED_FAMILIES + ("gnp", "kregular", "planted"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--q", type=float, default=0.0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("analyze", help="bound report for a graph")
    p.add_argument("graph")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--mode", choices=("exact", "greedy"), default="exact",
                   help="greedy skips the exact clique cover regardless of size")
    p.add_argument("--out", default=None, help="write the report JSON here")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("embed", help="build a certified embedding")
    p.add_argument("graph")
    p.add_argument("--construction", required=True, choices=CONSTRUCTIONS)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("verify", help="certify an embedding at a level")
    p.add_argument("graph")
    p.add_argument("embedding")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("doubling", help="doubling dimension of a metric or embedding")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--metric")
    src.add_argument("--points")
    src.add_argument("--embedding")
    p.add_argument("--mode", choices=("exact", "greedy"), default="exact")
    p.set_defaults(func=_cmd_doubling)

    p = sub.add_parser("experiment", help="seeded Monte Carlo experiments")
    p.add_argument("--kind", required=True, choices=("diameter2", "clique", "theorem2", "planted", "sweep"))
    p.add_argument("--n", type=int, default=40)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--q", type=float, default=0.5)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--trials", type=int, default=None,
                   help="default 500, or 200 for the exact-clique experiments")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--config", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_experiment)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GenerationError, construct.JLProjectionError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
