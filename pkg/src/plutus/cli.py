"""Command-line front end: generate instances, solve, verify, compare to
the oracle, benchmark.

Exit codes: 0 ok; 2 parse/input error; 3 preflight failure (disconnected
or not m-connected input); 4 infeasible phase; 5 iteration cap exceeded;
6 verification failure.  The seed falls back to the PLUTUS_SEED
environment variable, then to 0.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence

from .errors import (
    DisconnectedInputError,
    EmptyGraphError,
    GraphInputError,
    GraphNotMConnectedError,
    Infeasible2ConnectivityError,
    Infeasible3ConnectivityError,
    InfeasibleKDominanceError,
    IterationCapExceededError,
    OracleSizeError,
)
from .geometry import random_geometric
from .graph import is_connected, is_m_connected
from .pipeline import PlutusConfig, run_plutus, timed_run
from .serialize import (
    dumps,
    load_graph,
    manifest_to_dict,
    oracle_to_dict,
    read_json,
    report_to_dict,
    result_from_dict,
    result_to_dict,
    to_dot,
    udg_to_dict,
    write_json,
)
from .verify import backbone_stretch, brute_force_min_mcds, is_m_connected_k_dominating

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PREFLIGHT = 3
EXIT_INFEASIBLE = 4
EXIT_ITERATION_CAP = 5
EXIT_VERIFY_FAILED = 6

_PREFLIGHT_ERRORS = (GraphNotMConnectedError, DisconnectedInputError, EmptyGraphError)
_INFEASIBLE_ERRORS = (
    InfeasibleKDominanceError,
    Infeasible2ConnectivityError,
    Infeasible3ConnectivityError,
)


def _default_seed(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("PLUTUS_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise GraphInputError(f"PLUTUS_SEED must be an integer, got {env!r}") from exc
    return 0


def _config_from(args: argparse.Namespace) -> PlutusConfig:
    return PlutusConfig(
        k=args.k,
        m=args.m,
        max_augmentation_iterations=args.max_iters,
        strict_k_dominance=getattr(args, "strict", False),
    )


def _config_echo(cfg: PlutusConfig) -> dict:
    return {
        "k": cfg.k,
        "m": cfg.m,
        "max_augmentation_iterations": cfg.max_augmentation_iterations,
        "strict": cfg.strict_k_dominance,
    }


def _cmd_generate(args: argparse.Namespace) -> int:
    seed = _default_seed(args.seed)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    outputs = []
    for offset in range(args.count):
        instance = random_geometric(args.n, args.radius, seed + offset)
        name = f"udg_n{args.n}_r{args.radius:g}_s{seed + offset}.json"
        write_json(out_dir / name, udg_to_dict(instance))
        outputs.append(name)
    write_json(
        out_dir / "manifest.json",
        manifest_to_dict(
            "generate",
            seed,
            [],
            outputs,
            {"n": args.n, "radius": args.radius, "count": args.count},
        ),
    )
    print(f"wrote {len(outputs)} instances to {out_dir}")
    return EXIT_OK


def _cmd_solve(args: argparse.Namespace) -> int:
    g, _ = load_graph(args.input)
    cfg = _config_from(args)
    result = run_plutus(g, cfg)
    payload = result_to_dict(result, cfg)
    text = dumps(payload)
    outputs = []
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        outputs.append(args.out)
        write_json(
            Path(args.out).with_suffix(".manifest.json"),
            manifest_to_dict("solve", None, [str(args.input)], outputs, _config_echo(cfg)),
        )
    else:
        sys.stdout.write(text)
    if args.dot:
        Path(args.dot).write_text(
            to_dot(g, result.roles, result.dominating_set), encoding="utf-8"
        )
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    g, _ = load_graph(args.graph)
    backbone, k_file, m_file = result_from_dict(read_json(args.result))
    k = args.k if args.k is not None else k_file
    m = args.m if args.m is not None else m_file
    if any(v >= g.node_count or v < 0 for v in backbone):
        raise GraphInputError("result references nodes outside the graph")
    report = is_m_connected_k_dominating(g, backbone, k, m)
    stretch = None
    if report.overall:
        stretch = backbone_stretch(g, backbone)
        if stretch[0] > args.stretch_threshold:
            print(
                f"warning: max stretch {stretch[0]:.3f} exceeds "
                f"soft threshold {args.stretch_threshold:g}",
                file=sys.stderr,
            )
    sys.stdout.write(dumps(report_to_dict(report, stretch)))
    return EXIT_OK if report.overall else EXIT_VERIFY_FAILED


def _cmd_oracle(args: argparse.Namespace) -> int:
    g, _ = load_graph(args.graph)
    result = brute_force_min_mcds(g, args.k, args.m, args.size_cap)
    sys.stdout.write(dumps(oracle_to_dict(result, args.k, args.m)))
    return EXIT_OK


def _parse_int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise GraphInputError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_seed_range(text: str) -> list[int]:
    """Either 'a..b' (inclusive) or a comma-separated list."""
    if ".." in text:
        lo, _, hi = text.partition("..")
        try:
            return list(range(int(lo), int(hi) + 1))
        except ValueError as exc:
            raise GraphInputError(f"bad seed range {text!r}") from exc
    return _parse_int_list(text)


def _cmd_bench(args: argparse.Namespace) -> int:
    ns = _parse_int_list(args.n)
    seeds = _parse_seed_range(args.seeds) if args.seeds else [_default_seed(args.seed)]
    cfg = PlutusConfig(k=args.k, m=args.m, max_augmentation_iterations=args.max_iters)
    rows = []
    for n in ns:
        for seed in seeds:
            instance = random_geometric(n, args.radius, seed)
            g = instance.graph()
            row: dict = {"n": n, "seed": seed}
            if not is_connected(g):
                row.update(status="skipped", note="disconnected")
            elif args.m >= 2 and not is_m_connected(g, range(n), args.m):
                row.update(status="skipped", note=f"not {args.m}-connected")
            else:
                result, micros = timed_run(g, cfg)
                report = is_m_connected_k_dominating(
                    g, result.dominating_set, args.k, args.m
                )
                stretch, _ = backbone_stretch(g, result.dominating_set)
                row.update(
                    status="ok",
                    backbone=len(result.dominating_set),
                    phase_sizes={p.name: p.size for p in result.phase_trace},
                    phase_micros=micros,
                    verified=report.overall,
                    max_stretch=round(stretch, 4),
                )
                if n <= 14:
                    oracle = brute_force_min_mcds(g, args.k, args.m)
                    row["ratio"] = (
                        round(len(result.dominating_set) / oracle.optimum_size, 4)
                        if oracle.feasible
                        else None
                    )
            rows.append(row)
    solved = [r for r in rows if r["status"] == "ok"]
    summary = {
        "instances": len(rows),
        "solved": len(solved),
        "skipped": len(rows) - len(solved),
        "mean_backbone": (
            round(sum(r["backbone"] for r in solved) / len(solved), 3) if solved else None
        ),
        "all_verified": all(r["verified"] for r in solved) if solved else True,
        "max_stretch": max((r["max_stretch"] for r in solved), default=None),
    }
    ratios = [r["ratio"] for r in solved if r.get("ratio") is not None]
    if ratios:
        summary["mean_ratio"] = round(sum(ratios) / len(ratios), 4)
        summary["max_ratio"] = max(ratios)
    _print_bench_table(rows, summary)
    if args.out:
        write_json(args.out, {"schema": 1, "rows": rows, "summary": summary})
    return EXIT_OK


def _print_bench_table(rows: list[dict], summary: dict) -> None:
    header = f"{'n':>6} {'seed':>6} {'status':>8} {'|D|':>5} {'verified':>9} {'stretch':>8} {'ratio':>7}"
    print(header)
    print("-" * len(header))
    for row in rows:
        if row["status"] != "ok":
            print(
                f"{row['n']:>6} {row['seed']:>6} {row['status']:>8} "
                f"{'-':>5} {'-':>9} {'-':>8} {'-':>7}  ({row['note']})"
            )
            continue
        ratio = row.get("ratio")
        print(
            f"{row['n']:>6} {row['seed']:>6} {row['status']:>8} "
            f"{row['backbone']:>5} {str(row['verified']):>9} "
            f"{row['max_stretch']:>8.3f} {ratio if ratio is not None else '-':>7}"
        )
    print("-" * len(header))
    print(
        f"instances={summary['instances']} solved={summary['solved']} "
        f"skipped={summary['skipped']} all_verified={summary['all_verified']}"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plutus",
        description="Construct and verify m-connected k-dominating backbones.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="write seeded unit-disk instances")
    p_gen.add_argument("-n", type=int, required=True, help="nodes per instance")
    p_gen.add_argument("-r", "--radius", type=float, required=True)
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("--count", type=int, default=1)
    p_gen.add_argument("--out", default=".", help="output directory")
    p_gen.set_defaults(func=_cmd_generate)

    p_solve = sub.add_parser("solve", help="run the pipeline on a graph file")
    p_solve.add_argument("input")
    p_solve.add_argument("-k", type=int, default=1)
    p_solve.add_argument("-m", type=int, default=1, choices=(1, 2, 3))
    p_solve.add_argument("--out", default=None, help="result JSON path")
    p_solve.add_argument("--dot", default=None, help="also write a DOT rendering")
    p_solve.add_argument("--strict", action="store_true", help="strict k-dominance")
    p_solve.add_argument("--max-iters", type=int, default=None)
    p_solve.set_defaults(func=_cmd_solve)

    p_verify = sub.add_parser("verify", help="check a result file against its graph")
    p_verify.add_argument("graph")
    p_verify.add_argument("result")
    p_verify.add_argument("-k", type=int, default=None)
    p_verify.add_argument("-m", type=int, default=None, choices=(1, 2, 3))
    p_verify.add_argument("--stretch-threshold", type=float, default=5.0)
    p_verify.set_defaults(func=_cmd_verify)

    p_oracle = sub.add_parser("oracle", help="exhaustive optimum for small graphs")
    p_oracle.add_argument("graph")
    p_oracle.add_argument("-k", type=int, default=1)
    p_oracle.add_argument("-m", type=int, default=1, choices=(1, 2, 3))
    p_oracle.add_argument("--size-cap", type=int, default=None)
    p_oracle.set_defaults(func=_cmd_oracle)

    p_bench = sub.add_parser("bench", help="solve+verify a seeded corpus")
    p_bench.add_argument("-n", required=True, help="comma-separated node counts")
    p_bench.add_argument("-r", "--radius", type=float, required=True)
    p_bench.add_argument("--seeds", default=None, help="a..b range or comma list")
    p_bench.add_argument("--seed", type=int, default=None)
    p_bench.add_argument("-k", type=int, default=1)
    p_bench.add_argument("-m", type=int, default=1, choices=(1, 2, 3))
    p_bench.add_argument("--max-iters", type=int, default=None)
    p_bench.add_argument("--out", default=None, help="JSON summary path")
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except OracleSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except _PREFLIGHT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PREFLIGHT
    except _INFEASIBLE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except IterationCapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ITERATION_CAP
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
