"""Command-line entry point.

Results go to stdout, timing and progress to stderr. Usage errors exit 2,
runtime failures exit 1.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time

from . import bench
from .fga import ConfigError, FgaConfig, run_fga
from .graph import DimacsParseError, density, load_dimacs
from .kernel import DegreeMode, ExtendMode
from .mc import McConfig, Method, run_mc
from .oracle import OracleLimits, OracleLimitError, OracleTimeout, max_clique_exact
from .trajectory import LogWriter, node_frequency_trajectory, read_log, write_trajectory_csv


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def cmd_parse_check(args) -> int:
    g = load_dimacs(args.file)
    dens = f"{density(g):.3f}" if g.n >= 2 else "n/a"
    print(f"name {g.name}")
    print(f"n {g.n}")
    print(f"m {g.edge_count}")
    print(f"density {dens}")
    return 0


def cmd_oracle(args) -> int:
    g = load_dimacs(args.file)
    t0 = time.perf_counter()
    size, witness = max_clique_exact(g, OracleLimits(args.max_vertices, args.timeout))
    _err(f"oracle: {(time.perf_counter() - t0) * 1000:.1f} ms")
    print(size)
    print(" ".join(str(v + 1) for v in witness))
    return 0


def cmd_solve(args) -> int:
    g = load_dimacs(args.graph)
    extend_mode = ExtendMode(args.extend) if args.extend else None
    if args.algo == "fga":
        kw = dict(seed=args.seed, target_size=args.target, degree_mode=DegreeMode(args.degree))
        if args.pop is not None:
            kw["population_size"] = args.pop
        if args.gens is not None:
            kw["max_generations"] = args.gens
        if extend_mode:
            kw["extend_mode"] = extend_mode
        cfg = FgaConfig(**kw)
        runner = run_fga
    else:
        fga_kw = {}
        if args.pop is not None:
            fga_kw["population_size"] = args.pop
        if args.gens is not None:
            fga_kw["max_generations"] = args.gens
        kw = dict(
            seed=args.seed,
            target_size=args.target,
            method=Method(args.method),
            degree_mode=DegreeMode(args.degree),
            budget=args.budget if args.budget is not None else FgaConfig(**fga_kw).chromosome_budget,
        )
        if args.prune is not None:
            kw["prune_probability"] = args.prune
        if extend_mode:
            kw["extend_mode"] = extend_mode
        cfg = McConfig(**kw)
        runner = run_mc

    if args.log:
        with LogWriter(args.log) as sink:
            result = runner(g, cfg, log=sink)
    else:
        result = runner(g, cfg)
    _err(
        f"{result.algorithm}: {result.wall_time_ms:.0f} ms, "
        f"{result.chromosomes_generated} chromosomes, best after {result.chromosomes_to_best}"
    )
    print(result.size)
    print(" ".join(map(str, result.clique)))
    return 0


def cmd_bench(args) -> int:
    spec = bench.ExperimentSpec.load(args.spec)
    workers = args.workers if args.workers is not None else bench.default_workers()
    t0 = time.perf_counter()
    report = bench.run_experiment(spec, workers=workers)
    os.makedirs(args.out, exist_ok=True)
    for fmt in ("csv", "json"):
        with open(os.path.join(args.out, f"report.{fmt}"), "wb") as fh:
            fh.write(bench.emit_report(report, fmt))
    rows, summary = bench.compare_reference(report)
    print(bench.format_comparison(rows, summary))
    for f in report.failures:
        _err(f"failed: {f['graph']} {f['algorithm']} run {f['run']}: {f['error']}")
    _err(f"bench: {time.perf_counter() - t0:.1f} s with {workers} worker(s)")
    return 0


def cmd_analyze(args) -> int:
    logs = read_log(args.log)
    if not logs:
        raise ValueError(f"{args.log} contains no records")
    best = logs[-1].best
    traj = node_frequency_trajectory(logs, best)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        write_trajectory_csv(traj, fh)
    idx = traj.discovery_index(logs)
    print(f"best size {len(best)} first reached at generation {traj.generations[idx]}")
    print(f"mean frequency at discovery {traj.mean[idx]:.3f}, at final generation {traj.mean[-1]:.3f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cliquelab", description="Maximum clique GA / Monte Carlo toolkit")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="run one solver on one graph")
    s.add_argument("--graph", required=True)
    s.add_argument("--algo", required=True, choices=["fga", "mc"])
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--pop", type=int, help="FGA population size (also sets the default MC budget)")
    s.add_argument("--gens", type=int, help="FGA generation limit (also sets the default MC budget)")
    s.add_argument("--budget", type=int, help="MC chromosome budget")
    s.add_argument("--method", default="mixed", choices=[m.value for m in Method])
    s.add_argument("--prune", type=float, help="MC prune probability")
    s.add_argument("--target", type=int, help="stop once a clique of this size is found")
    s.add_argument("--extend", choices=[m.value for m in ExtendMode])
    s.add_argument("--degree", default="induced", choices=[m.value for m in DegreeMode])
    s.add_argument("--log", help="write generation / candidate records to this JSONL file")
    s.set_defaults(func=cmd_solve)

    b = sub.add_parser("bench", help="run an experiment spec")
    b.add_argument("--spec", required=True)
    b.add_argument("--out", required=True)
    b.add_argument("--workers", type=int, help=f"worker processes (default ${bench.WORKERS_ENV} or 1)")
    b.set_defaults(func=cmd_bench)

    o = sub.add_parser("oracle", help="exact maximum clique for small graphs")
    o.add_argument("file")
    o.add_argument("--max-vertices", type=int, default=40)
    o.add_argument("--timeout", type=float, default=60.0)
    o.set_defaults(func=cmd_oracle)

    a = sub.add_parser("analyze", help="best-clique node frequency per generation")
    a.add_argument("--log", required=True)
    a.add_argument("--out", required=True)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("parse-check", help="validate a DIMACS file")
    c.add_argument("file")
    c.set_defaults(func=cmd_parse_check)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (
        OSError,
        DimacsParseError,
        ConfigError,
        OracleLimitError,
        OracleTimeout,
        bench.HardFailure,
        RuntimeError,
        ValueError,
    ) as e:
        _err(f"error: {e}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
