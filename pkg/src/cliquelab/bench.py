"""Multi-graph, multi-run experiments and their reports.

Every (graph, algorithm, run) cell is seeded with ``base_seed + run`` so any
cell can be reproduced on its own. Cells may run in worker processes; the
report is assembled in a fixed order so the output does not depend on the
worker count.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Any

from .fga import ConfigError, FgaConfig, run_fga
from .graph import Graph, density, graph_name_from_path, is_maximal_clique, load_dimacs
from .mc import McConfig, run_mc
from .reference import lookup
from .results import RunResult

log = logging.getLogger(__name__)

WORKERS_ENV = "CLIQUELAB_WORKERS"


class HardFailure(RuntimeError):
    """A solver returned a clique that does not verify; indicates a bug."""


@dataclass(frozen=True)
class AlgorithmSpec:
    id: str
    solver: str  # "fga" or "mc"
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.solver not in ("fga", "mc"):
            raise ConfigError(f"unknown solver {self.solver!r} for algorithm {self.id!r}")

    def config(self, seed: int):
        params = dict(self.params, seed=seed)
        if self.solver == "fga":
            return FgaConfig(**params)
        return McConfig(**params)


@dataclass(frozen=True)
class ExperimentSpec:
    graphs: list[str]
    algorithms: list[AlgorithmSpec]
    runs: int = 3
    base_seed: int = 0

    def __post_init__(self):
        if self.runs < 1:
            raise ConfigError("runs must be >= 1")
        ids = [a.id for a in self.algorithms]
        if len(set(ids)) != len(ids):
            raise ConfigError(f"duplicate algorithm ids in {ids}")
        # validate parameters up front rather than inside a worker
        for a in self.algorithms:
            a.config(self.base_seed)

    @classmethod
    def from_dict(cls, d: dict[str, Any], base_dir: str | os.PathLike = ".") -> ExperimentSpec:
        """Build from the JSON spec layout; relative graph paths resolve against ``base_dir``.

        An MC entry without ``budget`` gets the chromosome budget of the first
        FGA entry, so both solvers are compared at equal cost.
        """
        unknown = set(d) - {"graphs", "algorithms", "runs", "base_seed", "graph_dir"}
        if unknown:
            raise ConfigError(f"unknown spec keys {sorted(unknown)}")
        graph_dir = os.path.join(os.fspath(base_dir), d.get("graph_dir", ""))
        graphs = [os.path.normpath(os.path.join(graph_dir, p)) for p in d.get("graphs", [])]
        raw = d.get("algorithms", [])
        fga_budget = None
        for a in raw:
            if a.get("solver") == "fga":
                params = {k: v for k, v in a.items() if k not in ("id", "solver")}
                fga_budget = FgaConfig(**params).chromosome_budget
                break
        algos = []
        for a in raw:
            a = dict(a)
            try:
                aid, solver = a.pop("id"), a.pop("solver")
            except KeyError as e:
                raise ConfigError(f"algorithm entry missing {e}") from None
            if solver == "mc" and "budget" not in a and fga_budget is not None:
                a["budget"] = fga_budget
            algos.append(AlgorithmSpec(aid, solver, a))
        return cls(graphs, algos, int(d.get("runs", 3)), int(d.get("base_seed", 0)))

    @classmethod
    def load(cls, path: str | os.PathLike) -> ExperimentSpec:
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh), base_dir=os.path.dirname(os.path.abspath(path)))

    def describe(self) -> dict[str, Any]:
        """Fully resolved configuration, including defaulted parameters such as prune probability."""
        algos = []
        for a in self.algorithms:
            cfg = asdict(a.config(self.base_seed))
            cfg.pop("seed")
            algos.append({"id": a.id, "solver": a.solver, "config": _plain(cfg)})
        return {
            "graphs": list(self.graphs),
            "algorithms": algos,
            "runs": self.runs,
            "base_seed": self.base_seed,
            "seed_policy": "base_seed + run_index",
        }


def _plain(obj):
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if hasattr(obj, "value"):
        return obj.value
    return obj


@dataclass
class GraphInfo:
    name: str
    path: str
    n: int | None = None
    m: int | None = None
    density: float | None = None
    error: str | None = None


@dataclass
class Aggregate:
    graph: str
    algorithm: str
    solver: str
    runs: int
    max_size: int
    mean_chromosomes_to_best: int
    mean_chromosomes_generated: int
    best_known: int | None
    delta: int | None
    published_max: int | None
    published_chromosomes: int | None


@dataclass
class Report:
    spec: dict[str, Any]
    graphs: list[GraphInfo]
    runs: list[RunResult]
    failures: list[dict[str, Any]]
    aggregates: list[Aggregate]

    def to_dict(self) -> dict[str, Any]:
        return {
            "spec": self.spec,
            "graphs": [asdict(g) for g in self.graphs],
            "runs": [r.to_dict() for r in self.runs],
            "failures": self.failures,
            "aggregates": [asdict(a) for a in self.aggregates],
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> Report:
        return cls(
            spec=d["spec"],
            graphs=[GraphInfo(**g) for g in d["graphs"]],
            runs=[RunResult.from_dict(r) for r in d["runs"]],
            failures=list(d["failures"]),
            aggregates=[Aggregate(**a) for a in d["aggregates"]],
        )


def round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


@lru_cache(maxsize=8)
def _load(path: str) -> Graph:
    return load_dimacs(path)


def _run_cell(path: str, algo: AlgorithmSpec, seed: int) -> RunResult:
    g = _load(path)
    cfg = algo.config(seed)
    result = run_fga(g, cfg) if algo.solver == "fga" else run_mc(g, cfg)
    result.algorithm = algo.id
    return result


def aggregate(runs: list[RunResult], solver: str) -> Aggregate:
    """Best-of-runs size and mean chromosome counts for one (graph, algorithm) group."""
    ref = lookup(runs[0].graph)
    max_size = max(r.size for r in runs)
    best_known = ref.best_known if ref else None
    fig = ref.results if ref else None
    return Aggregate(
        graph=runs[0].graph,
        algorithm=runs[0].algorithm,
        solver=solver,
        runs=len(runs),
        max_size=max_size,
        mean_chromosomes_to_best=round_half_up(sum(r.chromosomes_to_best for r in runs) / len(runs)),
        mean_chromosomes_generated=round_half_up(sum(r.chromosomes_generated for r in runs) / len(runs)),
        best_known=best_known,
        delta=None if best_known is None else max_size - best_known,
        published_max=(fig.fga_max if solver == "fga" else fig.mc_max) if fig else None,
        published_chromosomes=(fig.fga_chromosomes if solver == "fga" else fig.mc_chromosomes) if fig else None,
    )


def default_workers() -> int:
    return int(os.environ.get(WORKERS_ENV, "1"))


def run_experiment(spec: ExperimentSpec, workers: int | None = None) -> Report:
    workers = default_workers() if workers is None else workers
    infos: list[GraphInfo] = []
    loaded: dict[str, Graph] = {}
    for path in spec.graphs:
        info = GraphInfo(name=graph_name_from_path(path), path=path)
        try:
            g = _load(path)
        except (OSError, ValueError) as e:
            info.error = f"{type(e).__name__}: {e}"
            log.error("cannot load %s: %s", path, info.error)
        else:
            loaded[path] = g
            info.name, info.n, info.m = g.name, g.n, g.edge_count
            info.density = density(g) if g.n >= 2 else None
        infos.append(info)

    cells = [
        (path, algo, spec.base_seed + run)
        for path in spec.graphs
        for algo in spec.algorithms
        for run in range(spec.runs)
    ]
    failures = [
        {"graph": info.name, "algorithm": algo.id, "run": run, "error": info.error}
        for info in infos
        if info.error
        for algo in spec.algorithms
        for run in range(spec.runs)
    ]
    todo = [c for c in cells if c[0] in loaded]

    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_cell, *zip(*todo)))
    else:
        results = [_run_cell(*c) for c in todo]

    for (path, algo, seed), r in zip(todo, results):
        if not is_maximal_clique(loaded[path], [v - 1 for v in r.clique]) or len(r.clique) != r.size:
            raise HardFailure(f"{algo.id} seed {seed} on {r.graph}: clique {r.clique} does not verify")

    aggregates = []
    i = 0
    for path in spec.graphs:
        if path not in loaded:
            continue
        for algo in spec.algorithms:
            group = results[i : i + spec.runs]
            i += spec.runs
            aggregates.append(aggregate(group, algo.solver))

    return Report(spec.describe(), infos, results, failures, aggregates)


CSV_COLUMNS = [
    "graph", "n", "m", "density", "algorithm", "max", "mean_chromosomes", "best_known", "delta",
]


def emit_report(report: Report, fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n").encode()
    if fmt == "csv":
        info = {g.name: g for g in report.graphs}
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for a in report.aggregates:
            g = info.get(a.graph)
            dens = "" if g is None or g.density is None else f"{g.density:.3f}"
            w.writerow([
                a.graph,
                g.n if g else "",
                g.m if g else "",
                dens,
                a.algorithm,
                a.max_size,
                a.mean_chromosomes_to_best,
                "" if a.best_known is None else a.best_known,
                "" if a.delta is None else a.delta,
            ])
        return buf.getvalue().encode()
    raise ValueError(f"unknown report format {fmt!r}")


def parse_report(data: bytes | str) -> Report:
    return Report.from_dict(json.loads(data))


@dataclass
class GraphComparison:
    graph: str
    referenced: bool
    best_known: int | None = None
    fga_max: int | None = None
    mc_max: int | None = None
    fga_vs_best: str | None = None  # "matches" or "below"
    mc_vs_best: str | None = None
    winner: str | None = None  # "FGA>MC", "MC>FGA" or "tie"
    fewer_chromosomes: str | None = None  # "fga", "mc" or "tie"


def compare_reference(report: Report) -> tuple[list[GraphComparison], dict[str, int]]:
    """Classify each graph the way the published comparison colours its rows.

    FGA and MC bests are taken over every algorithm of that solver kind.
    """
    by_graph: dict[str, list[Aggregate]] = {}
    for a in report.aggregates:
        by_graph.setdefault(a.graph, []).append(a)

    rows = []
    for graph, aggs in by_graph.items():
        ref = lookup(graph)
        if ref is None:
            rows.append(GraphComparison(graph, referenced=False))
            continue
        fga = [a for a in aggs if a.solver == "fga"]
        mc = [a for a in aggs if a.solver == "mc"]
        row = GraphComparison(graph, referenced=True, best_known=ref.best_known)
        if fga:
            row.fga_max = max(a.max_size for a in fga)
            row.fga_vs_best = "matches" if row.fga_max >= ref.best_known else "below"
        if mc:
            row.mc_max = max(a.max_size for a in mc)
            row.mc_vs_best = "matches" if row.mc_max >= ref.best_known else "below"
        if fga and mc:
            if row.fga_max > row.mc_max:
                row.winner = "FGA>MC"
            elif row.mc_max > row.fga_max:
                row.winner = "MC>FGA"
            else:
                row.winner = "tie"
            f_chrom = min(a.mean_chromosomes_to_best for a in fga if a.max_size == row.fga_max)
            m_chrom = min(a.mean_chromosomes_to_best for a in mc if a.max_size == row.mc_max)
            row.fewer_chromosomes = "fga" if f_chrom < m_chrom else "mc" if m_chrom < f_chrom else "tie"
        rows.append(row)

    summary = {
        "graphs": len(rows),
        "unreferenced": sum(not r.referenced for r in rows),
        "fga_matches_best": sum(r.fga_vs_best == "matches" for r in rows),
        "fga_below_best": sum(r.fga_vs_best == "below" for r in rows),
        "mc_matches_best": sum(r.mc_vs_best == "matches" for r in rows),
        "mc_below_best": sum(r.mc_vs_best == "below" for r in rows),
        "fga_wins": sum(r.winner == "FGA>MC" for r in rows),
        "mc_wins": sum(r.winner == "MC>FGA" for r in rows),
        "ties": sum(r.winner == "tie" for r in rows),
        "fga_fewer_chromosomes": sum(r.fewer_chromosomes == "fga" for r in rows),
        "mc_fewer_chromosomes": sum(r.fewer_chromosomes == "mc" for r in rows),
    }
    return rows, summary


def format_comparison(rows: list[GraphComparison], summary: dict[str, int]) -> str:
    lines = []
    for r in rows:
        if not r.referenced:
            lines.append(f"{r.graph}: unreferenced")
            continue
        parts = [f"best-known {r.best_known}"]
        if r.fga_max is not None:
            parts.append(f"FGA {r.fga_max} ({r.fga_vs_best})")
        if r.mc_max is not None:
            parts.append(f"MC {r.mc_max} ({r.mc_vs_best})")
        if r.winner:
            parts.append(r.winner)
        if r.fewer_chromosomes:
            parts.append(f"fewer chromosomes: {r.fewer_chromosomes}")
        lines.append(f"{r.graph}: " + ", ".join(parts))
    lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in summary.items()))
    return "\n".join(lines)
