"""Monte Carlo clique search: independent random maximal cliques, keep the largest.

No candidate influences another; there is no selection or adaptation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .fga import ConfigError, FgaConfig
from .graph import Graph, is_maximal_clique
from .kernel import (
    Chromosome,
    DegreeMode,
    ExtendMode,
    TieBreak,
    extend,
    prune,
    random_chromosome,
    repair,
)
from .results import GenerationLog, RunResult


class Method(str, Enum):
    RANDOM_BITS = "random"
    EDGE_SEED = "edge"
    VERTEX_NEIGHBORHOOD = "vertex"
    MIXED = "mixed"


_CYCLE = (Method.RANDOM_BITS, Method.EDGE_SEED, Method.VERTEX_NEIGHBORHOOD)


@dataclass(frozen=True)
class McConfig:
    method: Method = Method.MIXED
    budget: int = FgaConfig().chromosome_budget
    prune_probability: float = 0.3
    target_size: int | None = None
    seed: int = 0
    extend_mode: ExtendMode = ExtendMode.STOCHASTIC_UNIFORM
    degree_mode: DegreeMode = DegreeMode.INDUCED
    tie_break: TieBreak = TieBreak.RANDOM

    def __post_init__(self):
        if self.budget < 1:
            raise ConfigError(f"budget must be >= 1, got {self.budget}")
        if not 0.0 <= self.prune_probability <= 1.0:
            raise ConfigError(f"prune_probability {self.prune_probability} outside [0, 1]")
        if self.target_size is not None and self.target_size < 1:
            raise ConfigError("target_size must be positive")
        object.__setattr__(self, "method", Method(self.method))
        object.__setattr__(self, "extend_mode", ExtendMode(self.extend_mode))
        object.__setattr__(self, "degree_mode", DegreeMode(self.degree_mode))
        object.__setattr__(self, "tie_break", TieBreak(self.tie_break))

    @classmethod
    def matching(cls, fga: FgaConfig, **overrides) -> McConfig:
        """Config with the same chromosome budget as a full FGA run."""
        overrides.setdefault("budget", fga.chromosome_budget)
        return cls(**overrides)


def method_for(cfg: McConfig, index: int) -> Method:
    if cfg.method is Method.MIXED:
        return _CYCLE[index % 3]
    return cfg.method


def generate_candidate(g: Graph, method: Method, cfg: McConfig, rng: np.random.Generator) -> Chromosome:
    """One maximal clique built by the given generation method."""
    method = Method(method)
    if method is Method.MIXED:
        raise ValueError("MIXED is a schedule, pick a concrete method")
    if method is Method.EDGE_SEED:
        if g.edge_count == 0:
            raise ValueError(f"{g.name} has no edges to seed from")
        u, v = g.edges[rng.integers(g.edge_count)]
        c = np.zeros(g.n, dtype=bool)
        c[[u, v]] = True
    else:
        if method is Method.RANDOM_BITS:
            c = random_chromosome(g.n, rng)
        else:
            v = rng.integers(g.n)
            c = g.matrix[v].copy()
            c[v] = True
        c = repair(g, c, rng, tie_break=cfg.tie_break, degree_mode=cfg.degree_mode)
        c = prune(g, c, cfg.prune_probability, rng, check=False)
    return extend(g, c, cfg.extend_mode, rng, tie_break=cfg.tie_break, check=False)


def run_mc(
    g: Graph,
    cfg: McConfig,
    log: Callable[[GenerationLog], None] | None = None,
) -> RunResult:
    """Generate up to ``cfg.budget`` candidates; ``log`` gets one record per candidate (1-based index)."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(cfg.seed)
    best: Chromosome | None = None
    best_fitness = -1
    best_at = 0
    count = 0
    for i in range(cfg.budget):
        c = generate_candidate(g, method_for(cfg, i), cfg, rng)
        fit = int(c.sum())
        count += 1
        if fit > best_fitness:
            best, best_fitness, best_at = c, fit, count
        if log is not None:
            log(
                GenerationLog(
                    generation=count,
                    population=[np.flatnonzero(c).tolist()],
                    best_fitness=best_fitness,
                    best=np.flatnonzero(best).tolist(),
                    chromosomes=count,
                )
            )
        if cfg.target_size is not None and best_fitness >= cfg.target_size:
            break

    vertices = np.flatnonzero(best).tolist()
    if not is_maximal_clique(g, vertices):
        raise RuntimeError(f"MC produced a non-maximal clique on {g.name}")
    return RunResult(
        graph=g.name,
        algorithm=f"mc-{cfg.method.value}",
        seed=cfg.seed,
        clique=[v + 1 for v in vertices],
        size=len(vertices),
        chromosomes_generated=count,
        chromosomes_to_best=best_at,
        iterations=count,
        wall_time_ms=(time.perf_counter() - t0) * 1000.0,
    )
