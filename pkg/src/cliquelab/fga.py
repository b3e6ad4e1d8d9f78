"""Generational GA with family-wise elitist selection (Zhang-style FGA).

Each generation shuffles the population, pairs neighbours, and for every
pair produces two offspring by uniform crossover followed by inversion
mutation and repair + extend. Of the four family members the two fittest
survive.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .graph import Graph, is_maximal_clique
from .kernel import (
    Chromosome,
    DegreeMode,
    ExtendMode,
    TieBreak,
    extend,
    fitness,
    random_chromosome,
    repair,
)
from .results import GenerationLog, RunResult


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class FgaConfig:
    population_size: int = 50
    max_generations: int = 100
    target_size: int | None = None
    seed: int = 0
    extend_mode: ExtendMode = ExtendMode.GREEDY_HIGHEST_DEGREE
    degree_mode: DegreeMode = DegreeMode.INDUCED
    tie_break: TieBreak = TieBreak.RANDOM
    # "offspring": on equal fitness prefer offspring, then random; "random": random only
    selection_tie: str = "offspring"

    def __post_init__(self):
        if self.population_size < 2 or self.population_size % 2:
            raise ConfigError(f"population_size must be even and >= 2, got {self.population_size}")
        if self.max_generations < 1:
            raise ConfigError(f"max_generations must be >= 1, got {self.max_generations}")
        if self.target_size is not None and self.target_size < 1:
            raise ConfigError("target_size must be positive")
        if self.selection_tie not in ("offspring", "random"):
            raise ConfigError(f"unknown selection_tie {self.selection_tie!r}")
        object.__setattr__(self, "extend_mode", ExtendMode(self.extend_mode))
        object.__setattr__(self, "degree_mode", DegreeMode(self.degree_mode))
        object.__setattr__(self, "tie_break", TieBreak(self.tie_break))

    @property
    def chromosome_budget(self) -> int:
        """Chromosomes a full-length run evaluates: initial population plus two offspring per pair."""
        return self.population_size * (1 + self.max_generations)


def uniform_crossover(
    p1: Chromosome,
    p2: Chromosome,
    mask: np.ndarray | None = None,
    rng: np.random.Generator | None = None,
) -> tuple[Chromosome, Chromosome]:
    """Swap the parents' genes wherever ``mask`` is set."""
    p1 = np.asarray(p1, dtype=bool)
    p2 = np.asarray(p2, dtype=bool)
    if p1.shape != p2.shape:
        raise ValueError("parents differ in length")
    if mask is None:
        if rng is None:
            raise ValueError("need a mask or an rng")
        mask = rng.random(p1.shape[0]) < 0.5
    mask = np.asarray(mask, dtype=bool)
    if mask.shape != p1.shape:
        raise ValueError("mask length differs from parents")
    return np.where(mask, p2, p1), np.where(mask, p1, p2)


def inversion_mutation(
    c: Chromosome,
    rng: np.random.Generator | None = None,
    points: tuple[int, int] | None = None,
) -> Chromosome:
    """Reverse the gene segment between two cut points (inclusive)."""
    c = np.asarray(c, dtype=bool)
    n = c.shape[0]
    if n < 1:
        raise ValueError("cannot mutate an empty chromosome")
    if points is None:
        if rng is None:
            raise ValueError("need cut points or an rng")
        a, b = rng.integers(n, size=2)
        i, j = int(min(a, b)), int(max(a, b))
    else:
        i, j = points
        if not (0 <= i <= j < n):
            raise ValueError(f"cut points {points} invalid for length {n}")
    out = c.copy()
    out[i : j + 1] = c[i : j + 1][::-1]
    return out


def _process_offspring(g: Graph, child: Chromosome, cfg: FgaConfig, rng: np.random.Generator) -> Chromosome:
    child = inversion_mutation(child, rng)
    child = repair(g, child, rng, tie_break=cfg.tie_break, degree_mode=cfg.degree_mode)
    return extend(g, child, cfg.extend_mode, rng, tie_break=cfg.tie_break, check=False)


def select_family(
    fits: list[int], is_offspring: list[bool], rng: np.random.Generator, prefer_offspring: bool = True
) -> list[int]:
    """Indices of the two fittest family members."""
    noise = rng.random(len(fits))
    order = sorted(
        range(len(fits)),
        key=lambda i: (-fits[i], (not is_offspring[i]) if prefer_offspring else 0, noise[i]),
    )
    return order[:2]


def _snapshot(
    generation: int,
    population: list[Chromosome],
    best_fitness: int,
    best: Chromosome | None,
    chromosomes: int,
) -> GenerationLog:
    return GenerationLog(
        generation=generation,
        population=[np.flatnonzero(c).tolist() for c in population],
        best_fitness=best_fitness,
        best=[] if best is None else np.flatnonzero(best).tolist(),
        chromosomes=chromosomes,
    )


class _Tracker:
    """Running chromosome count and best-so-far."""

    def __init__(self):
        self.count = 0
        self.best_fitness = -1
        self.best: Chromosome | None = None
        self.best_at = 0

    def see(self, c: Chromosome, fit: int) -> None:
        self.count += 1
        if fit > self.best_fitness:
            self.best_fitness = fit
            self.best = c
            self.best_at = self.count


def evolve_generation(
    g: Graph,
    population: list[Chromosome],
    cfg: FgaConfig,
    rng: np.random.Generator,
    tracker: _Tracker | None = None,
    generation: int = 1,
) -> tuple[list[Chromosome], GenerationLog]:
    if len(population) != cfg.population_size:
        raise ConfigError(f"population has {len(population)} members, config says {cfg.population_size}")
    if tracker is None:
        tracker = _Tracker()
        for c in population:
            tracker.see(c, fitness(g, c))
    fits = [int(c.sum()) for c in population]
    order = rng.permutation(len(population))
    survivors: list[Chromosome] = []
    for k in range(0, len(order), 2):
        a, b = int(order[k]), int(order[k + 1])
        o1, o2 = uniform_crossover(population[a], population[b], rng=rng)
        o1 = _process_offspring(g, o1, cfg, rng)
        o2 = _process_offspring(g, o2, cfg, rng)
        f1, f2 = int(o1.sum()), int(o2.sum())
        tracker.see(o1, f1)
        tracker.see(o2, f2)
        family = [population[a], population[b], o1, o2]
        keep = select_family(
            [fits[a], fits[b], f1, f2],
            [False, False, True, True],
            rng,
            prefer_offspring=cfg.selection_tie == "offspring",
        )
        survivors.extend(family[i] for i in keep)
    return survivors, _snapshot(generation, survivors, tracker.best_fitness, tracker.best, tracker.count)


def initial_population(g: Graph, cfg: FgaConfig, rng: np.random.Generator) -> list[Chromosome]:
    pop = []
    for _ in range(cfg.population_size):
        c = random_chromosome(g.n, rng)
        c = repair(g, c, rng, tie_break=cfg.tie_break, degree_mode=cfg.degree_mode)
        pop.append(extend(g, c, cfg.extend_mode, rng, tie_break=cfg.tie_break, check=False))
    return pop


def run_fga(
    g: Graph,
    cfg: FgaConfig,
    log: Callable[[GenerationLog], None] | None = None,
) -> RunResult:
    """Run the GA; ``log`` receives one GenerationLog per generation, starting at generation 0."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(cfg.seed)
    tracker = _Tracker()
    population = initial_population(g, cfg, rng)
    for c in population:
        tracker.see(c, int(c.sum()))
    if log is not None:
        log(_snapshot(0, population, tracker.best_fitness, tracker.best, tracker.count))

    generations = 0
    target = cfg.target_size
    while generations < cfg.max_generations and not (target is not None and tracker.best_fitness >= target):
        generations += 1
        population, entry = evolve_generation(g, population, cfg, rng, tracker, generation=generations)
        if log is not None:
            log(entry)

    best = np.flatnonzero(tracker.best).tolist()
    if not is_maximal_clique(g, best):
        raise RuntimeError(f"FGA produced a non-maximal clique on {g.name}")
    return RunResult(
        graph=g.name,
        algorithm="fga",
        seed=cfg.seed,
        clique=[v + 1 for v in best],
        size=len(best),
        chromosomes_generated=tracker.count,
        chromosomes_to_best=tracker.best_at,
        iterations=generations,
        wall_time_ms=(time.perf_counter() - t0) * 1000.0,
    )
