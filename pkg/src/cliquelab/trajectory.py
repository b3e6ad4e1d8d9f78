"""How often the final best clique's vertices occur in each generation's population.

Generation logs are stored as JSON lines, one record per generation:
``{"generation": g, "population": [[1-based ids], ...], "best_fitness": f,
"best": [1-based ids], "chromosomes": count}``.
"""

from __future__ import annotations

import csv
import json
import os
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

import numpy as np

from .results import GenerationLog


class LogWriter:
    """Callable sink that streams GenerationLog records to a JSONL file."""

    def __init__(self, path: str | os.PathLike):
        self._fh = open(path, "w", encoding="utf-8")

    def __call__(self, entry: GenerationLog) -> None:
        self._fh.write(json.dumps(entry.to_record(), separators=(",", ":")) + "\n")

    def close(self) -> None:
        self._fh.close()

    def __enter__(self) -> LogWriter:
        return self

    def __exit__(self, *exc) -> None:
        self.close()


def read_log(path: str | os.PathLike) -> list[GenerationLog]:
    with open(path, encoding="utf-8") as fh:
        return [GenerationLog.from_record(json.loads(line)) for line in fh if line.strip()]


@dataclass
class Trajectory:
    best: list[int]
    generations: list[int]
    # counts[g, j]: population members at generation g containing best[j]
    counts: np.ndarray
    mean: np.ndarray
    population_size: int

    def discovery_index(self, logs: Sequence[GenerationLog]) -> int:
        """Row index of the first generation whose best-so-far reached the final best fitness."""
        target = len(self.best)
        for i, entry in enumerate(logs):
            if entry.best_fitness >= target:
                return i
        raise ValueError("best fitness never reached in the logs")


def node_frequency_trajectory(logs: Sequence[GenerationLog], best: Iterable[int]) -> Trajectory:
    """Per-generation counts of each best-clique vertex across the population (0-based ids)."""
    best = sorted(set(best))
    if not logs:
        raise ValueError("no generation logs")
    if not best:
        raise ValueError("best vertex set is empty")
    pos = {v: j for j, v in enumerate(best)}
    counts = np.zeros((len(logs), len(best)), dtype=np.int64)
    for i, entry in enumerate(logs):
        for chrom in entry.population:
            for v in chrom:
                j = pos.get(v)
                if j is not None:
                    counts[i, j] += 1
    return Trajectory(
        best=best,
        generations=[e.generation for e in logs],
        counts=counts,
        mean=counts.mean(axis=1),
        population_size=max(len(e.population) for e in logs),
    )


def write_trajectory_csv(t: Trajectory, out: TextIO) -> None:
    """Node rows carry (generation, node, count); summary rows carry (generation, mean)."""
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["generation", "node", "count", "mean"])
    for i, gen in enumerate(t.generations):
        for j, v in enumerate(t.best):
            w.writerow([gen, v + 1, int(t.counts[i, j]), ""])
    for i, gen in enumerate(t.generations):
        w.writerow([gen, "", "", f"{t.mean[i]:.6f}"])
