from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass
class RunResult:
    """Outcome of one solver run. ``clique`` holds 1-based DIMACS vertex ids."""

    graph: str
    algorithm: str
    seed: int
    clique: list[int]
    size: int
    chromosomes_generated: int
    chromosomes_to_best: int
    # generations for FGA, candidates for MC
    iterations: int
    wall_time_ms: float = field(default=0.0, compare=False)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> RunResult:
        return cls(**d)

    def content(self) -> dict[str, Any]:
        """Everything except wall time, for determinism comparisons."""
        d = self.to_dict()
        d.pop("wall_time_ms")
        return d


@dataclass
class GenerationLog:
    """Snapshot of a population after one generation (or one MC candidate).

    ``population`` holds 0-based vertex lists; serialisation converts to 1-based.
    """

    generation: int
    population: list[list[int]]
    best_fitness: int
    best: list[int]
    chromosomes: int

    def to_record(self) -> dict[str, Any]:
        return {
            "generation": self.generation,
            "population": [[v + 1 for v in ch] for ch in self.population],
            "best_fitness": self.best_fitness,
            "best": [v + 1 for v in self.best],
            "chromosomes": self.chromosomes,
        }

    @classmethod
    def from_record(cls, rec: dict[str, Any]) -> GenerationLog:
        return cls(
            generation=int(rec["generation"]),
            population=[[v - 1 for v in ch] for ch in rec["population"]],
            best_fitness=int(rec["best_fitness"]),
            best=[v - 1 for v in rec["best"]],
            chromosomes=int(rec["chromosomes"]),
        )
