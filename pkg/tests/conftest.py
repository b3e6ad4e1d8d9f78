from __future__ import annotations

import io
import itertools
import os
from pathlib import Path

import numpy as np
import pytest

from cliquelab.graph import Graph, write_dimacs
from cliquelab.reference import canonical_name

REPO = Path(__file__).resolve().parent.parent
DIMACS_DIR = Path(os.environ.get("CLIQUELAB_DIMACS_DIR", REPO / "data" / "dimacs"))


def benchmark_files() -> dict[str, Path]:
    """Locally available DIMACS files keyed by canonical graph name."""
    if not DIMACS_DIR.is_dir():
        return {}
    return {
        canonical_name(p.name): p
        for p in sorted(DIMACS_DIR.iterdir())
        if p.suffix in (".clq", ".col", ".dimacs") and p.is_file()
    }


def find_benchmark(name: str) -> Path | None:
    return benchmark_files().get(canonical_name(name))


def dimacs_text(g: Graph) -> str:
    buf = io.StringIO()
    write_dimacs(g, buf)
    return buf.getvalue()


def write_graph(g: Graph, directory: Path, name: str | None = None) -> Path:
    path = Path(directory) / f"{name or g.name}.clq"
    path.write_text(dimacs_text(g))
    return path


def brute_force_cliques(g: Graph):
    """Every clique as a frozenset, by checking all vertex subsets."""
    out = []
    for k in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), k):
            if all(g.matrix[u, v] for u, v in itertools.combinations(combo, 2)):
                out.append(frozenset(combo))
    return out


def brute_force_maximal(g: Graph) -> set[frozenset]:
    cliques = brute_force_cliques(g)
    maximal = set()
    for c in cliques:
        if not any(w not in c and all(g.matrix[w, u] for u in c) for w in range(g.n)):
            maximal.add(c)
    return maximal


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def triangle():
    return Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)], name="triangle")


@pytest.fixture
def path3():
    return Graph.from_edges(3, [(0, 1), (1, 2)], name="path3")


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record a one-line verdict for an acceptance criterion."""

    def record(number: int, ok: bool, detail: str) -> bool:
        ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
