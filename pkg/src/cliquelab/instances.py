"""Small graph constructors for tests and stand-in benchmarks.

The Hamming family reproduces the DIMACS ``hammingB-D`` instances exactly
(up to vertex labelling): binary words of length B, adjacent when their
Hamming distance is at least D.
"""

from __future__ import annotations

import numpy as np

from .graph import Graph


def complete_graph(n: int, name: str | None = None) -> Graph:
    m = ~np.eye(n, dtype=bool)
    return Graph.from_matrix(m, name=name or f"K{n}")


def path_graph(n: int, name: str | None = None) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], name=name or f"P{n}")


def cycle_graph(n: int, name: str | None = None) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], name=name or f"C_{n}")


def star_graph(leaves: int, name: str | None = None) -> Graph:
    """Vertex 0 is the centre."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)], name=name or f"S{leaves}")


def gnp_random_graph(n: int, p: float, seed: int, name: str | None = None) -> Graph:
    """Erdos-Renyi G(n, p) from a seeded numpy generator."""
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return Graph.from_matrix(upper | upper.T, name=name or f"gnp_{n}_{p}_{seed}")


def hamming_graph(bits: int, min_distance: int, name: str | None = None) -> Graph:
    words = np.arange(1 << bits, dtype=np.int64)
    xor = words[:, None] ^ words[None, :]
    dist = np.zeros_like(xor)
    for b in range(bits):
        dist += (xor >> b) & 1
    return Graph.from_matrix(dist >= min_distance, name=name or f"hamming{bits}-{min_distance}")


def planted_clique_graph(n: int, p: float, k: int, seed: int, name: str | None = None) -> Graph:
    """G(n, p) with a clique planted on ``k`` randomly chosen vertices."""
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    m = upper | upper.T
    hidden = rng.choice(n, size=k, replace=False)
    m[np.ix_(hidden, hidden)] = True
    np.fill_diagonal(m, False)
    return Graph.from_matrix(m, name=name or f"planted_{n}_{p}_{k}_{seed}")
