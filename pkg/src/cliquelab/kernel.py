"""Chromosome encoding and the repair / extend / prune procedures.

A chromosome is a boolean numpy vector of length ``g.n``; the set bits are
the encoded vertex subset. Every function that consumes randomness takes a
``numpy.random.Generator`` so results are a pure function of the inputs and
the generator state.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .graph import Graph

Chromosome = np.ndarray


class ExtendMode(str, Enum):
    GREEDY_HIGHEST_DEGREE = "greedy"
    STOCHASTIC_UNIFORM = "stochastic"


class TieBreak(str, Enum):
    RANDOM = "random"
    LOWEST_INDEX = "lowest"


class DegreeMode(str, Enum):
    """Which degree the repair step minimises."""

    INDUCED = "induced"
    GLOBAL = "global"


def _pick(candidates: np.ndarray, rng: np.random.Generator, tie_break: TieBreak) -> int:
    if len(candidates) == 1 or tie_break is TieBreak.LOWEST_INDEX:
        return int(candidates[0])
    return int(candidates[rng.integers(len(candidates))])


def _check_length(g: Graph, c: Chromosome) -> None:
    if c.shape != (g.n,):
        raise ValueError(f"chromosome length {c.shape} does not match graph order {g.n}")


def members(c: Chromosome) -> list[int]:
    return np.flatnonzero(c).tolist()


def from_vertices(n: int, vertices) -> Chromosome:
    c = np.zeros(n, dtype=bool)
    c[list(vertices)] = True
    return c


def random_chromosome(n: int, rng: np.random.Generator) -> Chromosome:
    """Each bit is an independent fair coin."""
    if n < 1:
        raise ValueError("chromosome length must be at least 1")
    return rng.random(n) < 0.5


def encodes_clique(g: Graph, c: Chromosome) -> bool:
    idx = np.flatnonzero(c)
    k = len(idx)
    if k < 2:
        return True
    return int(g.matrix[np.ix_(idx, idx)].sum()) == k * (k - 1)


def fitness(g: Graph, c: Chromosome) -> int:
    """Popcount when the encoded set is a clique, otherwise 0."""
    _check_length(g, c)
    return int(c.sum()) if encodes_clique(g, c) else 0


def repair(
    g: Graph,
    c: Chromosome,
    rng: np.random.Generator,
    tie_break: TieBreak = TieBreak.RANDOM,
    degree_mode: DegreeMode = DegreeMode.INDUCED,
) -> Chromosome:
    """Drop lowest-degree members until the encoded set is a clique.

    Returns a new chromosome; the input is not modified.
    """
    _check_length(g, c)
    idx = np.flatnonzero(c)
    k = len(idx)
    out = c.copy()
    if k < 2:
        return out
    sub = g.matrix[np.ix_(idx, idx)]
    induced = sub.sum(axis=1).astype(np.int64)
    alive = np.ones(k, dtype=bool)
    # dead slots get a sentinel above any real degree so argmin skips them
    sentinel = g.n + 1
    key = induced.copy() if degree_mode is DegreeMode.INDUCED else g.degrees[idx].astype(np.int64)
    key_dead = key.copy()
    while True:
        if k < 2 or induced[alive].min() == k - 1:
            break
        key_dead[~alive] = sentinel
        low = key_dead.min()
        ties = np.flatnonzero(key_dead == low)
        drop = _pick(ties, rng, tie_break)
        alive[drop] = False
        k -= 1
        induced -= sub[drop]
        if degree_mode is DegreeMode.INDUCED:
            key_dead = induced.copy()
    out[idx[~alive]] = False
    return out


def extend(
    g: Graph,
    c: Chromosome,
    mode: ExtendMode,
    rng: np.random.Generator,
    tie_break: TieBreak = TieBreak.RANDOM,
    check: bool = True,
) -> Chromosome:
    """Add vertices adjacent to every member until the clique is maximal.

    GREEDY picks the candidate with the largest degree in the whole graph,
    STOCHASTIC picks uniformly among candidates.
    """
    _check_length(g, c)
    if check and not encodes_clique(g, c):
        raise ValueError("extend requires a chromosome that encodes a clique")
    mode = ExtendMode(mode)
    out = c.copy()
    idx = np.flatnonzero(out)
    if len(idx):
        cand = np.logical_and.reduce(g.matrix[idx], axis=0)
    else:
        cand = np.ones(g.n, dtype=bool)
    cand &= ~out
    while True:
        pool = np.flatnonzero(cand)
        if len(pool) == 0:
            return out
        if mode is ExtendMode.GREEDY_HIGHEST_DEGREE:
            deg = g.degrees[pool]
            pool = pool[deg == deg.max()]
        v = _pick(pool, rng, tie_break)
        out[v] = True
        cand &= g.matrix[v]


def prune(g: Graph, c: Chromosome, p: float, rng: np.random.Generator, check: bool = True) -> Chromosome:
    """Remove each member independently with probability ``p``."""
    _check_length(g, c)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"prune probability {p} outside [0, 1]")
    if check and not encodes_clique(g, c):
        raise ValueError("prune requires a chromosome that encodes a clique")
    out = c.copy()
    idx = np.flatnonzero(out)
    if p == 0.0 or len(idx) == 0:
        return out
    out[idx[rng.random(len(idx)) < p]] = False
    return out
