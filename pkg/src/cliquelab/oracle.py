"""Exact maximum clique via Bron-Kerbosch with pivoting, for small graphs only."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph


class OracleLimitError(ValueError):
    """Graph too large for exact search."""


class OracleTimeout(TimeoutError):
    pass


@dataclass(frozen=True)
class OracleLimits:
    max_vertices: int = 40
    time_budget_s: float | None = 60.0

    def __post_init__(self):
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be >= 1")


def _bitsets(g: Graph) -> list[int]:
    masks = []
    for nbrs in g.adjacency:
        m = 0
        for u in nbrs:
            m |= 1 << u
        masks.append(m)
    return masks


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def enumerate_maximal_cliques(g: Graph) -> Iterator[list[int]]:
    """Yield every maximal clique (sorted 0-based vertex lists)."""
    nb = _bitsets(g)

    def expand(r: list[int], p: int, x: int):
        if not p and not x:
            yield sorted(r)
            return
        pivot = max(_bits(p | x), key=lambda u: (nb[u] & p).bit_count())
        for v in _bits(p & ~nb[pivot]):
            yield from expand(r + [v], p & nb[v], x & nb[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n == 0:
        return
    yield from expand([], (1 << g.n) - 1, 0)


def max_clique_exact(g: Graph, limits: OracleLimits = OracleLimits()) -> tuple[int, list[int]]:
    """Return (size, witness) of a maximum clique. Witness is 0-based and sorted."""
    if g.n > limits.max_vertices:
        raise OracleLimitError(f"{g.name} has {g.n} vertices, exact search is capped at {limits.max_vertices}")
    if g.n == 0:
        return 0, []
    nb = _bitsets(g)
    deadline = None if limits.time_budget_s is None else time.monotonic() + limits.time_budget_s
    best: list[int] = []
    calls = 0

    def expand(r: list[int], p: int, x: int) -> None:
        nonlocal best, calls
        calls += 1
        if deadline is not None and calls % 1024 == 0 and time.monotonic() > deadline:
            raise OracleTimeout(f"exact search on {g.name} exceeded {limits.time_budget_s}s")
        if not p:
            if not x and len(r) > len(best):
                best = sorted(r)
            return
        if len(r) + p.bit_count() <= len(best):
            return
        pivot = max(_bits(p | x), key=lambda u: (nb[u] & p).bit_count())
        for v in _bits(p & ~nb[pivot]):
            if len(r) + p.bit_count() <= len(best):
                return
            expand(r + [v], p & nb[v], x & nb[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand([], (1 << g.n) - 1, 0)
    return len(best), best
