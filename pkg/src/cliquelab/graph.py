"""Undirected simple graphs loaded from DIMACS clique files.

Vertices are 0-indexed internally. Anything printed or written for humans
uses the original 1-based DIMACS ids.
"""

from __future__ import annotations

import io
import logging
import os
from dataclasses import dataclass, field
from typing import BinaryIO, Iterable, TextIO

import numpy as np

log = logging.getLogger(__name__)


class DimacsParseError(ValueError):
    """Malformed DIMACS input. ``lineno`` is 1-based, or None for whole-file errors."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True, eq=False)
class Graph:
    name: str
    n: int
    edge_count: int
    adjacency: tuple[frozenset[int], ...]
    # dense views used by the clique kernels; derived from adjacency
    matrix: np.ndarray = field(repr=False)
    degrees: np.ndarray = field(repr=False)
    edges: np.ndarray = field(repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str = "graph") -> Graph:
        """Build a graph from 0-based edge pairs. Duplicates collapse; self-loops are rejected."""
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        matrix = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            matrix[u, v] = matrix[v, u] = True
        return cls.from_matrix(matrix, name=name)

    @classmethod
    def from_matrix(cls, matrix: np.ndarray, name: str = "graph") -> Graph:
        matrix = np.array(matrix, dtype=bool)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if not np.array_equal(matrix, matrix.T):
            raise ValueError("adjacency matrix must be symmetric")
        if matrix.diagonal().any():
            raise ValueError("self-loops are not allowed")
        matrix.setflags(write=False)
        n = matrix.shape[0]
        degrees = matrix.sum(axis=1).astype(np.int64)
        degrees.setflags(write=False)
        us, vs = np.nonzero(np.triu(matrix, k=1))
        edges = np.column_stack([us, vs]).astype(np.int64)
        edges.setflags(write=False)
        adjacency = tuple(frozenset(np.flatnonzero(row).tolist()) for row in matrix)
        return cls(
            name=name,
            n=n,
            edge_count=int(degrees.sum()) // 2,
            adjacency=adjacency,
            matrix=matrix,
            degrees=degrees,
            edges=edges,
        )

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.name, self.n, self.adjacency) == (other.name, other.n, other.adjacency)

    def __hash__(self) -> int:
        return hash((self.name, self.n, self.edge_count))

    def __repr__(self) -> str:
        return f"Graph(name={self.name!r}, n={self.n}, edge_count={self.edge_count})"


def _check_vertices(g: Graph, s: Iterable[int]) -> list[int]:
    vs = sorted(set(int(v) for v in s))
    if vs and (vs[0] < 0 or vs[-1] >= g.n):
        raise ValueError(f"vertex out of range [0, {g.n})")
    return vs


def parse_dimacs(stream: BinaryIO | TextIO | bytes | str, name: str = "graph") -> Graph:
    """Parse DIMACS clique format (``c`` comments, one ``p edge n m`` line, ``e u v`` lines)."""
    if isinstance(stream, bytes):
        stream = io.BytesIO(stream)
    elif isinstance(stream, str):
        stream = io.StringIO(stream)

    n: int | None = None
    declared_m = 0
    pairs: set[tuple[int, int]] = set()
    edge_lines = 0

    for lineno, raw in enumerate(stream, start=1):
        line = raw.decode("ascii", errors="replace") if isinstance(raw, bytes) else raw
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n is not None:
                raise DimacsParseError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] not in ("edge", "col"):
                raise DimacsParseError(f"malformed problem line {line.strip()!r}", lineno)
            try:
                n, declared_m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise DimacsParseError(f"non-integer size in {line.strip()!r}", lineno) from None
            if n < 0 or declared_m < 0:
                raise DimacsParseError("negative size in problem line", lineno)
        elif kind == "e":
            if n is None:
                raise DimacsParseError("edge line before problem line", lineno)
            if len(tokens) != 3:
                raise DimacsParseError(f"malformed edge line {line.strip()!r}", lineno)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise DimacsParseError(f"non-integer vertex in {line.strip()!r}", lineno) from None
            for x in (u, v):
                if not 1 <= x <= n:
                    raise DimacsParseError(f"vertex {x} out of range [1, {n}]", lineno)
            if u == v:
                raise DimacsParseError(f"self-loop on vertex {u}", lineno)
            edge_lines += 1
            pairs.add((u - 1, v - 1) if u < v else (v - 1, u - 1))
        else:
            raise DimacsParseError(f"unknown line type {kind!r}", lineno)

    if n is None:
        raise DimacsParseError("missing problem line")
    if declared_m != len(pairs):
        log.warning(
            "%s: problem line declares %d edges, found %d distinct (%d edge lines); using %d",
            name, declared_m, len(pairs), edge_lines, len(pairs),
        )
    matrix = np.zeros((n, n), dtype=bool)
    if pairs:
        arr = np.array(sorted(pairs), dtype=np.int64)
        matrix[arr[:, 0], arr[:, 1]] = True
        matrix[arr[:, 1], arr[:, 0]] = True
    return Graph.from_matrix(matrix, name=name)


def graph_name_from_path(path: str | os.PathLike) -> str:
    base = os.path.basename(os.fspath(path))
    for suffix in (".clq", ".col", ".txt", ".dimacs"):
        if base.endswith(suffix):
            return base[: -len(suffix)]
    return base


def load_dimacs(path: str | os.PathLike, name: str | None = None) -> Graph:
    with open(path, "rb") as fh:
        return parse_dimacs(fh, name=name or graph_name_from_path(path))


def write_dimacs(g: Graph, out: TextIO, comment: str | None = None) -> None:
    if comment:
        for line in comment.splitlines():
            out.write(f"c {line}\n")
    out.write(f"p edge {g.n} {g.edge_count}\n")
    for u, v in g.edges:
        out.write(f"e {u + 1} {v + 1}\n")


def density(g: Graph) -> float:
    """Fraction of vertex pairs joined by an edge, 2m / (n(n-1))."""
    if g.n < 2:
        raise ValueError("density is undefined for fewer than 2 vertices")
    return 2.0 * g.edge_count / (g.n * (g.n - 1))


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    vs = _check_vertices(g, s)
    k = len(vs)
    if k < 2:
        return True
    idx = np.asarray(vs)
    return int(g.matrix[np.ix_(idx, idx)].sum()) == k * (k - 1)


def is_maximal_clique(g: Graph, s: Iterable[int]) -> bool:
    vs = _check_vertices(g, s)
    if not is_clique(g, vs):
        return False
    if not vs:
        # the empty set extends by any vertex
        return g.n == 0
    common = np.logical_and.reduce(g.matrix[vs], axis=0)
    return not common.any()


def induced_degree(g: Graph, s: Iterable[int], v: int) -> int:
    """Number of neighbours of ``v`` inside ``s``."""
    vs = set(_check_vertices(g, s))
    if v not in vs:
        raise ValueError(f"vertex {v} is not in the vertex set")
    return len(g.adjacency[v] & vs)
