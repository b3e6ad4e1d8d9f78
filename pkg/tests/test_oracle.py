import itertools

import numpy as np
import pytest

from cliquelab.graph import Graph, is_clique, is_maximal_clique
from cliquelab.instances import complete_graph, cycle_graph, gnp_random_graph
from cliquelab.oracle import OracleLimitError, OracleLimits, OracleTimeout, max_clique_exact


def exhaustive_max_clique(g: Graph) -> int:
    """Largest k such that some k-subset is a clique, scanning sizes upward."""
    best = 0
    for k in range(1, g.n + 1):
        found = any(
            all(g.matrix[u, v] for u, v in itertools.combinations(combo, 2))
            for combo in itertools.combinations(range(g.n), k)
        )
        if not found:
            break
        best = k
    return best


def test_small_known_values():
    assert max_clique_exact(complete_graph(5))[0] == 5
    assert max_clique_exact(cycle_graph(5))[0] == 2
    assert max_clique_exact(Graph.from_edges(3, []))[0] == 1
    assert max_clique_exact(Graph.from_edges(0, [])) == (0, [])


def test_matches_exhaustive_on_gnp20():
    g = gnp_random_graph(20, 0.5, seed=2024)
    size, witness = max_clique_exact(g)
    assert size == exhaustive_max_clique(g)
    assert len(witness) == size and is_maximal_clique(g, witness)


@pytest.mark.parametrize("seed", range(6))
def test_matches_exhaustive_small(seed):
    g = gnp_random_graph(12, [0.3, 0.5, 0.8][seed % 3], seed=seed)
    size, witness = max_clique_exact(g)
    assert size == exhaustive_max_clique(g)
    assert is_clique(g, witness)


def test_relabel_invariance():
    g = gnp_random_graph(22, 0.6, seed=5)
    perm = np.random.default_rng(0).permutation(g.n)
    h = Graph.from_matrix(g.matrix[np.ix_(perm, perm)])
    assert max_clique_exact(g)[0] == max_clique_exact(h)[0]


def test_refuses_large_graphs():
    with pytest.raises(OracleLimitError):
        max_clique_exact(complete_graph(41))
    assert max_clique_exact(complete_graph(41), OracleLimits(max_vertices=50))[0] == 41


def test_timeout():
    g = gnp_random_graph(90, 0.9, seed=1)
    with pytest.raises(OracleTimeout):
        max_clique_exact(g, OracleLimits(max_vertices=100, time_budget_s=0.01))
