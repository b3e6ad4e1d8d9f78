"""Maximum clique approximation with a family-elitist GA and a Monte Carlo search."""

from .fga import ConfigError, FgaConfig, run_fga
from .graph import Graph, density, induced_degree, is_clique, is_maximal_clique, load_dimacs, parse_dimacs
from .kernel import ExtendMode
from .mc import McConfig, Method, run_mc
from .oracle import OracleLimits, max_clique_exact
from .results import GenerationLog, RunResult

__all__ = [
    "ConfigError",
    "ExtendMode",
    "FgaConfig",
    "GenerationLog",
    "Graph",
    "McConfig",
    "Method",
    "OracleLimits",
    "RunResult",
    "density",
    "induced_degree",
    "is_clique",
    "is_maximal_clique",
    "load_dimacs",
    "max_clique_exact",
    "parse_dimacs",
    "run_fga",
    "run_mc",
]
