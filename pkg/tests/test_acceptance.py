"""Exit criteria. Each test records one PASS/FAIL line shown in the terminal summary.

Benchmark-file criteria look for DIMACS files in $CLIQUELAB_DIMACS_DIR
(default: data/dimacs/ in the repository).
"""

import itertools
import time

import numpy as np
import pytest

from cliquelab.bench import AlgorithmSpec, ExperimentSpec, run_experiment
from cliquelab.fga import FgaConfig, inversion_mutation, run_fga, uniform_crossover
from cliquelab.graph import density, is_maximal_clique, load_dimacs
from cliquelab.instances import gnp_random_graph, hamming_graph
from cliquelab.kernel import ExtendMode, extend, fitness, random_chromosome, repair
from cliquelab.mc import McConfig, Method, run_mc
from cliquelab.oracle import max_clique_exact
from cliquelab.reference import DECLARED_EDGE_COUNTS, canonical_name, lookup
from cliquelab.trajectory import node_frequency_trajectory

from .conftest import DIMACS_DIR, benchmark_files, find_benchmark, write_graph

EASY_ROWS = {"C125.9": 34, "keller4": 11, "p_hat300-1": 8, "brock200_2": 12, "gen200_p0.9_55": 55}
FGA_DEFAULT = FgaConfig()


def pairwise_clique(g, vertices) -> bool:
    return all(g.matrix[u, v] for u, v in itertools.combinations(vertices, 2))


def test_criterion_1_oracle_dominance(acceptance):
    t0 = time.perf_counter()
    graphs = [
        gnp_random_graph(n, p, seed=1000 + i)
        for i, (n, p) in enumerate(itertools.product(range(8, 26), (0.3, 0.5, 0.8)))
    ]
    fga_cfg = dict(population_size=20, max_generations=20)
    budget = FgaConfig(**fga_cfg).chromosome_budget
    violations = []
    for i, g in enumerate(graphs):
        exact, _ = max_clique_exact(g)
        results = [run_fga(g, FgaConfig(seed=i, **fga_cfg))]
        results += [run_mc(g, McConfig(method=m, budget=budget, seed=i)) for m in Method]
        for r in results:
            verts = [v - 1 for v in r.clique]
            if r.size > exact or not is_maximal_clique(g, verts):
                violations.append((g.name, r.algorithm, r.size, exact))
    elapsed = time.perf_counter() - t0
    ok = not violations and len(graphs) >= 50 and elapsed < 120
    acceptance(1, ok, f"{len(graphs)} graphs, {len(violations)} violations, {elapsed:.1f}s")
    assert not violations
    assert elapsed < 120


def test_criterion_2_kernel_properties(acceptance):
    t0 = time.perf_counter()
    graphs = [gnp_random_graph(24, p, seed=50 + i) for i, p in enumerate((0.1, 0.3, 0.5, 0.7, 0.9))]
    rng = np.random.default_rng(2)
    failures = 0
    checked = 0
    for g in graphs:
        for k in range(2000):
            c = random_chromosome(g.n, rng)
            if k % 3 == 0:
                # sparse inputs so some raw chromosomes are already cliques
                c &= rng.random(g.n) < 0.2
            raw = np.flatnonzero(c).tolist()
            raw_is_clique = pairwise_clique(g, raw)
            failures += fitness(g, c) != (len(raw) if raw_is_clique else 0)
            r = repair(g, c, rng)
            rv = np.flatnonzero(r).tolist()
            failures += not (pairwise_clique(g, rv) and set(rv) <= set(raw))
            failures += fitness(g, r) != len(rv)
            e = extend(g, r, ExtendMode.GREEDY_HIGHEST_DEGREE if k % 2 else ExtendMode.STOCHASTIC_UNIFORM, rng)
            ev = np.flatnonzero(e).tolist()
            failures += not (is_maximal_clique(g, ev) and set(rv) <= set(ev))
            checked += 1
    elapsed = time.perf_counter() - t0
    acceptance(2, failures == 0 and elapsed < 60, f"{checked} chromosomes on {len(graphs)} graphs, {failures} failures, {elapsed:.1f}s")
    assert failures == 0 and checked >= 10_000
    assert elapsed < 60


def test_criterion_3_density_reproduction(acceptance, tmp_path):
    # the Hamming instances are reconstructed exactly; any other local files are used as found
    files = {canonical_name(p.name): p for p in (
        write_graph(hamming_graph(8, 4), tmp_path),
        write_graph(hamming_graph(10, 4), tmp_path),
    )}
    files.update(benchmark_files())
    checked, mismatches = [], []
    for key, path in sorted(files.items()):
        ref = lookup(key)
        if ref is None or ref.density is None:
            continue
        g = load_dimacs(path)
        got = f"{density(g):.3f}"
        want = f"{float(ref.density):.3f}"
        checked.append(f"{g.name}={got}")
        if got != want:
            mismatches.append(f"{g.name}: {got} != {want}")
        if ref.properties and key not in DECLARED_EDGE_COUNTS:
            assert (g.n, g.edge_count) == (ref.properties.vertices, ref.properties.edges)
    acceptance(3, bool(checked) and not mismatches, f"{len(checked)} files checked ({', '.join(checked)}); mismatches: {mismatches or 'none'}")
    assert checked and not mismatches


def _best_of_three(path, solver: str, seeds):
    g = load_dimacs(path)
    if solver == "fga":
        runs = [run_fga(g, FgaConfig(seed=s)) for s in seeds]
    else:
        runs = [run_mc(g, McConfig.matching(FGA_DEFAULT, seed=s)) for s in seeds]
    return max(r.size for r in runs), float(np.mean([r.chromosomes_to_best for r in runs]))


@pytest.fixture(scope="module")
def easy_rows():
    """Per solver: {graph: (best size, mean chromosomes_to_best)} for seeds 1..3; None for missing files."""
    out = {"fga": {}, "mc": {}}
    for name in EASY_ROWS:
        path = find_benchmark(name)
        for solver in out:
            out[solver][name] = None if path is None else _best_of_three(path, solver, (1, 2, 3))
    return out


def test_criterion_4_easy_rows(acceptance, easy_rows):
    missing = [n for n in EASY_ROWS if find_benchmark(n) is None]
    verdicts = {}
    for solver, rows in easy_rows.items():
        hits = [n for n, v in rows.items() if v is not None and v[0] >= EASY_ROWS[n]]
        if len(hits) < 4 and not missing:
            # one rerun with fresh seeds
            rerun = {n: _best_of_three(find_benchmark(n), solver, (4, 5, 6)) for n in EASY_ROWS}
            hits = [n for n, v in rerun.items() if v[0] >= EASY_ROWS[n]]
        verdicts[solver] = hits
    ok = all(len(h) >= 4 for h in verdicts.values())
    detail = ", ".join(f"{s} reached {len(h)}/5 {h}" for s, h in verdicts.items())
    if missing:
        detail += f"; benchmark files not found in {DIMACS_DIR}: {missing}"
    acceptance(4, ok, detail)
    assert ok, detail


def test_criterion_5_chromosome_economy(acceptance, easy_rows):
    missing = [n for n in EASY_ROWS if find_benchmark(n) is None]
    fewer = [
        n for n in EASY_ROWS
        if easy_rows["fga"][n] is not None and easy_rows["mc"][n][1] < easy_rows["fga"][n][1]
    ]
    ok = len(fewer) >= 3
    detail = f"MC needed fewer chromosomes on {len(fewer)}/5 {fewer}"
    if missing:
        detail += f"; benchmark files not found in {DIMACS_DIR}: {missing}"
    acceptance(5, ok, detail)
    assert ok, detail


def test_criterion_6_determinism(acceptance, tmp_path):
    g = gnp_random_graph(60, 0.75, seed=6)
    cases = [
        ("fga", FgaConfig(population_size=16, max_generations=10, seed=3)),
        ("fga", FgaConfig(population_size=16, max_generations=10, seed=3, extend_mode="stochastic")),
    ] + [("mc", McConfig(method=m, budget=200, seed=8)) for m in Method]
    mismatched = []
    for solver, cfg in cases:
        run = run_fga if solver == "fga" else run_mc
        if run(g, cfg).content() != run(g, cfg).content():
            mismatched.append((solver, cfg))
    paths = [str(write_graph(g, tmp_path)), str(write_graph(gnp_random_graph(45, 0.5, seed=1, name="r45"), tmp_path))]
    spec = ExperimentSpec(
        paths,
        [AlgorithmSpec("fga", "fga", {"population_size": 10, "max_generations": 5}), AlgorithmSpec("mc", "mc", {"budget": 60})],
        runs=3,
        base_seed=11,
    )
    serial = [r.content() for r in run_experiment(spec, workers=1).runs]
    parallel = [r.content() for r in run_experiment(spec, workers=4).runs]
    repeat = [r.content() for r in run_experiment(spec, workers=4).runs]
    ok = not mismatched and serial == parallel == repeat
    acceptance(6, ok, f"{len(cases)} direct configs, {len(serial)} bench cells serial vs 4 workers")
    assert ok


def test_criterion_7_operator_examples(acceptance):
    def b(s):
        return np.array([c == "1" for c in s])

    def s(a):
        return "".join("1" if x else "0" for x in a)

    checks = {
        "mask 0": tuple(map(s, uniform_crossover(b("1100"), b("0011"), mask=b("0000")))) == ("1100", "0011"),
        "mask 1": tuple(map(s, uniform_crossover(b("1100"), b("0011"), mask=b("1111")))) == ("0011", "1100"),
        "mask 1010": tuple(map(s, uniform_crossover(b("1100"), b("0011"), mask=b("1010")))) == ("0110", "1001"),
        "i=j": s(inversion_mutation(b("10110"), points=(2, 2))) == "10110",
        "(1,3)": s(inversion_mutation(b("10110"), points=(1, 3))) == "11100",
        "(0,n-1)": s(inversion_mutation(b("10110"), points=(0, 4))) == "01101",
    }
    failed = [k for k, v in checks.items() if not v]
    acceptance(7, not failed, f"{len(checks)} worked examples, failed: {failed or 'none'}")
    assert not failed


def test_criterion_8_trajectory_observation(acceptance):
    path = find_benchmark("brock800_2")
    if path is not None:
        g, label = load_dimacs(path), "brock800_2"
    else:
        # brock800_2 density on a desk-sized random graph
        g, label = gnp_random_graph(200, 0.65, seed=800, name="gnp200_0.65"), "stand-in G(200, 0.65)"
    votes = []
    for seed in range(10):
        logs = []
        run_fga(g, FgaConfig(seed=seed), log=logs.append)
        traj = node_frequency_trajectory(logs, logs[-1].best)
        i = traj.discovery_index(logs)
        votes.append(bool(traj.mean[-1] >= traj.mean[i]))
    ok = sum(votes) > len(votes) / 2
    acceptance(8, ok, f"{label}: final >= discovery mean frequency in {sum(votes)}/{len(votes)} runs")
    assert ok
