"""Oracle self-test suites.

Each suite pairs a production algorithm with an independent route to the
same quantity (exhaustive enumeration, a closed form, or a proven
combinatorial statement) and counts agreements over seeded random inputs.
The CLI `oracle-test` command drives these; the acceptance tests reuse
them at fixed trial counts.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple

import numpy as np

from .connectivity import (
    brute_force_edge_connectivity,
    check_catlin_lai_shao,
    edge_connectivity,
    nash_williams_oracle,
    tau_at_least,
    verify_partition_certificate,
    verify_tree_packing,
)
from .errors import NotApplicableError
from .generators import circulant, complete, complete_bipartite, cycle, load_cage, path
from .graphs import Graph, boundary, brute_force_girth, degree_stats, girth, is_connected
from .rng import SplitMix64, derive_seed
from .spectral import ADJACENCY, MatrixKind, build_matrix, check_interlacing, eigenvalues, quotient_eigenvalues
from .theorems import check_lemma3_1


class SuiteResult(NamedTuple):
    name: str
    trials: int
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures


def random_graph(rng: SplitMix64, n: int, p: float) -> Graph:
    """Erdos-Renyi style graph with edge probability p, from our stream."""
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def random_connected_graph(rng: SplitMix64, n_lo: int, n_hi: int,
                           min_degree: int = 0, max_tries: int = 2000) -> Graph:
    """Rejection-sample a connected graph, optionally with a degree floor."""
    for _ in range(max_tries):
        n = rng.randrange(n_lo, n_hi)
        p = 0.3 + 0.6 * rng.random()
        g = random_graph(rng, n, p)
        if not is_connected(g):
            continue
        if min_degree and g.n and degree_stats(g)[0] < min_degree:
            continue
        return g
    raise RuntimeError("could not sample a graph meeting the constraints")


def suite_tau(trials: int, seed: int) -> SuiteResult:
    """Matroid-union packing decision vs exhaustive partition oracle."""
    failures = []
    for t in range(trials):
        rng = SplitMix64(derive_seed(seed, t))
        g = random_connected_graph(rng, 3, 8)
        for k in (1, 2, 3):
            decision = tau_at_least(g, k)
            oracle = nash_williams_oracle(g, k)
            if decision.answer != oracle.holds:
                failures.append(f"trial {t} k={k}: decision {decision.answer} vs oracle {oracle.holds}")
                continue
            if decision.answer:
                if not verify_tree_packing(g, decision.evidence):
                    failures.append(f"trial {t} k={k}: invalid tree packing evidence")
            else:
                if not verify_partition_certificate(g, decision.evidence):
                    failures.append(f"trial {t} k={k}: invalid partition certificate")
    return SuiteResult("tau", trials, failures)


def suite_mincut(trials: int, seed: int) -> SuiteResult:
    """Stoer-Wagner vs exhaustive cut enumeration, plus witness check."""
    failures = []
    for t in range(trials):
        rng = SplitMix64(derive_seed(seed, t))
        n = rng.randrange(2, 12)
        g = random_graph(rng, n, 0.2 + 0.7 * rng.random())
        value, witness = edge_connectivity(g)
        brute = brute_force_edge_connectivity(g)
        if value != brute:
            failures.append(f"trial {t}: stoer-wagner {value} vs brute force {brute}")
        elif value > 0 and boundary(g, witness) != value:
            failures.append(f"trial {t}: witness does not achieve the cut")
    return SuiteResult("mincut", trials, failures)


def suite_girth(trials: int, seed: int) -> SuiteResult:
    """Per-root BFS girth vs edge-deletion shortest-path oracle."""
    failures = []
    for t in range(trials):
        rng = SplitMix64(derive_seed(seed, t))
        n = rng.randrange(3, 14)
        g = random_graph(rng, n, 0.1 + 0.6 * rng.random())
        fast = girth(g)
        slow = brute_force_girth(g)
        if fast != slow:
            failures.append(f"trial {t}: girth {fast} vs oracle {slow}")
    return SuiteResult("girth", trials, failures)


def _closed_form_cases(rng: SplitMix64):
    """(graph, expected spectrum sorted non-increasing) pairs."""
    which = rng.randbelow(5)
    if which == 0:
        n = rng.randrange(2, 30)
        return complete(n), sorted([n - 1.0] + [-1.0] * (n - 1), reverse=True)
    if which == 1:
        n = rng.randrange(3, 60)
        vals = [2.0 * math.cos(2.0 * math.pi * j / n) for j in range(n)]
        return cycle(n), sorted(vals, reverse=True)
    if which == 2:
        a = rng.randrange(1, 15)
        b = rng.randrange(1, 15)
        root = math.sqrt(a * b)
        return complete_bipartite(a, b), sorted([root, -root] + [0.0] * (a + b - 2), reverse=True)
    if which == 3:
        n = rng.randrange(5, 24)
        max_s = n // 2
        count = 1 + rng.randbelow(min(3, max_s))
        links = tuple(sorted(rng.sample(list(range(1, max_s + 1)), count)))
        vals = []
        for j in range(n):
            v = 0.0
            for s in links:
                if 2 * s == n:
                    v += math.cos(math.pi * j)  # the antipodal matching pairs i with i+n/2 once
                else:
                    v += 2.0 * math.cos(2.0 * math.pi * j * s / n)
            vals.append(v)
        return circulant(n, links), sorted(vals, reverse=True)
    n = rng.randrange(2, 30)
    vals = [2.0 * math.cos(math.pi * j / (n + 1)) for j in range(1, n + 1)]
    return path(n), sorted(vals, reverse=True)


def suite_eigen(trials: int, seed: int) -> SuiteResult:
    """In-repo symmetric solver vs closed-form spectra."""
    failures = []
    cases = [(load_cage("petersen"), sorted([3.0] + [1.0] * 5 + [-2.0] * 4, reverse=True))]
    rng_cases = SplitMix64(derive_seed(seed, 0))
    for _ in range(max(trials - 1, 0)):
        cases.append(_closed_form_cases(rng_cases))
    for t, (g, expected) in enumerate(cases):
        M = build_matrix(g, ADJACENCY)
        tol = 1e-9 * (1.0 + float(np.abs(M).sum(axis=1).max()))
        got = eigenvalues(M)
        err = float(np.max(np.abs(got - np.array(expected))))
        if err > tol:
            failures.append(f"case {t}: max eigenvalue error {err:.3e} > {tol:.3e}")
    return SuiteResult("eigen", len(cases), failures)


def suite_interlacing(trials: int, seed: int) -> SuiteResult:
    """Quotient spectra interlace full spectra for random (graph, partition)."""
    failures = []
    for t in range(trials):
        rng = SplitMix64(derive_seed(seed, t))
        n = rng.randrange(4, 14)
        g = random_graph(rng, n, 0.3 + 0.5 * rng.random())
        blocks = _random_partition(rng, n)
        if len(blocks) >= n:  # quotient must be strictly smaller
            blocks = [list(range(n - 1)), [n - 1]]
        for a in (0.0, 1.0, -1.0):
            M = build_matrix(g, MatrixKind(a=a))
            theta = eigenvalues(M)
            eta = quotient_eigenvalues(M, blocks, g)
            result = check_interlacing(theta, eta)
            if not result.holds:
                failures.append(f"trial {t} a={a}: interlacing violated at index {result.witness}")
    return SuiteResult("interlacing", trials, failures)


def _random_partition(rng: SplitMix64, n: int) -> list[list[int]]:
    t = 2 + rng.randbelow(max(n - 2, 1))
    assignment = [rng.randbelow(t) for _ in range(n)]
    # make every block non-empty by seeding one vertex per block id used
    blocks: dict[int, list[int]] = {}
    for v, b in enumerate(assignment):
        blocks.setdefault(b, []).append(v)
    return [sorted(b) for _, b in sorted(blocks.items())]


def suite_cutside(trials: int, seed: int) -> SuiteResult:
    """Exhaustive cut-side order bound (a proven statement) on small graphs."""
    failures = []
    done = 0
    t = 0
    while done < trials and t < trials * 50:
        rng = SplitMix64(derive_seed(seed, t))
        t += 1
        try:
            g = random_connected_graph(rng, 4, 10, min_degree=2, max_tries=50)
        except RuntimeError:
            continue
        if girth(g) == math.inf:
            continue
        done += 1
        result = check_lemma3_1(g)
        if not result.holds:
            failures.append(f"sample {done}: {len(result.violations)} violating sides")
    return SuiteResult("cutside", done, failures)


def suite_tree_cut(trials: int, seed: int) -> SuiteResult:
    """Edge-connectivity >= 2k iff k-packing survives all <=k deletions."""
    failures = []
    done = 0
    t = 0
    while done < trials and t < trials * 50:
        rng = SplitMix64(derive_seed(seed, t))
        t += 1
        try:
            g = random_connected_graph(rng, 3, 7, max_tries=50)
        except RuntimeError:
            continue
        if g.m > 14:
            continue
        done += 1
        for k in (1, 2):
            result = check_catlin_lai_shao(g, k)
            if not result.equiv_holds:
                failures.append(f"sample {done} k={k}: equivalence failed, witness {result.counterexample}")
    return SuiteResult("tree_cut", done, failures)


SUITES: dict[str, Callable[[int, int], SuiteResult]] = {
    "tau": suite_tau,
    "mincut": suite_mincut,
    "girth": suite_girth,
    "eigen": suite_eigen,
    "interlacing": suite_interlacing,
    "cutside": suite_cutside,
    "tree_cut": suite_tree_cut,
}


def run_suites(names: list[str], trials: int, seed: int) -> list[SuiteResult]:
    results = []
    for name in names:
        if name not in SUITES:
            raise NotApplicableError(f"unknown suite {name!r}")
        results.append(SUITES[name](trials, seed))
    return results
