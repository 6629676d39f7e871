"""Shared fixtures and independent-oracle helpers for the test suite."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from spectrepack import Graph
from spectrepack.generators import load_cage
from spectrepack.rng import SplitMix64, derive_seed
from spectrepack.selftest import random_connected_graph, random_graph

PETERSEN_EDGES = """\
0 1
1 2
2 3
3 4
0 4
0 5
1 6
2 7
3 8
4 9
5 7
7 9
9 6
6 8
8 5
"""


@pytest.fixture(scope="session")
def petersen() -> Graph:
    return load_cage("petersen")


@pytest.fixture(scope="session")
def heawood() -> Graph:
    return load_cage("heawood")


def bareiss_det(matrix: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction-free Gaussian elimination."""
    m = [row[:] for row in matrix]
    n = len(m)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            for swap in range(k + 1, n):
                if m[swap][k] != 0:
                    m[k], m[swap] = m[swap], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def charpoly_matches_roots(g: Graph, roots: list[int]) -> bool:
    """Exact check that det(xI - A) = prod (x - root) at enough integer points.

    Both sides are monic degree-n integer polynomials, so agreement at n+1
    points proves equality; this validates an integer eigenvalue multiset
    independently of any floating-point solver.
    """
    n = g.n
    assert len(roots) == n
    for x in range(-n - 1, n + 2):
        lhs_matrix = [
            [Fraction(x if i == j else 0) - Fraction(1 if g.has_edge(i, j) else 0) for j in range(n)]
            for i in range(n)
        ]
        lhs = bareiss_det(lhs_matrix)
        rhs = Fraction(1)
        for r in roots:
            rhs *= Fraction(x - r)
        if lhs != rhs:
            return False
    return True


def seeded_graphs(master_seed: int, count: int, n_lo: int, n_hi: int,
                  connected: bool = False, min_degree: int = 0):
    """Deterministic stream of random test graphs."""
    out = []
    trial = 0
    while len(out) < count:
        rng = SplitMix64(derive_seed(master_seed, trial))
        trial += 1
        if connected or min_degree:
            try:
                g = random_connected_graph(rng, n_lo, n_hi, min_degree=min_degree, max_tries=200)
            except RuntimeError:
                continue
        else:
            n = rng.randrange(n_lo, n_hi)
            g = random_graph(rng, n, 0.15 + 0.7 * rng.random())
        out.append(g)
    return out


def close(a: float, b: float, tol: float = 1e-8) -> bool:
    return math.isfinite(a) and math.isfinite(b) and abs(a - b) <= tol
