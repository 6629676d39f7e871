import math

import numpy as np
import pytest

from conftest import charpoly_matches_roots, seeded_graphs
from spectrepack import (
    ADJACENCY,
    LAPLACIAN,
    SIGNLESS,
    DomainError,
    MatrixKind,
    build_matrix,
    check_interlacing,
    eigenvalues,
    is_equitable,
    lambda_i,
    quotient_eigenvalues,
    quotient_matrix,
    two_part_quotient_eigen,
)
from spectrepack.generators import circulant, complete, complete_bipartite, cycle, path
from spectrepack.rng import SplitMix64
from spectrepack.spectral import householder_tridiagonalize, jacobi_eigenvalues, ql_implicit_shift


def solver_tol(M):
    return 1e-9 * (1.0 + float(np.abs(M).sum(axis=1).max()))


def test_matrix_kind_validation():
    with pytest.raises(DomainError):
        MatrixKind(a=1.0, b=0.0)
    with pytest.raises(DomainError):
        MatrixKind(a=-2.0, b=1.0)
    with pytest.raises(DomainError):
        MatrixKind(a=2.0, b=-1.0)  # a/b = -2
    MatrixKind(a=1.0, b=-1.0)  # a/b = -1 boundary is allowed


def test_build_matrix_examples():
    k4 = complete(4)
    A = build_matrix(k4, ADJACENCY)
    assert np.array_equal(A, np.ones((4, 4)) - np.eye(4))
    L = build_matrix(k4, LAPLACIAN)
    assert np.array_equal(L, 3 * np.eye(4) - (np.ones((4, 4)) - np.eye(4)))
    c4 = cycle(4)
    M = build_matrix(c4, MatrixKind(a=2.0, b=1.0))
    assert np.array_equal(np.diag(M), np.full(4, 4.0))
    assert M[0, 1] == 1.0 and M[0, 2] == 0.0


def test_eigenvalues_requires_symmetric_finite():
    with pytest.raises(DomainError):
        eigenvalues(np.array([[0.0, 1.0], [2.0, 0.0]]))
    with pytest.raises(DomainError):
        eigenvalues(np.array([[math.nan, 0.0], [0.0, 1.0]]))


def test_complete_graph_spectra():
    for n in range(2, 31):
        M = build_matrix(complete(n), ADJACENCY)
        expected = np.array([n - 1.0] + [-1.0] * (n - 1))
        assert np.max(np.abs(eigenvalues(M) - expected)) <= solver_tol(M)


def test_complete_graph_charpoly_oracle():
    # integer eigenvalue multisets verified by exact determinant evaluation
    assert charpoly_matches_roots(complete(5), [4, -1, -1, -1, -1])
    assert charpoly_matches_roots(complete_bipartite(2, 2), [2, 0, 0, -2])


def test_petersen_spectrum_charpoly_oracle(petersen):
    roots = [3] + [1] * 5 + [-2] * 4
    assert charpoly_matches_roots(petersen, roots)
    M = build_matrix(petersen, ADJACENCY)
    assert np.max(np.abs(eigenvalues(M) - np.array(sorted(roots, reverse=True), dtype=float))) <= solver_tol(M)


def test_cycle_spectra():
    for n in range(3, 61):
        M = build_matrix(cycle(n), ADJACENCY)
        expected = np.array(sorted((2.0 * math.cos(2.0 * math.pi * j / n) for j in range(n)), reverse=True))
        assert np.max(np.abs(eigenvalues(M) - expected)) <= solver_tol(M)


def test_complete_bipartite_spectra():
    for a in range(1, 16):
        for b in range(a, 16, 3):
            M = build_matrix(complete_bipartite(a, b), ADJACENCY)
            root = math.sqrt(a * b)
            expected = np.array(sorted([root, -root] + [0.0] * (a + b - 2), reverse=True))
            assert np.max(np.abs(eigenvalues(M) - expected)) <= solver_tol(M)


def test_laplacian_of_complete_graph():
    M = build_matrix(complete(4), LAPLACIAN)
    expected = np.array([4.0, 4.0, 4.0, 0.0])
    assert np.max(np.abs(eigenvalues(M) - expected)) <= solver_tol(M)


def test_lambda_i_examples(petersen):
    assert abs(lambda_i(complete(4), ADJACENCY, 2) - (-1.0)) < 1e-9
    assert abs(lambda_i(petersen, ADJACENCY, 2) - 1.0) < 1e-9
    assert abs(lambda_i(complete(4), SIGNLESS, 2) - 2.0) < 1e-9  # 3-regular: 3 + (-1)
    with pytest.raises(DomainError):
        lambda_i(complete(4), ADJACENCY, 5)


def test_trace_identity_on_random_graphs():
    for g in seeded_graphs(master_seed=701, count=40, n_lo=2, n_hi=18):
        for kind in (ADJACENCY, LAPLACIAN, MatrixKind(a=0.5, b=2.0)):
            M = build_matrix(g, kind)
            vals = eigenvalues(M)
            norm = float(np.abs(M).sum(axis=1).max())
            assert abs(vals.sum() - np.trace(M)) <= 1e-8 * g.n * (1.0 + norm)


def test_solver_agrees_with_numpy_on_random_graphs():
    # extra cross-validation route; the contract itself is the closed forms
    for g in seeded_graphs(master_seed=702, count=25, n_lo=2, n_hi=25):
        M = build_matrix(g, MatrixKind(a=-1.0, b=1.0))
        ours = eigenvalues(M)
        ref = np.sort(np.linalg.eigvalsh(M))[::-1]
        assert np.max(np.abs(ours - ref)) <= 1e-8 * (1.0 + np.abs(M).max())


def test_solver_deterministic(petersen):
    M = build_matrix(petersen, ADJACENCY)
    first = eigenvalues(M)
    second = eigenvalues(M)
    assert np.array_equal(first, second)


def test_eq_ab_index_flip():
    # for b < 0: lambda_{n-i+1}(G, a, b) = b * lambda_i(G, a/b)
    rng = SplitMix64(703)
    for g in seeded_graphs(master_seed=704, count=20, n_lo=2, n_hi=14):
        ratio = -1.0 + 4.0 * rng.random()
        b = -3.0 + 2.9 * rng.random()
        a = ratio * b
        scaled = eigenvalues(build_matrix(g, MatrixKind(a=a, b=b)))
        base = eigenvalues(build_matrix(g, MatrixKind(a=ratio, b=1.0)))
        n = g.n
        for i in range(1, n + 1):
            assert abs(scaled[n - i] - b * base[i - 1]) <= 1e-8 * (1.0 + abs(b) * (1.0 + np.abs(base).max()))


def test_regular_shift():
    # d-regular graphs: lambda_i(G, a) = a*d + lambda_i(G, 0)
    for g, d in ((cycle(9), 2), (complete(7), 6), (circulant(12, (1, 3)), 4)):
        for a in (0.5, 1.0, 3.0, -1.0):
            shifted = eigenvalues(build_matrix(g, MatrixKind(a=a)))
            base = eigenvalues(build_matrix(g, ADJACENCY))
            assert np.max(np.abs(shifted - (a * d + base))) <= 1e-8 * (1 + abs(a) * d)


def test_quotient_matrix_examples():
    c4 = cycle(4)
    R = quotient_matrix(build_matrix(c4, ADJACENCY), [[0, 2], [1, 3]], c4)
    assert np.allclose(R, [[0.0, 2.0], [2.0, 0.0]])
    k4 = complete(4)
    A = build_matrix(k4, ADJACENCY)
    assert np.allclose(quotient_matrix(A, [[0], [1], [2], [3]], k4), A)
    R2 = quotient_matrix(A, [[0], [1, 2, 3]], k4)
    assert np.allclose(R2, [[0.0, 3.0], [1.0, 2.0]])


def test_quotient_interlacing_on_random_pairs():
    rng = SplitMix64(705)
    done = 0
    trial = 0
    while done < 200:
        trial += 1
        g = seeded_graphs(master_seed=706 + trial, count=1, n_lo=4, n_hi=14)[0]
        if g.n < 4:
            continue
        t = 2 + rng.randbelow(g.n - 2)
        assignment = [rng.randbelow(t) for _ in range(g.n)]
        blocks = {}
        for v, bid in enumerate(assignment):
            blocks.setdefault(bid, []).append(v)
        parts = [sorted(b) for _, b in sorted(blocks.items())]
        if len(parts) >= g.n or len(parts) < 1:
            continue
        done += 1
        for a in (0.0, 1.0, -1.0):
            M = build_matrix(g, MatrixKind(a=a))
            result = check_interlacing(eigenvalues(M), quotient_eigenvalues(M, parts, g))
            assert result.holds, f"interlacing failed (trial {trial}, a={a})"


def test_cauchy_interlacing_on_principal_submatrices():
    rng = SplitMix64(707)
    for g in seeded_graphs(master_seed=708, count=100, n_lo=3, n_hi=16):
        M = build_matrix(g, ADJACENCY)
        m = 1 + rng.randbelow(g.n - 1)
        keep = sorted(rng.sample(list(range(g.n)), m))
        sub = M[np.ix_(keep, keep)]
        result = check_interlacing(eigenvalues(M), eigenvalues(sub))
        assert result.holds


def test_interlacing_examples(petersen):
    assert check_interlacing([2.0, 0.0, 0.0, -2.0], [2.0, -2.0]) == (True, True, None)
    theta = eigenvalues(build_matrix(petersen, ADJACENCY))
    eta = quotient_eigenvalues(build_matrix(petersen, ADJACENCY), [range(5), range(5, 10)], petersen)
    assert check_interlacing(theta, eta).holds
    holds, tight, witness = check_interlacing([1.0, 0.0], [2.0])
    assert (holds, tight, witness) == (False, False, 1)


def test_tightness_and_equitability(petersen):
    c4 = cycle(4)
    M = build_matrix(c4, ADJACENCY)
    result = check_interlacing(eigenvalues(M), quotient_eigenvalues(M, [[0, 2], [1, 3]], c4))
    assert result.holds and result.tight
    assert is_equitable(c4, [[0, 2], [1, 3]])
    Mp = build_matrix(petersen, ADJACENCY)
    outer_inner = [list(range(5)), list(range(5, 10))]
    result = check_interlacing(eigenvalues(Mp), quotient_eigenvalues(Mp, outer_inner, petersen))
    assert result.holds and result.tight
    assert is_equitable(petersen, outer_inner)


def test_is_equitable_path_examples():
    p3 = path(3)
    assert is_equitable(p3, [[0, 2], [1]])
    assert not is_equitable(p3, [[0], [1, 2]])


def test_two_part_quotient_examples():
    lam1, lam2 = two_part_quotient_eigen(3.0, 3.0, 4, 7, 2, a=1.0)
    assert abs(lam1 - (1.0 + 1.0) * 3.0) < 1e-12  # equal average degrees pin lambda1
    lam1, lam2 = two_part_quotient_eigen(5.0, 2.0, 3, 3, 0, a=0.0)
    assert (lam1, lam2) == (5.0, 2.0)
    lam1, lam2 = two_part_quotient_eigen(3.0, 3.0, 5, 5, 5, a=0.0)
    assert abs(lam1 - 3.0) < 1e-12 and abs(lam2 - 1.0) < 1e-12


def test_two_part_quotient_agrees_with_solver():
    rng = SplitMix64(709)
    for _ in range(200):
        n1 = 1 + rng.randbelow(9)
        n2 = 1 + rng.randbelow(9)
        r = rng.randbelow(n1 * n2 + 1)
        d1 = 6.0 * rng.random()
        d2 = 6.0 * rng.random()
        a = -1.0 + 4.0 * rng.random()
        lam1, lam2 = two_part_quotient_eigen(d1, d2, n1, n2, r, a)
        m11 = (a + 1.0) * d1 - r / n1
        m22 = (a + 1.0) * d2 - r / n2
        # block-size symmetrization of [[m11, r/n1], [r/n2, m22]]
        off = r / math.sqrt(n1 * n2)
        sym = np.array([[m11, off], [off, m22]])
        ref = eigenvalues(sym)
        assert abs(lam1 - ref[0]) <= 1e-10 and abs(lam2 - ref[1]) <= 1e-10


def test_tridiagonal_and_jacobi_agree():
    g = seeded_graphs(master_seed=710, count=1, n_lo=8, n_hi=12)[0]
    M = build_matrix(g, ADJACENCY)
    d, e = householder_tridiagonalize(M)
    via_ql = sorted(ql_implicit_shift(d, e), reverse=True)
    via_jacobi = sorted(jacobi_eigenvalues(M), reverse=True)
    assert np.max(np.abs(np.array(via_ql) - np.array(via_jacobi))) < 1e-9
