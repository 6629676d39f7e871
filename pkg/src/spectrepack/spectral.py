"""Dense symmetric eigenvalue computation and interlacing checks.

The solver (Householder tridiagonalization followed by implicit-shift QL
iteration, with cyclic Jacobi as a fallback) is implemented here rather than
delegated to a LAPACK wrapper: the test suite pins its accuracy against
closed-form spectra, and keeping it in-repo makes that contract testable.
Dense storage only; the intended scale is a few thousand vertices at most.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import ConvergenceError, DomainError
from .graphs import Graph, normalize_partition

#: Comparison tolerance for interlacing and tightness checks.
INTERLACING_TOL = 1e-8

_EPS = np.finfo(float).eps
_MAX_QL_SWEEPS = 64


@dataclass(frozen=True)
class MatrixKind:
    """Coefficients (a, b) of the pencil a*D + b*A with b != 0 and a/b >= -1."""

    a: float
    b: float = 1.0

    def __post_init__(self):
        if self.b == 0:
            raise DomainError("matrix kind requires b != 0")
        if self.a / self.b < -1:
            raise DomainError("matrix kind requires a/b >= -1")


ADJACENCY = MatrixKind(0.0, 1.0)
LAPLACIAN = MatrixKind(1.0, -1.0)
SIGNLESS = MatrixKind(1.0, 1.0)


def build_matrix(g: Graph, kind: MatrixKind) -> np.ndarray:
    """Dense a*D + b*A for the graph; exactly symmetric by construction."""
    n = g.n
    M = np.zeros((n, n))
    for u in range(n):
        M[u, u] = kind.a * g.degree(u)
    for u, v in g.edges():
        M[u, v] = kind.b
        M[v, u] = kind.b
    return M


def _validate_symmetric(M: np.ndarray) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DomainError("expected a square matrix")
    if M.shape[0] == 0:
        raise DomainError("expected order >= 1")
    if not np.isfinite(M).all():
        raise DomainError("matrix entries must be finite")
    if not np.array_equal(M, M.T):
        raise DomainError("matrix must be exactly symmetric")
    return M


def householder_tridiagonalize(M: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Orthogonal reduction to tridiagonal form; returns (diagonal, subdiagonal)."""
    A = np.array(M, dtype=float, copy=True)
    n = A.shape[0]
    e = np.zeros(max(n - 1, 0))
    for k in range(n - 2):
        x = A[k + 1:, k]
        scale = float(np.abs(x).max())
        if scale == 0.0 or not x[1:].any():
            e[k] = x[0]
            continue
        xs = x / scale  # guards the norm against under/overflow
        norm_s = math.sqrt(float(xs @ xs))
        alpha_s = -math.copysign(norm_s, xs[0])
        v = xs
        v[0] -= alpha_s
        v /= math.sqrt(float(v @ v))
        B = A[k + 1:, k + 1:]
        w = B @ v
        p = 2.0 * (w - (v @ w) * v)
        B -= np.outer(v, p) + np.outer(p, v)
        e[k] = alpha_s * scale
    if n >= 2:
        e[n - 2] = A[n - 1, n - 2]
    return np.diag(A).copy(), e


def ql_implicit_shift(diag: Sequence[float], sub: Sequence[float]) -> list[float]:
    """Eigenvalues of a symmetric tridiagonal matrix by implicit-shift QL."""
    d = [float(x) for x in diag]
    e = [float(x) for x in sub] + [0.0]
    n = len(d)
    for l in range(n):
        sweeps = 0
        while True:
            for m in range(l, n - 1):
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * dd:
                    break
            else:
                m = n - 1
            if m == l:
                break
            sweeps += 1
            if sweeps > _MAX_QL_SWEEPS:
                raise ConvergenceError("QL iteration did not converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d


def jacobi_eigenvalues(M: np.ndarray, max_sweeps: int = 50) -> list[float]:
    """Cyclic Jacobi rotations; slower than QL but unconditionally robust."""
    A = np.array(M, dtype=float, copy=True)
    n = A.shape[0]
    scale = np.abs(A).max() or 1.0
    for _ in range(max_sweeps):
        off = math.sqrt(max(float((A**2).sum() - (np.diag(A) ** 2).sum()), 0.0))
        if off <= 1e-14 * scale * n:
            return list(np.diag(A))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= 1e-18 * scale:
                    continue
                # small root of t^2 - 2*theta*t - 1 = 0 zeroes the (p, q)
                # entry of R A R^T for R = [[c, s], [-s, c]]
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = -math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                rot = np.array([[c, s], [-s, c]])
                A[[p, q], :] = rot @ A[[p, q], :]
                A[:, [p, q]] = A[:, [p, q]] @ rot.T
        A = (A + A.T) / 2.0  # shed rounding asymmetry between sweeps
    raise ConvergenceError("Jacobi iteration did not converge")


def eigenvalues(M: np.ndarray) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, sorted non-increasing."""
    M = _validate_symmetric(M)
    n = M.shape[0]
    if n == 1:
        return np.array([M[0, 0]])
    d, e = householder_tridiagonalize(M)
    try:
        vals = ql_implicit_shift(d, e)
    except ConvergenceError:
        vals = jacobi_eigenvalues(M)
    return np.array(sorted(vals, reverse=True))


def lambda_i(g: Graph, kind: MatrixKind, i: int) -> float:
    """i-th largest eigenvalue (1-based) of a*D + b*A."""
    if not (1 <= i <= g.n):
        raise DomainError(f"eigenvalue index {i} out of range 1..{g.n}")
    return float(eigenvalues(build_matrix(g, kind))[i - 1])


def quotient_matrix(M: np.ndarray, blocks: Sequence[Iterable[int]], g: Graph | None = None) -> np.ndarray:
    """Average-row-sum quotient of M over a vertex partition.

    R[i][j] is the average over u in block i of the total M-weight from u to
    block j; not symmetric unless block sizes agree.
    """
    M = _validate_symmetric(M)
    blocks = _normalize_blocks(M.shape[0], blocks, g)
    m = len(blocks)
    R = np.zeros((m, m))
    for i, bi in enumerate(blocks):
        rows = M[sorted(bi), :]
        for j, bj in enumerate(blocks):
            R[i, j] = rows[:, sorted(bj)].sum() / len(bi)
    return R


def quotient_eigenvalues(M: np.ndarray, blocks: Sequence[Iterable[int]], g: Graph | None = None) -> np.ndarray:
    """Eigenvalues of the quotient, sorted non-increasing.

    The quotient of a symmetric matrix under the block-size weighting
    S^(1/2) R S^(-1/2) (S = diag of block sizes) is symmetric, so its
    spectrum is real and the symmetric solver applies.
    """
    M = _validate_symmetric(M)
    blocks = _normalize_blocks(M.shape[0], blocks, g)
    m = len(blocks)
    C = np.zeros((m, m))  # block sums; symmetric
    for i, bi in enumerate(blocks):
        rows = M[sorted(bi), :]
        for j, bj in enumerate(blocks):
            C[i, j] = rows[:, sorted(bj)].sum()
    sizes = np.array([len(b) for b in blocks], dtype=float)
    inv_sqrt = 1.0 / np.sqrt(sizes)
    sym = C * np.outer(inv_sqrt, inv_sqrt)
    sym = (sym + sym.T) / 2.0  # exact symmetry despite rounding
    return eigenvalues(sym)


def _normalize_blocks(order: int, blocks, g: Graph | None):
    if g is None:
        g = Graph(order, [])
    elif g.n != order:
        raise DomainError("partition graph order mismatch")
    return normalize_partition(g, blocks)


class InterlacingResult(NamedTuple):
    holds: bool
    tight: bool
    witness: int | None  # 1-based index of the first violated inequality


def check_interlacing(theta: Sequence[float], eta: Sequence[float],
                      tol: float = INTERLACING_TOL) -> InterlacingResult:
    """Check theta_i >= eta_i >= theta_{n-m+i} for i = 1..m, within tol.

    Tightness: some split point s in [0, m] has equality theta_i = eta_i for
    i <= s and theta_{n-m+i} = eta_i for i > s.
    """
    theta = list(theta)
    eta = list(eta)
    n, m = len(theta), len(eta)
    if n <= m:
        raise DomainError("interlacing requires the outer sequence to be longer")
    if any(theta[i] < theta[i + 1] - tol for i in range(n - 1)):
        raise DomainError("theta must be sorted non-increasing")
    if any(eta[i] < eta[i + 1] - tol for i in range(m - 1)):
        raise DomainError("eta must be sorted non-increasing")
    for i in range(m):
        upper = theta[i]
        lower = theta[n - m + i]
        if eta[i] > upper + tol or eta[i] < lower - tol:
            return InterlacingResult(False, False, i + 1)
    upper_eq = [abs(theta[i] - eta[i]) <= tol for i in range(m)]
    lower_eq = [abs(theta[n - m + i] - eta[i]) <= tol for i in range(m)]
    tight = any(
        all(upper_eq[:s]) and all(lower_eq[s:])
        for s in range(m + 1)
    )
    return InterlacingResult(True, tight, None)


def is_equitable(g: Graph, blocks: Sequence[Iterable[int]]) -> bool:
    """True iff every vertex of block i has the same neighbor count in block j."""
    parts = normalize_partition(g, blocks)
    block_of = {}
    for i, b in enumerate(parts):
        for v in b:
            block_of[v] = i
    for i, b in enumerate(parts):
        expected: dict[int, int] | None = None
        for u in sorted(b):
            counts = dict.fromkeys(range(len(parts)), 0)
            for w in g.neighbors(u):
                counts[block_of[w]] += 1
            if expected is None:
                expected = counts
            elif counts != expected:
                return False
    return True


def two_part_quotient_eigen(dbar1: float, dbar2: float, n1: int, n2: int,
                            r: int, a: float) -> tuple[float, float]:
    """Closed-form eigenvalues of the 2x2 quotient of a*D + A over a 2-cut.

    The quotient matrix for sides of sizes n1, n2 with average degrees
    dbar1, dbar2 and r crossing edges is
        [[(a+1)*dbar1 - r/n1, r/n1], [r/n2, (a+1)*dbar2 - r/n2]].
    Returned pair is (largest, smallest).
    """
    if n1 < 1 or n2 < 1:
        raise DomainError("side sizes must be positive")
    if r < 0:
        raise DomainError("crossing edge count must be non-negative")
    m11 = (a + 1.0) * dbar1 - r / n1
    m22 = (a + 1.0) * dbar2 - r / n2
    trace = m11 + m22
    disc = math.sqrt((m11 - m22) ** 2 + 4.0 * r * r / (n1 * n2))
    return (trace + disc) / 2.0, (trace - disc) / 2.0
