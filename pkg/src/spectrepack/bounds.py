"""Closed-form combinatorial bounds and spectral thresholds.

All bound arithmetic is done in exact (arbitrary-precision) integers, with a
single final division to float where a threshold is real-valued: the
geometric terms (delta-1)^t grow quickly and silent float drift would
corrupt strict-inequality checks downstream.
"""

from __future__ import annotations

import math

from .errors import DomainError, NotApplicableError


def _check_delta_g(delta: int, g) -> int:
    if delta != int(delta) or delta < 2:
        raise DomainError("minimum degree must be an integer >= 2")
    if g == math.inf:
        raise NotApplicableError("girth is infinite (acyclic graph)")
    if g != int(g) or g < 3:
        raise DomainError("girth must be an integer >= 3")
    return int(g)


def min_cut_side_order(delta: int, g) -> int:
    """Least possible order of a cut side X with d(X) < delta, given girth g.

    With t = floor((g-1)/2) the value is
        1 + delta + sum_{i=2..t} (delta-1)^i          for odd  g = 2t+1,
        2 + 2*(delta-1)^t + sum_{i=1..t-1} (delta-1)^i for even g = 2t+2.
    """
    g = _check_delta_g(delta, g)
    delta = int(delta)
    t = (g - 1) // 2
    q = delta - 1
    if g == 2 * t + 1:
        return 1 + delta + sum(q**i for i in range(2, t + 1))
    return 2 + 2 * q**t + sum(q**i for i in range(1, t))


#: Short alias used throughout the threshold formulas.
n1_star = min_cut_side_order


def moore_bound(d: int, g) -> int:
    """Minimum order of a d-regular simple graph of girth g (Moore bound).

    1 + d * sum_{i=0..t-1} (d-1)^i for odd g, 2 * sum_{i=0..t} (d-1)^i for
    even g, where t = floor((g-1)/2).
    """
    g = _check_delta_g(d, g)
    d = int(d)
    t = (g - 1) // 2
    q = d - 1
    if g == 2 * t + 1:
        return 1 + d * sum(q**i for i in range(t))
    return 2 * sum(q**i for i in range(t + 1))


def _common_preconditions(delta: int, k: int, g, a: float) -> None:
    if k != int(k) or k < 2:
        raise NotApplicableError("k >= 2 required")
    if a < -1:
        raise NotApplicableError("a >= -1 required")
    if g == math.inf:
        raise NotApplicableError("finite girth required")


def tau_threshold(delta: int, k: int, g, a: float) -> float:
    """Spectral threshold certifying k edge-disjoint spanning trees.

    lambda_2 of a*D + A strictly below (a+1)*delta - (2k-1)/n1 implies the
    packing number is at least k, where n1 = min_cut_side_order(delta, g).
    Requires delta >= 2k >= 4.
    """
    _common_preconditions(delta, k, g, a)
    if delta < 2 * k:
        raise NotApplicableError("delta >= 2k required")
    n1 = min_cut_side_order(delta, g)
    return (a + 1.0) * delta - (2 * k - 1) / n1


def kappa_threshold_weak(delta: int, k: int, g, a: float) -> float:
    """Threshold for edge-connectivity >= k (strict-inequality form).

    lambda_2 of a*D + A strictly below (a+1)*delta - 2(k-1)/n1 implies
    edge-connectivity at least k.  Requires delta >= k >= 2.
    """
    _common_preconditions(delta, k, g, a)
    if delta < k:
        raise NotApplicableError("delta >= k required")
    n1 = min_cut_side_order(delta, g)
    return (a + 1.0) * delta - 2 * (k - 1) / n1


def kappa_threshold_strong(delta: int, k: int, g, a: float, n: int) -> float:
    """Order-aware threshold for edge-connectivity >= k (non-strict form).

    lambda_2 of a*D + A at most (a+1)*delta - (k-1)*n / (n1*(n - n1))
    implies edge-connectivity at least k.  The formula presumes a cut whose
    both sides can reach size n1, so it is only returned for n > n1.
    """
    _common_preconditions(delta, k, g, a)
    if delta < k:
        raise NotApplicableError("delta >= k required")
    n1 = min_cut_side_order(delta, g)
    if n <= n1:
        raise NotApplicableError(f"order n={n} must exceed the cut-side bound {n1}")
    return (a + 1.0) * delta - (k - 1) * n / (n1 * (n - n1))
