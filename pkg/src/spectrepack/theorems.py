"""Verdict engine: spectral-threshold checks with exact verification.

Each checker evaluates one sufficient condition of the form "an eigenvalue
of a*D + b*A on the right side of a girth-dependent threshold forces
edge-connectivity >= k (or k edge-disjoint spanning trees)" on a concrete
graph, then verifies the forced conclusion against the exact invariant.

Inapplicability (wrong minimum degree, infinite girth, ...) is data, not an
error: sweeps over graph families must aggregate cleanly.  A verdict is
`sound` unless its hypothesis held while exact verification refuted the
conclusion; such a verdict would witness an implementation bug and is never
dropped silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

import numpy as np

from . import bounds
from .connectivity import PackingDecision, edge_connectivity, tau_at_least
from .errors import DomainError, GuardRefusal, NotApplicableError
from .graphs import (
    Graph,
    boundary,
    cross_edges,
    degree_stats,
    girth,
    is_bipartite,
    to_graph6,
)
from .rng import SplitMix64, derive_seed
from .spectral import MatrixKind, build_matrix, eigenvalues

THEOREM_IDS = (
    "MAIN1_I",
    "MAIN1_II",
    "MAIN2",
    "COR2_I",
    "COR2_II",
    "COR2_III",
    "CO3_2_I",
    "CO3_2_II",
    "CO3_3_I",
    "CO3_3_II",
    "CO3_3_III",
    "CO3_5",
    "LEMMA3_1",
    "LEMMA4_1",
)

#: Exact conclusion verification defaults to on below this order.
VERIFY_DEFAULT_MAX_N = 200

_LEMMA31_MAX_N = 16


class GraphAnalysis:
    """Lazily cached per-graph quantities shared by the checkers.

    Checkers accept either a Graph or a GraphAnalysis; passing the same
    analysis to several checkers reuses spectra and exact invariants.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self._spectra: dict[tuple[float, float], np.ndarray] = {}
        self._stats: tuple[int, int, float] | None = None
        self._girth: int | float | None = None
        self._bipartite: bool | None = None
        self._kappa: tuple[int, frozenset[int]] | None = None
        self._packings: dict[int, PackingDecision] = {}

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    @property
    def delta(self) -> int:
        if self._stats is None:
            self._stats = degree_stats(self.graph)
        return self._stats[0]

    @property
    def max_degree(self) -> int:
        if self._stats is None:
            self._stats = degree_stats(self.graph)
        return self._stats[1]

    @property
    def average_degree(self) -> float:
        if self._stats is None:
            self._stats = degree_stats(self.graph)
        return self._stats[2]

    @property
    def girth(self) -> int | float:
        if self._girth is None:
            self._girth = girth(self.graph)
        return self._girth

    @property
    def bipartite(self) -> bool:
        if self._bipartite is None:
            self._bipartite = is_bipartite(self.graph)
        return self._bipartite

    def spectrum(self, a: float, b: float = 1.0) -> np.ndarray:
        key = (float(a), float(b))
        if key not in self._spectra:
            M = build_matrix(self.graph, MatrixKind(a=key[0], b=key[1]))
            self._spectra[key] = eigenvalues(M)
        return self._spectra[key]

    def lambda_i(self, i: int, a: float, b: float = 1.0) -> float:
        return float(self.spectrum(a, b)[i - 1])

    def kappa_prime(self) -> tuple[int, frozenset[int]]:
        if self._kappa is None:
            self._kappa = edge_connectivity(self.graph)
        return self._kappa

    def tau_at_least(self, k: int) -> PackingDecision:
        if k not in self._packings:
            self._packings[k] = tau_at_least(self.graph, k)
        return self._packings[k]

    def n1_star(self) -> int | None:
        """Cut-side order bound for this graph, or None when undefined."""
        if self.n == 0 or self.delta < 2 or self.girth == math.inf:
            return None
        return bounds.min_cut_side_order(self.delta, self.girth)


def _analysis(g: Graph | GraphAnalysis) -> GraphAnalysis:
    return g if isinstance(g, GraphAnalysis) else GraphAnalysis(g)


@dataclass(frozen=True)
class Verdict:
    theorem: str
    applicable: bool
    hypothesis_holds: bool
    margin: float | None
    conclusion_claim: str
    conclusion_verified: bool | None  # None = exact verification skipped
    exact_values: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def sound(self) -> bool:
        return not (
            self.applicable
            and self.hypothesis_holds
            and self.conclusion_verified is False
        )

    def to_json_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "applicable": self.applicable,
            "hypothesis_holds": self.hypothesis_holds,
            "margin": self.margin,
            "conclusion_claim": self.conclusion_claim,
            "conclusion_verified": (
                "skipped" if self.conclusion_verified is None else self.conclusion_verified
            ),
            "exact_values": dict(sorted(self.exact_values.items())),
            "sound": self.sound,
            "details": dict(sorted(self.details.items())),
        }


def _inapplicable(theorem: str, claim: str, reasons: list[str], details: dict) -> Verdict:
    details = dict(details)
    details["inapplicable_because"] = reasons
    return Verdict(
        theorem=theorem,
        applicable=False,
        hypothesis_holds=False,
        margin=None,
        conclusion_claim=claim,
        conclusion_verified=None,
        exact_values={},
        details=details,
    )


def _should_verify(ana: GraphAnalysis, verify: bool | None) -> bool:
    if verify is None:
        return ana.n <= VERIFY_DEFAULT_MAX_N
    return verify


def _verify_kappa(ana: GraphAnalysis, k: int, verify: bool | None):
    if not _should_verify(ana, verify):
        return None, {}
    value, _witness = ana.kappa_prime()
    return value >= k, {"kappa_prime": value}


def _verify_tau(ana: GraphAnalysis, k: int, verify: bool | None):
    if not _should_verify(ana, verify):
        return None, {}
    decision = ana.tau_at_least(k)
    return decision.answer, {"tau_at_least_k": decision.answer}


def _structural_reasons(ana: GraphAnalysis, k: int, a: float, min_delta: int) -> list[str]:
    reasons = []
    if k != int(k) or k < 2:
        reasons.append("k >= 2 required")
    if a < -1:
        reasons.append("a >= -1 required")
    if ana.girth == math.inf:
        reasons.append("finite girth required")
    if ana.n >= 1 and ana.delta < min_delta:
        reasons.append(f"minimum degree >= {min_delta} required, have {ana.delta}")
    if ana.n < 2:
        reasons.append("at least two vertices required")
    return reasons


def check_main1(g: Graph | GraphAnalysis, k: int, a: float = 0.0,
                variant: str = "weak", verify: bool | None = None) -> Verdict:
    """Edge-connectivity certificate from lambda_2 of a*D + A.

    variant "weak": strict inequality against (a+1)*delta - 2(k-1)/n1.
    variant "strong": non-strict against (a+1)*delta - (k-1)n/(n1(n-n1)),
    applicable only when n >= 2*n1 (both sides of a hypothetical small cut
    must be able to reach the cut-side order bound n1).
    """
    if variant not in ("weak", "strong"):
        raise DomainError(f"unknown variant {variant!r}")
    theorem = "MAIN1_I" if variant == "strong" else "MAIN1_II"
    ana = _analysis(g)
    claim = f"kappa_prime >= {int(k)}"
    details: dict = {"k": int(k), "a": a, "variant": variant}
    reasons = _structural_reasons(ana, k, a, min_delta=max(int(k), 2))
    n1 = ana.n1_star() if not reasons else None
    if not reasons and variant == "strong" and ana.n < 2 * n1:
        reasons.append(f"order n={ana.n} below 2*n1={2 * n1}")
    if reasons:
        return _inapplicable(theorem, claim, reasons, details)
    details.update({"delta": ana.delta, "girth": ana.girth, "n1_star": n1})
    if variant == "strong":
        threshold = bounds.kappa_threshold_strong(ana.delta, k, ana.girth, a, ana.n)
    else:
        threshold = bounds.kappa_threshold_weak(ana.delta, k, ana.girth, a)
    eig = ana.lambda_i(2, a)
    hypothesis = eig <= threshold if variant == "strong" else eig < threshold
    verified, exact = _verify_kappa(ana, k, verify)
    details.update({"threshold": threshold, "eigenvalue": eig})
    return Verdict(
        theorem=theorem,
        applicable=True,
        hypothesis_holds=hypothesis,
        margin=threshold - eig,
        conclusion_claim=claim,
        conclusion_verified=verified,
        exact_values=exact,
        details=details,
    )


def check_main2(g: Graph | GraphAnalysis, k: int, a: float = 0.0,
                verify: bool | None = None) -> Verdict:
    """Tree-packing certificate: lambda_2(aD+A) < (a+1)*delta - (2k-1)/n1,
    for minimum degree >= 2k, forces k edge-disjoint spanning trees."""
    ana = _analysis(g)
    claim = f"tau >= {int(k)}"
    details: dict = {"k": int(k), "a": a}
    reasons = _structural_reasons(ana, k, a, min_delta=2 * max(int(k), 2))
    if reasons:
        return _inapplicable("MAIN2", claim, reasons, details)
    threshold = bounds.tau_threshold(ana.delta, k, ana.girth, a)
    eig = ana.lambda_i(2, a)
    verified, exact = _verify_tau(ana, k, verify)
    details.update({
        "delta": ana.delta,
        "girth": ana.girth,
        "n1_star": ana.n1_star(),
        "threshold": threshold,
        "eigenvalue": eig,
    })
    return Verdict(
        theorem="MAIN2",
        applicable=True,
        hypothesis_holds=eig < threshold,
        margin=threshold - eig,
        conclusion_claim=claim,
        conclusion_verified=verified,
        exact_values=exact,
        details=details,
    )


def check_cor2(g: Graph | GraphAnalysis, k: int, variant: str,
               verify: bool | None = None) -> Verdict:
    """Tree-packing certificates in adjacency / Laplacian / signless form.

    variant "i":   lambda_2 <  delta - (2k-1)/n1
    variant "ii":  mu_{n-1} >  (2k-1)/n1      (second-smallest Laplacian)
    variant "iii": q_2      <  2*delta - (2k-1)/n1
    Equivalent to the a in {0, -1, 1} specializations of `check_main2`; the
    Laplacian variant flips sign because -D + A = -L.
    """
    if variant not in ("i", "ii", "iii"):
        raise DomainError(f"unknown variant {variant!r}")
    theorem = {"i": "COR2_I", "ii": "COR2_II", "iii": "COR2_III"}[variant]
    a = {"i": 0.0, "ii": -1.0, "iii": 1.0}[variant]
    ana = _analysis(g)
    claim = f"tau >= {int(k)}"
    details: dict = {"k": int(k), "a": a, "variant": variant}
    reasons = _structural_reasons(ana, k, a, min_delta=2 * max(int(k), 2))
    if reasons:
        return _inapplicable(theorem, claim, reasons, details)
    n1 = ana.n1_star()
    base = (2 * int(k) - 1) / n1
    eig_a = ana.lambda_i(2, a)
    if variant == "ii":
        mu = -eig_a  # lambda_2(-D + A) = -mu_{n-1}
        threshold = base
        hypothesis = mu > threshold
        margin = mu - threshold
        eig_reported = mu
    else:
        threshold = (a + 1.0) * ana.delta - base
        hypothesis = eig_a < threshold
        margin = threshold - eig_a
        eig_reported = eig_a
    verified, exact = _verify_tau(ana, k, verify)
    details.update({
        "delta": ana.delta,
        "girth": ana.girth,
        "n1_star": n1,
        "threshold": threshold,
        "eigenvalue": eig_reported,
    })
    return Verdict(
        theorem=theorem,
        applicable=True,
        hypothesis_holds=hypothesis,
        margin=margin,
        conclusion_claim=claim,
        conclusion_verified=verified,
        exact_values=exact,
        details=details,
    )


def check_co3_general(g: Graph | GraphAnalysis, k: int, a: float, b: float,
                      target: str, verify: bool | None = None) -> Verdict:
    """General (a, b) pencil form of the connectivity/packing certificates.

    For b > 0 the hypothesis constrains lambda_2 of a*D + b*A from above;
    for b < 0 it constrains lambda_{n-1} from below (multiplying by a
    negative b reverses eigenvalue order).  Thresholds are
    (a+b)*delta - b*c/n1 with c = (k-1)n/(n-n1), 2(k-1), or 2k-1 for
    targets kappa_strong, kappa_weak, and tau respectively.
    """
    if target not in ("kappa_strong", "kappa_weak", "tau"):
        raise DomainError(f"unknown target {target!r}")
    # verdicts carry the id of the theorem the pencil form instantiates;
    # only the order-aware kappa target has pencil-specific ids
    theorem = {
        "kappa_strong": "CO3_2_I" if b > 0 else "CO3_2_II",
        "kappa_weak": "MAIN1_II",
        "tau": "MAIN2",
    }[target]
    ana = _analysis(g)
    is_tau = target == "tau"
    claim = f"tau >= {int(k)}" if is_tau else f"kappa_prime >= {int(k)}"
    details: dict = {"k": int(k), "a": a, "b": b, "target": target}
    reasons = []
    if b == 0:
        reasons.append("b != 0 required")
    elif a / b < -1:
        reasons.append("a/b >= -1 required")
    min_delta = 2 * max(int(k), 2) if is_tau else max(int(k), 2)
    reasons.extend(_structural_reasons(ana, k, a=0.0, min_delta=min_delta))
    n1 = ana.n1_star() if not reasons else None
    if not reasons and target == "kappa_strong" and ana.n < 2 * n1:
        reasons.append(f"order n={ana.n} below 2*n1={2 * n1}")
    if reasons:
        return _inapplicable(theorem, claim, reasons, details)
    # same association as the b=1 threshold formulas, so the (a, b) = (a, 1)
    # case reduces to them bit-for-bit
    if target == "kappa_strong":
        ratio = (int(k) - 1) * ana.n / (n1 * (ana.n - n1))
    elif target == "kappa_weak":
        ratio = 2 * (int(k) - 1) / n1
    else:
        ratio = (2 * int(k) - 1) / n1
    threshold = (a + b) * ana.delta - b * ratio
    if b > 0:
        eig = ana.lambda_i(2, a, b)
        if target == "kappa_strong":
            hypothesis = eig <= threshold
        else:
            hypothesis = eig < threshold
        margin = threshold - eig
    else:
        eig = ana.lambda_i(ana.n - 1, a, b)
        if target == "kappa_strong":
            hypothesis = eig >= threshold
        else:
            hypothesis = eig > threshold
        margin = eig - threshold
    if is_tau:
        verified, exact = _verify_tau(ana, k, verify)
    else:
        verified, exact = _verify_kappa(ana, k, verify)
    details.update({
        "delta": ana.delta,
        "girth": ana.girth,
        "n1_star": n1,
        "threshold": threshold,
        "eigenvalue": eig,
    })
    return Verdict(
        theorem=theorem,
        applicable=True,
        hypothesis_holds=hypothesis,
        margin=margin,
        conclusion_claim=claim,
        conclusion_verified=verified,
        exact_values=exact,
        details=details,
    )


def check_co3_3(g: Graph | GraphAnalysis, k: int, variant: str,
                verify: bool | None = None) -> Verdict:
    """Order-aware edge-connectivity certificates (non-strict inequalities)
    in adjacency / Laplacian / signless form: the (a, b) in
    {(0,1), (1,-1), (1,1)} specializations of the strong kappa target."""
    if variant not in ("i", "ii", "iii"):
        raise DomainError(f"unknown variant {variant!r}")
    theorem = {"i": "CO3_3_I", "ii": "CO3_3_II", "iii": "CO3_3_III"}[variant]
    a, b = {"i": (0.0, 1.0), "ii": (1.0, -1.0), "iii": (1.0, 1.0)}[variant]
    verdict = check_co3_general(g, k, a, b, target="kappa_strong", verify=verify)
    details = dict(verdict.details)
    details["variant"] = variant
    return Verdict(
        theorem=theorem,
        applicable=verdict.applicable,
        hypothesis_holds=verdict.hypothesis_holds,
        margin=verdict.margin,
        conclusion_claim=verdict.conclusion_claim,
        conclusion_verified=verdict.conclusion_verified,
        exact_values=verdict.exact_values,
        details=details,
    )


def check_co3_5(g: Graph | GraphAnalysis, k: int, verify: bool | None = None) -> Verdict:
    """Bipartite edge-connectivity certificate: lambda_2 < delta - (k-1)/delta.

    Bipartiteness with minimum degree >= 2 forces an even girth >= 4, so the
    threshold coincides with the weak kappa threshold evaluated at girth 4.
    """
    ana = _analysis(g)
    claim = f"kappa_prime >= {int(k)}"
    details: dict = {"k": int(k)}
    reasons = []
    if k != int(k) or k < 2:
        reasons.append("k >= 2 required")
    if not ana.bipartite:
        reasons.append("bipartite graph required")
    if ana.n >= 1 and ana.delta < max(int(k), 2):
        reasons.append(f"minimum degree >= {max(int(k), 2)} required, have {ana.delta}")
    if ana.n < 2:
        reasons.append("at least two vertices required")
    if reasons:
        return _inapplicable("CO3_5", claim, reasons, details)
    threshold = ana.delta - (int(k) - 1) / ana.delta
    # bipartite with delta >= 2 has a cycle, of even length >= 4
    assert ana.girth != math.inf and ana.girth >= 4
    assert threshold == bounds.kappa_threshold_weak(ana.delta, k, 4, 0.0)
    eig = ana.lambda_i(2, 0.0)
    verified, exact = _verify_kappa(ana, k, verify)
    details.update({
        "delta": ana.delta,
        "girth": ana.girth,
        "threshold": threshold,
        "eigenvalue": eig,
    })
    return Verdict(
        theorem="CO3_5",
        applicable=True,
        hypothesis_holds=eig < threshold,
        margin=threshold - eig,
        conclusion_claim=claim,
        conclusion_verified=verified,
        exact_values=exact,
        details=details,
    )


class Lemma31Result(NamedTuple):
    holds: bool
    violations: list[frozenset[int]]


def check_lemma3_1(g: Graph | GraphAnalysis) -> Lemma31Result:
    """Exhaustively confirm: every X with d(X) < delta has |X| >= n1.

    n1 is the cut-side order bound for (delta, girth).  This is a proven
    statement, so `holds` must be True on every valid input; a violation
    would witness a bug in the bound or the enumeration.  Guard: n <= 16.
    """
    ana = _analysis(g)
    if ana.n > _LEMMA31_MAX_N:
        raise GuardRefusal(f"cut-side enumeration capped at n={_LEMMA31_MAX_N}")
    if ana.n < 2:
        raise NotApplicableError("at least two vertices required")
    if ana.delta < 2:
        raise NotApplicableError("minimum degree >= 2 required")
    if ana.girth == math.inf:
        raise NotApplicableError("finite girth required")
    n1 = ana.n1_star()
    n = ana.n
    g_ = ana.graph
    masks = np.arange(1, (1 << n) - 1, dtype=np.uint32)  # non-empty proper X
    cut = np.zeros(masks.shape, dtype=np.int32)
    for u, v in g_.edges():
        bu = (masks >> np.uint32(u)) & 1
        bv = (masks >> np.uint32(v)) & 1
        cut += bu != bv
    sizes = np.zeros(masks.shape, dtype=np.int32)
    for v in range(n):
        sizes += ((masks >> np.uint32(v)) & 1).astype(np.int32)
    bad = np.flatnonzero((cut < ana.delta) & (sizes < n1))
    violations = [
        frozenset(v for v in range(n) if (int(masks[i]) >> v) & 1)
        for i in bad
    ]
    return Lemma31Result(len(violations) == 0, violations)


class Lemma41Result(NamedTuple):
    applicable: bool
    inequality_holds: bool
    lhs: float
    rhs: float


def check_lemma4_1(g: Graph | GraphAnalysis, members_x: Iterable[int],
                   members_y: Iterable[int], a: float) -> Lemma41Result:
    """Check the cross-edge lower bound for disjoint vertex sets X, Y:

        e(X,Y)^2 >= ((a+1)d - d(X)/|X| - L2) * ((a+1)d - d(Y)/|Y| - L2) * |X||Y|

    with d the minimum degree and L2 = lambda_2(aD+A), applicable whenever
    L2 <= (a+1)d - max(d(X)/|X|, d(Y)/|Y|).  The inequality is a proven
    statement: on applicable inputs it must hold (up to tolerance).
    """
    if a < -1:
        raise DomainError("a >= -1 required")
    ana = _analysis(g)
    x = frozenset(members_x)
    y = frozenset(members_y)
    exy = cross_edges(ana.graph, x, y)  # validates disjoint / non-empty
    dx = boundary(ana.graph, x) if len(x) < ana.n else 0
    dy = boundary(ana.graph, y)
    lam2 = ana.lambda_i(2, a)
    base = (a + 1.0) * ana.delta
    applicable = lam2 <= base - max(dx / len(x), dy / len(y))
    lhs = float(exy) ** 2
    rhs = (base - dx / len(x) - lam2) * (base - dy / len(y) - lam2) * len(x) * len(y)
    holds = lhs >= rhs - 1e-8 * (1.0 + abs(rhs))
    return Lemma41Result(applicable, holds, lhs, rhs)


# --- randomized counterexample sweeps ---------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    """One randomized sweep: a graph family, a checker, and a trial budget."""

    family: str  # "random_regular" or "random_min_degree"
    n_min: int
    n_max: int
    k: int
    theorem: str
    trials: int
    master_seed: int
    d: int | None = None  # regular degree (random_regular)
    delta: int | None = None  # minimum degree (random_min_degree)
    a: float = 0.0
    b: float = 1.0
    verify_conclusions: bool = True
    near_boundary: float = 0.05  # reporting heuristic only; never a verdict

    def validate(self) -> None:
        if self.family not in ("random_regular", "random_min_degree"):
            raise DomainError(f"unknown sweep family {self.family!r}")
        if self.theorem not in THEOREM_IDS:
            raise DomainError(f"unknown theorem id {self.theorem!r}")
        if self.trials < 0:
            raise DomainError("trials must be non-negative")
        if self.n_min > self.n_max or self.n_min < 1:
            raise DomainError("bad order range")
        if self.family == "random_regular" and self.d is None:
            raise DomainError("random_regular sweep needs d")
        if self.family == "random_min_degree" and self.delta is None:
            raise DomainError("random_min_degree sweep needs delta")

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "d": self.d,
            "delta": self.delta,
            "k": self.k,
            "a": self.a,
            "b": self.b,
            "theorem": self.theorem,
            "trials": self.trials,
            "master_seed": self.master_seed,
            "verify_conclusions": self.verify_conclusions,
            "near_boundary": self.near_boundary,
        }


@dataclass(frozen=True)
class SearchReport:
    config: SearchConfig
    counts: dict
    min_margin: float | None
    near_boundary: tuple[dict, ...]
    sound_failures: tuple[dict, ...]

    def to_json_dict(self) -> dict:
        return {
            "config": self.config.to_json_dict(),
            "counts": {
                "inapplicable": self.counts["inapplicable"],
                "hypothesis_false": self.counts["hypothesis_false"],
                "sound": self.counts["sound"],
                "sound_false": self.counts["sound_false"],
            },
            "min_margin": self.min_margin,
            "near_boundary": list(self.near_boundary),
            "sound_failures": list(self.sound_failures),
        }


def run_check(theorem: str, g: Graph | GraphAnalysis, k: int, a: float = 0.0,
              b: float = 1.0, verify: bool | None = None,
              rng: SplitMix64 | None = None) -> Verdict:
    """Dispatch a TheoremId to its checker and return the verdict.

    The lemma checkers are wrapped into verdicts (no spectral hypothesis;
    `conclusion_verified` reports whether the proven statement held).
    LEMMA4_1 samples its disjoint vertex pair from `rng`.
    """
    if theorem not in THEOREM_IDS:
        raise DomainError(f"unknown theorem id {theorem!r}")
    ana = _analysis(g)
    if theorem == "MAIN1_I":
        return check_main1(ana, k, a, variant="strong", verify=verify)
    if theorem == "MAIN1_II":
        return check_main1(ana, k, a, variant="weak", verify=verify)
    if theorem == "MAIN2":
        return check_main2(ana, k, a, verify=verify)
    if theorem in ("COR2_I", "COR2_II", "COR2_III"):
        variant = {"COR2_I": "i", "COR2_II": "ii", "COR2_III": "iii"}[theorem]
        return check_cor2(ana, k, variant, verify=verify)
    if theorem == "CO3_2_I":
        return check_co3_general(ana, k, a, abs(b), "kappa_strong", verify=verify)
    if theorem == "CO3_2_II":
        return check_co3_general(ana, k, a, -abs(b), "kappa_strong", verify=verify)
    if theorem in ("CO3_3_I", "CO3_3_II", "CO3_3_III"):
        variant = {"CO3_3_I": "i", "CO3_3_II": "ii", "CO3_3_III": "iii"}[theorem]
        return check_co3_3(ana, k, variant, verify=verify)
    if theorem == "CO3_5":
        return check_co3_5(ana, k, verify=verify)
    if theorem == "LEMMA3_1":
        return _lemma31_verdict(ana)
    return _lemma41_verdict(ana, a, rng)


def _lemma31_verdict(ana: GraphAnalysis) -> Verdict:
    claim = "every side with boundary < delta has at least n1 vertices"
    try:
        result = check_lemma3_1(ana)
    except (GuardRefusal, NotApplicableError) as exc:
        return _inapplicable("LEMMA3_1", claim, [str(exc)], {})
    return Verdict(
        theorem="LEMMA3_1",
        applicable=True,
        hypothesis_holds=True,
        margin=None,
        conclusion_claim=claim,
        conclusion_verified=result.holds,
        exact_values={"violations": len(result.violations)},
        details={"delta": ana.delta, "girth": ana.girth, "n1_star": ana.n1_star()},
    )


def _lemma41_verdict(ana: GraphAnalysis, a: float, rng: SplitMix64 | None) -> Verdict:
    claim = "cross-edge square bound holds"
    if rng is None:
        rng = SplitMix64(0)
    n = ana.n
    if n < 4:
        return _inapplicable("LEMMA4_1", claim, ["need n >= 4 to sample sets"], {"a": a})
    verts = list(range(n))
    rng.shuffle(verts)
    size_x = 1 + rng.randbelow(max(n // 3, 1))
    size_y = 1 + rng.randbelow(max(n // 3, 1))
    x, y = verts[:size_x], verts[size_x:size_x + size_y]
    result = check_lemma4_1(ana, x, y, a)
    if not result.applicable:
        return _inapplicable(
            "LEMMA4_1", claim, ["sampled pair fails the eigenvalue precondition"],
            {"a": a, "x": sorted(x), "y": sorted(y)},
        )
    return Verdict(
        theorem="LEMMA4_1",
        applicable=True,
        hypothesis_holds=True,
        margin=result.lhs - result.rhs,
        conclusion_claim=claim,
        conclusion_verified=result.inequality_holds,
        exact_values={"lhs": result.lhs, "rhs": result.rhs},
        details={"a": a, "x": sorted(x), "y": sorted(y)},
    )


def counterexample_search(config: SearchConfig) -> SearchReport:
    """Run a deterministic randomized sweep of one checker over a family.

    Trial i derives its seed from the master seed alone, so reports are
    byte-identical across runs and machines.  A verdict with sound=False
    (hypothesis held, exact verification refuted the conclusion) is recorded
    in full and surfaced in the report; it is never dropped.
    """
    config.validate()
    counts = {"inapplicable": 0, "hypothesis_false": 0, "sound": 0, "sound_false": 0}
    min_margin: float | None = None
    near: list[dict] = []
    failures: list[dict] = []
    for trial in range(config.trials):
        seed = derive_seed(config.master_seed, trial)
        rng = SplitMix64(seed)
        g = _sweep_graph(config, rng)
        verdict = run_check(
            config.theorem, g, config.k, config.a, config.b,
            verify=config.verify_conclusions, rng=rng,
        )
        if not verdict.applicable:
            counts["inapplicable"] += 1
        elif not verdict.hypothesis_holds:
            counts["hypothesis_false"] += 1
        elif verdict.sound:
            counts["sound"] += 1
        else:
            counts["sound_false"] += 1
            failures.append({
                "trial": trial,
                "seed": seed,
                "graph6": to_graph6(g),
                "verdict": verdict.to_json_dict(),
            })
        if verdict.margin is not None:
            if min_margin is None or verdict.margin < min_margin:
                min_margin = verdict.margin
            if abs(verdict.margin) < config.near_boundary:
                near.append({
                    "trial": trial,
                    "seed": seed,
                    "graph6": to_graph6(g),
                    "margin": verdict.margin,
                })
    return SearchReport(
        config=config,
        counts=counts,
        min_margin=min_margin,
        near_boundary=tuple(near),
        sound_failures=tuple(failures),
    )


def _sweep_graph(config: SearchConfig, rng: SplitMix64) -> Graph:
    from . import generators  # local import to avoid a cycle

    if config.family == "random_regular":
        d = int(config.d)
        orders = [n for n in range(config.n_min, config.n_max + 1) if n * d % 2 == 0 and n > d]
        if not orders:
            raise DomainError("no feasible order in range for the requested degree")
        n = orders[rng.randbelow(len(orders))]
        return generators.random_regular(n, d, rng.next_u64())
    delta = int(config.delta)
    orders = [n for n in range(config.n_min, config.n_max + 1) if n > delta]
    if not orders:
        raise DomainError("no feasible order in range for the requested min degree")
    n = orders[rng.randbelow(len(orders))]
    return generators.random_min_degree(n, delta, rng.next_u64())
