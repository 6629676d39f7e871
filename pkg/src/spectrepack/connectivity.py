"""Exact edge-connectivity and spanning-tree packing numbers.

Two independent routes are provided for each quantity: a polynomial
algorithm (Stoer-Wagner minimum cut; matroid-union forest packing) and an
exhaustive oracle (cut enumeration; Nash-Williams/Tutte partition
enumeration).  The oracles carry hard size guards and refuse larger inputs
instead of silently truncating.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, NamedTuple

import numpy as np

from .errors import DomainError, GuardRefusal
from .graphs import Graph, connected_components, delete_edges, is_connected

_ORACLE_MAX_N = 12
_BRUTE_CUT_MAX_N = 16


def edge_connectivity(g: Graph) -> tuple[int, frozenset[int]]:
    """Global minimum edge cut by Stoer-Wagner, with a witnessing side.

    Deterministic tie-breaking: each phase starts from the lowest-index
    live supernode and maximum-adjacency selection breaks ties toward the
    lowest index.  Contracted supernodes keep the smaller index as
    representative.  Disconnected graphs yield (0, first component).
    """
    if g.n < 2:
        raise DomainError("edge connectivity needs at least two vertices")
    comps = connected_components(g)
    if len(comps) > 1:
        return 0, comps[0]
    n = g.n
    W = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges():
        W[u, v] = 1
        W[v, u] = 1
    alive = np.ones(n, dtype=bool)
    groups: dict[int, list[int]] = {v: [v] for v in range(n)}
    best_value: int | None = None
    best_side: frozenset[int] = frozenset()
    num_alive = n
    while num_alive > 1:
        start = int(np.flatnonzero(alive)[0])
        eligible = alive.copy()
        eligible[start] = False
        w = W[start].copy()
        prev = start
        last = start
        last_weight = 0
        for _ in range(num_alive - 1):
            masked = np.where(eligible, w, np.int64(-1))
            v = int(masked.argmax())  # first maximum = lowest index
            prev = last
            last = v
            last_weight = int(w[v])
            eligible[v] = False
            w = w + W[v]
        if best_value is None or last_weight < best_value:
            best_value = last_weight
            best_side = frozenset(groups[last])
        rep, gone = (prev, last) if prev < last else (last, prev)
        merged_row = W[prev] + W[last]
        W[rep, :] = merged_row
        W[:, rep] = merged_row
        W[rep, rep] = 0
        groups[rep] = groups[prev] + groups[last]
        alive[gone] = False
        W[gone, :] = 0
        W[:, gone] = 0
        num_alive -= 1
    assert best_value is not None
    return best_value, best_side


def brute_force_edge_connectivity(g: Graph) -> int:
    """Exhaustive minimum of d(X) over all non-empty proper X; n <= 16 only."""
    if g.n < 2:
        raise DomainError("edge connectivity needs at least two vertices")
    if g.n > _BRUTE_CUT_MAX_N:
        raise GuardRefusal(f"brute-force cut enumeration capped at n={_BRUTE_CUT_MAX_N}")
    n = g.n
    # enumerate the 2^(n-1) sides containing vertex 0; d(X) = d(complement)
    masks = np.arange(1 << (n - 1), dtype=np.uint32)
    cut = np.zeros(masks.shape, dtype=np.int32)
    ones = np.ones(masks.shape, dtype=np.uint32)
    for u, v in g.edges():
        bu = ones if u == 0 else (masks >> np.uint32(u - 1)) & 1
        bv = ones if v == 0 else (masks >> np.uint32(v - 1)) & 1
        cut += bu != bv
    cut[-1] = np.iinfo(np.int32).max  # X = V is not a cut
    return int(cut.min())


# --- spanning-tree packing ------------------------------------------------


def _key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class _ForestFamily:
    """k edge-disjoint forests with matroid-union exchange insertion.

    `insert` adds an edge to the family if the union of the k graphic
    matroids admits it, rearranging existing edges along a shortest
    exchange path when necessary.  The family of accepted edges is always a
    maximum union-independent subset of the edges offered so far.
    """

    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k
        self.adj: list[list[set[int]]] = [[set() for _ in range(n)] for _ in range(k)]
        self.forest_of: dict[tuple[int, int], int] = {}

    @property
    def count(self) -> int:
        return len(self.forest_of)

    def _path(self, i: int, u: int, v: int) -> list[tuple[int, int]] | None:
        """Edges of the unique u-v path in forest i, or None if disconnected."""
        if u == v:
            return []
        adj = self.adj[i]
        prev: dict[int, int] = {u: -1}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in sorted(adj[x]):
                if y in prev:
                    continue
                prev[y] = x
                if y == v:
                    path = []
                    while prev[y] != -1:
                        path.append(_key(prev[y], y))
                        y = prev[y]
                    path.reverse()
                    return path
                queue.append(y)
        return None

    def _add(self, i: int, u: int, v: int) -> None:
        self.adj[i][u].add(v)
        self.adj[i][v].add(u)
        self.forest_of[_key(u, v)] = i

    def _remove(self, i: int, u: int, v: int) -> None:
        self.adj[i][u].discard(v)
        self.adj[i][v].discard(u)
        del self.forest_of[_key(u, v)]

    def find_augmenting(self, u: int, v: int):
        """Breadth-first search of the exchange structure from a fresh u-v element.

        Returns (chain, sink_forest) where `chain` lists the family edges to
        shift (root side first), or None when the element is spanned and no
        augmentation exists.
        """
        label: dict[tuple[int, int], tuple[tuple[int, int] | None, int]] = {}
        queue: deque = deque([(None, u, v, None)])
        while queue:
            key, a, b, cur = queue.popleft()
            for i in range(self.k):
                if i == cur:
                    continue
                path = self._path(i, a, b)
                if path is None:
                    chain = []
                    walk = key
                    while walk is not None:
                        chain.append(walk)
                        walk = label[walk][0]
                    chain.reverse()
                    return chain, i
                for p in path:
                    if p not in label:
                        label[p] = (key, i)
                        queue.append((p, p[0], p[1], self.forest_of[p]))
        return None

    def insert(self, u: int, v: int) -> bool:
        found = self.find_augmenting(u, v)
        if found is None:
            return False
        chain, target = found
        # shift every chain edge into the forest vacated by its successor;
        # shortest exchange chains never interfere with each other
        for e in reversed(chain):
            home = self.forest_of[e]
            self._remove(home, *e)
            if self._path(target, *e) is not None:
                raise AssertionError("exchange chain produced a cycle")
            self._add(target, *e)
            target = home
        if self._path(target, u, v) is not None:
            raise AssertionError("exchange chain produced a cycle")
        self._add(target, u, v)
        return True

    def forests(self) -> list[list[tuple[int, int]]]:
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.k)]
        for e, i in self.forest_of.items():
            out[i].append(e)
        return [sorted(f) for f in out]


@dataclass(frozen=True)
class TreePacking:
    """k pairwise edge-disjoint spanning trees, as sorted edge lists."""

    k: int
    forests: tuple[tuple[tuple[int, int], ...], ...]

    def to_json_dict(self) -> dict:
        return {
            "kind": "tree_packing",
            "k": self.k,
            "forests": [[[u, v] for u, v in f] for f in self.forests],
        }


@dataclass(frozen=True)
class PartitionCertificate:
    """Vertex partition violating the tree-packing condition for k.

    deficiency = 2k(t-1) - sum_i d(V_i); a positive value certifies that no
    k edge-disjoint spanning trees exist.
    """

    k: int
    blocks: tuple[frozenset[int], ...]
    deficiency: int

    def to_json_dict(self) -> dict:
        return {
            "kind": "partition_certificate",
            "k": self.k,
            "blocks": [sorted(b) for b in self.blocks],
            "deficiency": self.deficiency,
        }


class PackingDecision(NamedTuple):
    answer: bool
    evidence: TreePacking | PartitionCertificate


def verify_tree_packing(g: Graph, packing: TreePacking) -> bool:
    """Structural re-verification: disjoint, acyclic, spanning, in-graph."""
    seen: set[tuple[int, int]] = set()
    if len(packing.forests) != packing.k:
        return False
    for forest in packing.forests:
        if len(forest) != g.n - 1:
            return False
        parent = list(range(g.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in forest:
            if not g.has_edge(u, v) or _key(u, v) in seen:
                return False
            seen.add(_key(u, v))
            ru, rv = find(u), find(v)
            if ru == rv:
                return False  # cycle
            parent[ru] = rv
        if len({find(x) for x in range(g.n)}) != 1:
            return False  # not spanning
    return True


def verify_partition_certificate(g: Graph, cert: PartitionCertificate) -> bool:
    """Recompute the deficiency from scratch and require it positive."""
    covered: set[int] = set()
    for b in cert.blocks:
        if not b or covered & b:
            return False
        covered |= b
    if covered != set(range(g.n)):
        return False
    block_of = {}
    for i, b in enumerate(cert.blocks):
        for v in b:
            block_of[v] = i
    crossing = sum(1 for u, v in g.edges() if block_of[u] != block_of[v])
    t = len(cert.blocks)
    deficiency = 2 * cert.k * (t - 1) - 2 * crossing
    return deficiency == cert.deficiency and deficiency > 0


def _component_certificate(g: Graph, k: int) -> PartitionCertificate:
    blocks = tuple(connected_components(g))
    t = len(blocks)
    return PartitionCertificate(k=k, blocks=blocks, deficiency=2 * k * (t - 1))


def tau_at_least(g: Graph, k: int) -> PackingDecision:
    """Decide whether g packs k edge-disjoint spanning trees, constructively.

    A positive answer carries the k trees; a negative one carries a
    partition with positive deficiency.  At n <= 12 negative certificates
    are canonicalized through the exhaustive partition oracle so the
    evidence shape is uniform; for larger graphs the violating partition is
    extracted from the final non-augmentable matroid-union state.
    """
    if k <= 0 or k != int(k):
        raise DomainError("k must be a positive integer")
    k = int(k)
    if g.n <= 1:
        return PackingDecision(True, TreePacking(k=k, forests=tuple(() for _ in range(k))))
    if not is_connected(g):
        cert = _component_certificate(g, k)
        assert verify_partition_certificate(g, cert)
        return PackingDecision(False, cert)
    family = _ForestFamily(g.n, k)
    target = k * (g.n - 1)
    for u, v in g.edges():
        if family.count == target:
            break
        family.insert(u, v)
    if family.count == target:
        packing = TreePacking(k=k, forests=tuple(tuple(f) for f in family.forests()))
        assert verify_tree_packing(g, packing)
        return PackingDecision(True, packing)
    if g.n <= _ORACLE_MAX_N:
        oracle = nash_williams_oracle(g, k)
        assert not oracle.holds
        assert verify_partition_certificate(g, oracle.worst)
        return PackingDecision(False, oracle.worst)
    # every edge is now spanned: edges whose re-insertion fails lie inside
    # saturated vertex sets, whose components give a violating partition
    spanned = [e for e in g.edges() if family.find_augmenting(*e) is None]
    cert = _partition_from_spanned(g, k, spanned)
    assert verify_partition_certificate(g, cert)
    return PackingDecision(False, cert)


def _partition_from_spanned(g: Graph, k: int, spanned: list[tuple[int, int]]) -> PartitionCertificate:
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in spanned:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    blocks_by_root: dict[int, set[int]] = {}
    for x in range(g.n):
        blocks_by_root.setdefault(find(x), set()).add(x)
    blocks = tuple(frozenset(b) for _, b in sorted(blocks_by_root.items()))
    block_of = {}
    for i, b in enumerate(blocks):
        for v in b:
            block_of[v] = i
    crossing = sum(1 for u, v in g.edges() if block_of[u] != block_of[v])
    deficiency = 2 * k * (len(blocks) - 1) - 2 * crossing
    return PartitionCertificate(k=k, blocks=blocks, deficiency=deficiency)


def tau(g: Graph) -> int:
    """Exact spanning-tree packing number.

    0 iff disconnected.  Found by raising k until `tau_at_least` fails;
    m // (n-1) caps the search.  The one-vertex graph reports 1 (its only
    spanning tree is empty, and the packing number is otherwise unbounded).
    """
    if g.n == 0:
        return 0
    if not is_connected(g):
        return 0
    if g.n == 1:
        return 1
    cap = g.m // (g.n - 1)
    value = 0
    for k in range(1, cap + 1):
        if not tau_at_least(g, k).answer:
            break
        value = k
    return value


# --- exhaustive partition oracle ------------------------------------------


def set_partitions_rgs(n: int) -> Iterator[list[int]]:
    """All set partitions of {0..n-1} as restricted-growth strings, lex order.

    a[0] = 0 and a[i] <= 1 + max(a[0..i-1]); the string maps each element to
    its block id.
    """
    if n == 0:
        yield []
        return
    a = [0] * n
    prefix_max = [0] * n
    while True:
        yield list(a)
        i = n - 1
        while i > 0 and a[i] > prefix_max[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        prefix_max[i] = max(prefix_max[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            prefix_max[j] = prefix_max[i]


class OracleResult(NamedTuple):
    holds: bool
    worst: PartitionCertificate


def nash_williams_oracle(g: Graph, k: int) -> OracleResult:
    """Exhaustive check of the tree-packing partition condition for k.

    Enumerates every partition of the vertex set (restricted-growth
    strings) and minimizes sum d(V_i) - 2k(t-1); `holds` iff the minimum is
    non-negative.  `worst` is the first partition attaining the minimum, as
    a certificate with deficiency = -(minimum).  Refuses n > 12.
    """
    if k <= 0 or k != int(k):
        raise DomainError("k must be a positive integer")
    if g.n < 1:
        raise DomainError("oracle needs at least one vertex")
    if g.n > _ORACLE_MAX_N:
        raise GuardRefusal(f"partition enumeration capped at n={_ORACLE_MAX_N}")
    k = int(k)
    edges = g.edges()
    best_slack: int | None = None
    best_rgs: list[int] | None = None
    for rgs in set_partitions_rgs(g.n):
        t = max(rgs) + 1
        crossing = 0
        for u, v in edges:
            if rgs[u] != rgs[v]:
                crossing += 1
        slack = 2 * crossing - 2 * k * (t - 1)
        if best_slack is None or slack < best_slack:
            best_slack = slack
            best_rgs = rgs
    assert best_slack is not None and best_rgs is not None
    t = max(best_rgs) + 1
    blocks = tuple(
        frozenset(v for v in range(g.n) if best_rgs[v] == b) for b in range(t)
    )
    cert = PartitionCertificate(k=k, blocks=blocks, deficiency=-best_slack)
    return OracleResult(best_slack >= 0, cert)


# --- edge-connectivity vs packing equivalence ------------------------------


class KTCheck(NamedTuple):
    equiv_holds: bool
    counterexample: tuple[tuple[int, int], ...] | None


def check_catlin_lai_shao(g: Graph, k: int) -> KTCheck:
    """Exhaustively verify: edge-connectivity >= 2k iff every deletion of at
    most k edges still packs k spanning trees.

    This biconditional is a theorem, so `equiv_holds` must come back True on
    every valid input; a counterexample edge set signals an implementation
    bug, not a mathematical discovery.  Guards: n <= 8, m <= 16, k <= 2.
    """
    if k <= 0 or k != int(k):
        raise DomainError("k must be a positive integer")
    if g.n < 2:
        raise DomainError("needs at least two vertices")
    if g.n > 8 or g.m > 16 or k > 2:
        raise GuardRefusal("exhaustive deletion check capped at n<=8, m<=16, k<=2")
    kappa = brute_force_edge_connectivity(g)
    left = kappa >= 2 * k
    right = True
    witness: tuple[tuple[int, int], ...] | None = None
    for size in range(0, k + 1):
        for subset in combinations(g.edges(), size):
            if not tau_at_least(delete_edges(g, subset), k).answer:
                right = False
                witness = subset
                break
        if not right:
            break
    if left == right:
        return KTCheck(True, None)
    return KTCheck(False, witness if witness is not None else ())
