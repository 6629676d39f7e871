"""Simple undirected graphs and their purely combinatorial invariants.

Vertices are dense 0-based integers.  Graphs are immutable values: the
mutating-style operations (`delete_edges`, `induced`) return new graphs, so
shared instances can be read concurrently without locks.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Sequence

from .errors import DomainError, ParseError, ValidationError

#: Girth of an acyclic graph.
INFINITE = math.inf


class Graph:
    """Simple undirected graph on vertices 0..n-1 with sorted adjacency."""

    __slots__ = ("n", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValidationError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        canonical: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in canonical:
                raise ValidationError(f"duplicate edge ({key[0]}, {key[1]})")
            canonical.add(key)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self._edges = tuple(sorted(canonical))

    @property
    def m(self) -> int:
        return len(self._edges)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, sorted lexicographically."""
        return self._edges

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return v in self._adj[u]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _vertex_set(g: Graph, members: Iterable[int], name: str = "X") -> frozenset[int]:
    s = frozenset(members)
    for v in s:
        if not (0 <= v < g.n):
            raise DomainError(f"{name} contains vertex {v} outside 0..{g.n - 1}")
    return s


def normalize_partition(g: Graph, blocks: Sequence[Iterable[int]]) -> tuple[frozenset[int], ...]:
    """Validate that `blocks` partitions {0..n-1}: disjoint, non-empty, covering."""
    norm = []
    seen: set[int] = set()
    for b in blocks:
        fb = _vertex_set(g, b, "block")
        if not fb:
            raise DomainError("partition blocks must be non-empty")
        if seen & fb:
            raise DomainError("partition blocks must be pairwise disjoint")
        seen |= fb
        norm.append(fb)
    if len(seen) != g.n:
        raise DomainError("partition blocks must cover every vertex")
    return tuple(norm)


def from_edge_list(text: str | bytes) -> Graph:
    """Parse a plain edge list: lines of "u v", '#' comments, blanks ignored.

    An optional first data line "n <N>" fixes the vertex count (allowing
    trailing isolated vertices); otherwise n is one more than the largest
    index mentioned.
    """
    if isinstance(text, bytes):
        text = text.decode("ascii")
    edges: list[tuple[int, int]] = []
    edge_set: set[tuple[int, int]] = set()
    declared_n: int | None = None
    first_data_line = True
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if first_data_line and parts[0] == "n":
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError("bad header, expected 'n <N>'", lineno)
            declared_n = int(parts[1])
            first_data_line = False
            continue
        first_data_line = False
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError("vertex indices must be non-negative", lineno)
        if u == v:
            raise ValidationError(f"line {lineno}: self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in edge_set:
            raise ValidationError(f"line {lineno}: duplicate edge ({key[0]}, {key[1]})")
        edge_set.add(key)
        edges.append(key)
        max_seen = max(max_seen, u, v)
    n = declared_n if declared_n is not None else max_seen + 1
    if declared_n is not None and max_seen >= declared_n:
        raise ValidationError(f"edge mentions vertex {max_seen} but header declares n={declared_n}")
    return Graph(max(n, 0), edges)


def to_edge_list(g: Graph) -> str:
    """Inverse of `from_edge_list`, always with an explicit header."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# --- graph6 ------------------------------------------------------------
#
# Standard graph6: 6 bits per printable character (bias 63), the upper
# triangle of the adjacency matrix in column-major order
# x(0,1), x(0,2), x(1,2), x(0,3), ... padded with zeros to a multiple of 6.

_G6_HEADER = ">>graph6<<"


def _g6_encode_n(n: int) -> str:
    if n < 0:
        raise DomainError("graph6 order must be non-negative")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise DomainError("graph6 order too large")


def _g6_decode_n(s: str) -> tuple[int, int]:
    """Return (n, number of characters consumed)."""
    if not s:
        raise ParseError("empty graph6 string")
    if s[0] != "~":
        return ord(s[0]) - 63, 1
    if len(s) >= 2 and s[1] != "~":
        if len(s) < 4:
            raise ParseError("truncated graph6 order")
        vals = [ord(c) - 63 for c in s[1:4]]
        return (vals[0] << 12) | (vals[1] << 6) | vals[2], 4
    if len(s) < 8:
        raise ParseError("truncated graph6 order")
    vals = [ord(c) - 63 for c in s[2:8]]
    n = 0
    for v in vals:
        n = (n << 6) | v
    return n, 8


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 string (no trailing newline)."""
    n = g.n
    out = [_g6_encode_n(n)]
    bits = 0
    nbits = 0
    for v in range(1, n):
        row = g._adj[v]
        for u in range(v):
            bits = (bits << 1) | (1 if u in row else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(bits + 63))
                bits = 0
                nbits = 0
    if nbits:
        bits <<= 6 - nbits
        out.append(chr(bits + 63))
    return "".join(out)


def parse_graph6(text: str | bytes) -> Graph:
    """Decode a graph6 string; the optional '>>graph6<<' header is accepted."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):].strip()
    n, used = _g6_decode_n(s)
    body = s[used:]
    needed = (n * (n - 1) // 2 + 5) // 6
    if len(body) != needed:
        raise ParseError(f"graph6 body has {len(body)} characters, expected {needed}")
    for c in body:
        if not (63 <= ord(c) <= 126):
            raise ParseError(f"invalid graph6 character {c!r}")
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            char = ord(body[idx // 6]) - 63
            if (char >> (5 - idx % 6)) & 1:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


# --- combinatorial invariants -------------------------------------------


def degree_stats(g: Graph) -> tuple[int, int, float]:
    """(minimum degree, maximum degree, average degree 2m/n)."""
    if g.n < 1:
        raise DomainError("degree statistics need at least one vertex")
    degs = [g.degree(u) for u in range(g.n)]
    return min(degs), max(degs), 2.0 * g.m / g.n


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or INFINITE if acyclic.

    BFS from every root; a non-tree edge (u, v) seen from u with v already
    visited and v != parent(u) witnesses a closed walk of length
    dist(u) + dist(v) + 1, which contains a cycle no longer than that.  The
    minimum over all roots is exact for simple graphs.
    """
    best = INFINITE
    dist = [0] * g.n
    parent = [0] * g.n
    visited = [False] * g.n
    for root in range(g.n):
        for i in range(g.n):
            visited[i] = False
        dist[root] = 0
        parent[root] = -1
        visited[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                continue  # any candidate through u is at least 2*dist[u]
            du1 = dist[u] + 1
            for v in g.neighbors(u):
                if not visited[v]:
                    visited[v] = True
                    dist[v] = du1
                    parent[v] = u
                    queue.append(v)
                elif parent[u] != v:
                    cand = dist[u] + dist[v] + 1
                    if cand < best:
                        best = cand
    return best


def brute_force_girth(g: Graph) -> int | float:
    """Independent girth oracle: min over edges e=(u,v) of 1 + dist(u,v) in G-e.

    Every shortest cycle consists of one of its edges plus a shortest path
    between that edge's endpoints avoiding the edge itself.
    """
    best = INFINITE
    for u, v in g.edges():
        d = _bfs_dist_avoiding_edge(g, u, v)
        if d is not None and d + 1 < best:
            best = d + 1
    return best


def _bfs_dist_avoiding_edge(g: Graph, src: int, dst: int) -> int | None:
    dist = {src: 0}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if x == src and y == dst:
                continue
            if x == dst and y == src:
                continue
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == dst:
                    return dist[y]
                queue.append(y)
    return dist.get(dst)


def boundary(g: Graph, members: Iterable[int]) -> int:
    """d(X): number of edges with exactly one endpoint in X."""
    x = _vertex_set(g, members)
    if not x:
        raise DomainError("boundary of the empty set is undefined")
    if len(x) == g.n:
        raise DomainError("boundary of the full vertex set is undefined")
    count = 0
    for u in x:
        for v in g.neighbors(u):
            if v not in x:
                count += 1
    return count


def cross_edges(g: Graph, members_x: Iterable[int], members_y: Iterable[int]) -> int:
    """e(X, Y): edges with one end in X and the other in Y (X, Y disjoint)."""
    x = _vertex_set(g, members_x, "X")
    y = _vertex_set(g, members_y, "Y")
    if not x or not y:
        raise DomainError("cross_edges requires non-empty sets")
    if x & y:
        raise DomainError("cross_edges requires disjoint sets")
    count = 0
    for u in x:
        for v in g.neighbors(u):
            if v in y:
                count += 1
    return count


def induced(g: Graph, members: Iterable[int]) -> Graph:
    """Subgraph induced by X, relabelled to 0..|X|-1 in sorted vertex order."""
    x = sorted(_vertex_set(g, members))
    index = {v: i for i, v in enumerate(x)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if u in index and v in index
    ]
    return Graph(len(x), edges)


def delete_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    """Copy of g with the listed edges removed; unknown edges are an error."""
    to_drop = set()
    for u, v in edges:
        if not g.has_edge(u, v):
            raise DomainError(f"edge ({u}, {v}) not present")
        to_drop.add((u, v) if u < v else (v, u))
    return Graph(g.n, [e for e in g.edges() if e not in to_drop])


def is_connected(g: Graph) -> bool:
    """BFS reachability; the empty and one-vertex graphs count as connected."""
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if not seen[v]:
                seen[v] = True
                reached += 1
                queue.append(v)
    return reached == g.n


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = {s}
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    comp.add(v)
                    queue.append(v)
        comps.append(frozenset(comp))
    return comps


def is_bipartite(g: Graph) -> bool:
    """Two-colorability by BFS."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True
