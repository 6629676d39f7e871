"""Deterministic construction of test-family graphs.

Named cubic cages ship as adjacency data files (validated by the test
suite) rather than being rebuilt from their algebraic descriptions, so the
ground-truth fixtures cannot drift.  Random families draw every bit from
the package's SplitMix64 stream and are reproducible from their seed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources

from .errors import DomainError, ParseError
from .graphs import Graph, from_edge_list
from .rng import SplitMix64

CAGE_NAMES = ("petersen", "heawood", "mcgee", "tutte_coxeter")

_RANDOM_FAMILIES = ("random_regular", "random_min_degree")
_FAMILIES = (
    "complete",
    "complete_bipartite",
    "cycle",
    "path",
    "circulant",
    *CAGE_NAMES,
    *_RANDOM_FAMILIES,
)

_MAX_RESTARTS = 1000


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: int | None = None

    def to_string(self) -> str:
        parts = []
        for key, value in sorted(self.params.items()):
            if isinstance(value, (list, tuple)):
                parts.append(f"{key}=" + "+".join(str(x) for x in value))
            else:
                parts.append(f"{key}={value}")
        if self.seed is not None:
            parts.append(f"seed={self.seed}")
        if not parts:
            return self.family
        return self.family + ":" + ",".join(parts)


def parse_spec(text: str) -> GeneratorSpec:
    """Parse strings like "random_regular:n=50,d=6,seed=42" or "petersen".

    Multi-valued parameters (circulant connection sets) use '+':
    "circulant:n=12,s=1+3".
    """
    text = text.strip()
    if ":" in text:
        family, _, rest = text.partition(":")
    else:
        family, rest = text, ""
    family = family.strip().lower()
    if family not in _FAMILIES:
        raise ParseError(f"unknown graph family {family!r}")
    params: dict = {}
    seed = None
    if rest:
        for item in rest.split(","):
            if not item:
                continue
            m = re.fullmatch(r"\s*(\w+)\s*=\s*([0-9+\-]+)\s*", item)
            if m is None:
                raise ParseError(f"bad generator parameter {item!r}")
            key, value = m.group(1), m.group(2)
            if key == "seed":
                seed = int(value)
            elif "+" in value:
                params[key] = tuple(int(x) for x in value.split("+"))
            else:
                params[key] = int(value)
    return GeneratorSpec(family=family, params=params, seed=seed)


def generate(spec: GeneratorSpec) -> Graph:
    """Build the graph described by `spec`; deterministic including seeds."""
    family = spec.family
    p = dict(spec.params)
    if family in CAGE_NAMES:
        _expect_params(family, p, ())
        return load_cage(family)
    if family == "complete":
        _expect_params(family, p, ("n",))
        return complete(p["n"])
    if family == "complete_bipartite":
        _expect_params(family, p, ("a", "b"))
        return complete_bipartite(p["a"], p["b"])
    if family == "cycle":
        _expect_params(family, p, ("n",))
        return cycle(p["n"])
    if family == "path":
        _expect_params(family, p, ("n",))
        return path(p["n"])
    if family == "circulant":
        _expect_params(family, p, ("n", "s"))
        links = p["s"] if isinstance(p["s"], tuple) else (p["s"],)
        return circulant(p["n"], links)
    if family == "random_regular":
        _expect_params(family, p, ("n", "d"))
        return random_regular(p["n"], p["d"], _require_seed(spec))
    if family == "random_min_degree":
        _expect_params(family, p, ("n", "delta"))
        return random_min_degree(p["n"], p["delta"], _require_seed(spec))
    raise DomainError(f"unhandled family {family!r}")


def _expect_params(family: str, params: dict, names: tuple[str, ...]) -> None:
    missing = [k for k in names if k not in params]
    extra = [k for k in params if k not in names]
    if missing or extra:
        raise DomainError(
            f"family {family!r} takes parameters {list(names)}; "
            f"missing {missing}, unexpected {extra}"
        )


def _require_seed(spec: GeneratorSpec) -> int:
    if spec.seed is None:
        raise DomainError(f"family {spec.family!r} requires a seed")
    return spec.seed


def load_cage(name: str) -> Graph:
    if name not in CAGE_NAMES:
        raise DomainError(f"unknown cage {name!r}")
    data = resources.files("spectrepack.data").joinpath(f"{name}.edges").read_text()
    return from_edge_list(data)


def complete(n: int) -> Graph:
    if n < 1:
        raise DomainError("complete graph needs n >= 1")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise DomainError("complete bipartite graph needs both sides >= 1")
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise DomainError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def circulant(n: int, links: tuple[int, ...]) -> Graph:
    """Circulant graph: i adjacent to i +- s (mod n) for each s in links."""
    if n < 3:
        raise DomainError("circulant needs n >= 3")
    links = tuple(sorted(set(int(s) for s in links)))
    if not links:
        raise DomainError("circulant needs a non-empty connection set")
    for s in links:
        if not (1 <= s <= n // 2):
            raise DomainError(f"connection offset {s} outside 1..n//2")
    edges = set()
    for i in range(n):
        for s in links:
            j = (i + s) % n
            edges.add((min(i, j), max(i, j)))
    return Graph(n, sorted(edges))


def random_regular(n: int, d: int, seed: int) -> Graph:
    """Seeded d-regular simple graph by the configuration model.

    Pairs d stubs per vertex uniformly; clashing pairs (loops or repeats)
    are rejected and their stubs re-paired, with a full restart when no
    suitable pair remains and a hard cap of 1000 restarts.  Connectivity is
    not guaranteed; callers filter.
    """
    if n * d % 2 != 0:
        raise DomainError("n * d must be even")
    if not 0 <= d < n:
        raise DomainError("need 0 <= d < n")
    rng = SplitMix64(seed)
    for _ in range(_MAX_RESTARTS):
        edges = _pair_stubs(n, d, rng)
        if edges is not None:
            return Graph(n, sorted(edges))
    raise DomainError(f"configuration model failed after {_MAX_RESTARTS} restarts")


def _pair_stubs(n: int, d: int, rng: SplitMix64) -> set[tuple[int, int]] | None:
    edges: set[tuple[int, int]] = set()
    stubs = [v for v in range(n) for _ in range(d)]
    while stubs:
        rng.shuffle(stubs)
        leftover: list[int] = []
        it = iter(stubs)
        for s1, s2 in zip(it, it):
            if s1 > s2:
                s1, s2 = s2, s1
            if s1 != s2 and (s1, s2) not in edges:
                edges.add((s1, s2))
            else:
                leftover.extend((s1, s2))
        if len(leftover) == len(stubs):
            # no progress; restart unless some pair is still placeable
            if not _has_suitable_pair(edges, leftover):
                return None
        stubs = leftover
    return edges


def _has_suitable_pair(edges: set[tuple[int, int]], stubs: list[int]) -> bool:
    uniq = sorted(set(stubs))
    for i, s1 in enumerate(uniq):
        for s2 in uniq[i + 1:]:
            if (s1, s2) not in edges:
                return True
    return False


def random_min_degree(n: int, delta: int, seed: int) -> Graph:
    """Seeded graph with minimum degree at least delta.

    Starts from a random regular graph of degree delta (delta+1 when n*delta
    is odd) and adds a seeded number (up to n) of extra non-edges.
    """
    if not 0 <= delta < n:
        raise DomainError("need 0 <= delta < n")
    base_d = delta if (n * delta) % 2 == 0 else delta + 1
    if base_d >= n:
        raise DomainError("parity-adjusted degree reaches n; no simple graph exists")
    rng = SplitMix64(seed)
    g = random_regular(n, base_d, rng.next_u64())
    extra = rng.randbelow(n + 1)
    edges = set(g.edges())
    non_edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in edges
    ]
    for _ in range(min(extra, len(non_edges))):
        pick = rng.randbelow(len(non_edges))
        edges.add(non_edges.pop(pick))
    return Graph(n, sorted(edges))
