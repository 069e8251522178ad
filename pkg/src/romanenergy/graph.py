"""Simple undirected graphs, family generators and BFS distances.

Vertices are the integers ``0..n-1``. Graphs are immutable; every
function here returns a fresh object.
"""

from __future__ import annotations

import enum
import io
import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

#: Distance entry for vertex pairs in different components.
UNREACHABLE = -1


class GraphError(ValueError):
    """Base class for malformed graph input."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    """An operation that needs a connected graph got a disconnected one."""


class EdgeListParseError(GraphError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def closed_masks(self) -> list[int]:
        """Closed neighbourhoods N[v] as integer bitmasks."""
        masks = []
        for v, nbrs in enumerate(self.adjacency):
            mask = 1 << v
            for u in nbrs:
                mask |= 1 << u
            masks.append(mask)
        return masks

    def subgraph(self, vertices: Sequence[int]) -> Graph:
        """Induced subgraph, relabelled by position in ``vertices``."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return new_graph(len(vertices), edges)


def new_graph(n: int, edge_list: Iterable[Sequence[int]]) -> Graph:
    """Build a canonical graph on ``n`` vertices.

    Raises SelfLoopError, DuplicateEdgeError or VertexRangeError on bad
    input; ``(u, v)`` and ``(v, u)`` count as the same edge.
    """
    if n < 0:
        raise VertexRangeError(f"vertex count must be nonnegative, got {n}")
    seen: set[tuple[int, int]] = set()
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        seen.add(key)
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(
        n=n,
        edges=tuple(sorted(seen)),
        adjacency=tuple(tuple(sorted(a)) for a in nbrs),
    )


# ---------------------------------------------------------------------------
# families


class Family(str, enum.Enum):
    COMPLETE = "complete"
    COMPLETE_BIPARTITE_BALANCED = "bipartite"
    STAR = "star"
    CROWN = "crown"
    HEALTHY_SPIDER = "spider"
    PATH = "path"
    CYCLE = "cycle"


_MIN_PARAMETER = {
    Family.COMPLETE: 1,
    Family.COMPLETE_BIPARTITE_BALANCED: 1,
    Family.STAR: 2,
    Family.CROWN: 3,  # k = 2 is two disjoint edges
    Family.HEALTHY_SPIDER: 2,
    Family.PATH: 1,
    Family.CYCLE: 3,
}

_ALIASES = {
    "k": Family.COMPLETE,
    "complete_bipartite": Family.COMPLETE_BIPARTITE_BALANCED,
    "complete-bipartite": Family.COMPLETE_BIPARTITE_BALANCED,
    "krr": Family.COMPLETE_BIPARTITE_BALANCED,
    "healthy_spider": Family.HEALTHY_SPIDER,
    "healthy-spider": Family.HEALTHY_SPIDER,
}


def parse_family(name: str | Family) -> Family:
    if isinstance(name, Family):
        return name
    key = name.strip().lower()
    if key in _ALIASES:
        return _ALIASES[key]
    try:
        return Family(key)
    except ValueError:
        raise GraphError(f"unknown graph family {name!r}") from None


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family and its size parameter.

    The parameter is the total vertex count for complete, star, path and
    cycle graphs, the side size ``r`` for ``K_{r,r}``, the side size ``k``
    for the crown ``S_k^0`` and the star order ``n`` for the healthy
    spider ``K*_{1,n-1}`` (which has ``2n - 1`` vertices).
    """

    family: Family
    parameter: int

    def __post_init__(self):
        object.__setattr__(self, "family", parse_family(self.family))
        lo = _MIN_PARAMETER[self.family]
        if int(self.parameter) != self.parameter or self.parameter < lo:
            raise GraphError(
                f"{self.family.value} needs parameter >= {lo}, got {self.parameter}"
            )

    @property
    def label(self) -> str:
        return f"{self.family.value}({self.parameter})"


def complete(n: int) -> Graph:
    return new_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(r: int) -> Graph:
    """``K_{r,r}`` with sides ``0..r-1`` and ``r..2r-1``."""
    return new_graph(2 * r, [(i, r + j) for i in range(r) for j in range(r)])


def star(n: int) -> Graph:
    """``K_{1,n-1}`` with centre 0."""
    return new_graph(n, [(0, i) for i in range(1, n)])


def crown(k: int) -> Graph:
    """Crown ``S_k^0``: a_i = i, b_i = k + i, a_i ~ b_j iff i != j."""
    return new_graph(2 * k, [(i, k + j) for i in range(k) for j in range(k) if i != j])


def healthy_spider(n: int) -> Graph:
    """``K*_{1,n-1}``: hub 0, spine v_i = i, foot u_i = n - 1 + i."""
    spokes = [(0, i) for i in range(1, n)]
    feet = [(i, n - 1 + i) for i in range(1, n)]
    return new_graph(2 * n - 1, spokes + feet)


def path(n: int) -> Graph:
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


_GENERATORS = {
    Family.COMPLETE: complete,
    Family.COMPLETE_BIPARTITE_BALANCED: complete_bipartite,
    Family.STAR: star,
    Family.CROWN: crown,
    Family.HEALTHY_SPIDER: healthy_spider,
    Family.PATH: path,
    Family.CYCLE: cycle,
}


def generate(spec: FamilySpec) -> Graph:
    return _GENERATORS[spec.family](spec.parameter)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` followed by ``h`` with h's vertices shifted by ``g.n``."""
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    return new_graph(g.n + h.n, list(g.edges) + shifted)


def random_connected_graph(rng: np.random.Generator, n: int, p: float = 0.5) -> Graph:
    """Erdos-Renyi G(n, p) conditioned on connectivity by rejection."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    while True:
        keep = rng.random(len(pairs)) < p
        g = new_graph(n, [e for e, k in zip(pairs, keep) if k])
        if is_connected(g):
            return g


# ---------------------------------------------------------------------------
# distances


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop counts; pairs in different components hold ``UNREACHABLE``."""

    d: np.ndarray

    @property
    def n(self) -> int:
        return self.d.shape[0]

    @property
    def connected(self) -> bool:
        return not bool((self.d == UNREACHABLE).any())

    def require_connected(self) -> np.ndarray:
        if not self.connected:
            raise DisconnectedGraphError("graph is disconnected")
        return self.d


def bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] == UNREACHABLE:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    d = np.array([bfs_distances(g, s) for s in range(g.n)], dtype=np.int64)
    d = d.reshape(g.n, g.n)
    d.setflags(write=False)
    return DistanceMatrix(d)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = [v for v, x in enumerate(bfs_distances(g, s)) if x != UNREACHABLE]
        for v in comp:
            seen[v] = True
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n == 0 or all(x != UNREACHABLE for x in bfs_distances(g, 0))


def wiener_index(dm: DistanceMatrix) -> int:
    d = dm.require_connected()
    return int(np.triu(d, 1).sum())


def diameter(dm: DistanceMatrix) -> int:
    d = dm.require_connected()
    return int(d.max()) if dm.n else 0


# ---------------------------------------------------------------------------
# edge-list text format: "n m" header, then m lines "u v"; '#' lines ignored


def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise EdgeListParseError(f"line {lineno}: not an integer pair: {raw!r}") from None
    if not rows:
        raise EdgeListParseError("missing 'n m' header")
    (n, m), edges = rows[0], rows[1:]
    if len(edges) != m:
        raise EdgeListParseError(f"header announces {m} edges, found {len(edges)}")
    return new_graph(n, edges)


def read_edge_list(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph) -> str:
    out = io.StringIO()
    out.write(f"{g.n} {g.m}\n")
    for u, v in g.edges:
        out.write(f"{u} {v}\n")
    return out.getvalue()
