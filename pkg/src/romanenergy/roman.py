"""Roman dominating functions and exact minimum solvers.

A minimum RDF is fixed by its 2-labelled set S: every vertex outside
N[S] must carry label 1 and every other vertex outside S label 0, so its
weight is ``2|S| + |V - N[S]|``. The solvers below search over S in
lexicographic order of the sorted vertex list, which makes the first
optimum found the canonical one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .graph import Graph, components

#: Largest connected component the subset search accepts.
MAX_SEARCH_VERTICES = 30
#: Largest graph the 3^n labelling oracle accepts.
MAX_BRUTE_FORCE_VERTICES = 12


class ProblemTooLargeError(ValueError):
    pass


@dataclass(frozen=True)
class RomanDominatingFunction:
    v0: tuple[int, ...]
    v1: tuple[int, ...]
    v2: tuple[int, ...]

    def __post_init__(self):
        for name in ("v0", "v1", "v2"):
            object.__setattr__(self, name, tuple(sorted(getattr(self, name))))

    @property
    def n(self) -> int:
        return len(self.v0) + len(self.v1) + len(self.v2)

    @property
    def weight(self) -> int:
        return 2 * len(self.v2) + len(self.v1)

    @property
    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Canonical ordering key: (sorted V2, sorted V1)."""
        return (self.v2, self.v1)

    def labels(self) -> list[int]:
        lab = [0] * self.n
        for v in self.v1:
            lab[v] = 1
        for v in self.v2:
            lab[v] = 2
        return lab

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> RomanDominatingFunction:
        parts: tuple[list[int], list[int], list[int]] = ([], [], [])
        for v, x in enumerate(labels):
            parts[x].append(v)
        return cls(*parts)

    @classmethod
    def from_v2(cls, g: Graph, v2: Sequence[int]) -> RomanDominatingFunction:
        """Cheapest RDF with 2-set ``v2``."""
        masks = g.closed_masks()
        dom = 0
        for v in v2:
            dom |= masks[v]
        s = set(v2)
        v0 = [v for v in range(g.n) if v not in s and dom >> v & 1]
        v1 = [v for v in range(g.n) if not dom >> v & 1]
        return cls(v0, v1, tuple(v2))

    def shifted(self, offset: int) -> RomanDominatingFunction:
        return RomanDominatingFunction(
            tuple(v + offset for v in self.v0),
            tuple(v + offset for v in self.v1),
            tuple(v + offset for v in self.v2),
        )

    def to_json(self) -> dict:
        return {"v0": list(self.v0), "v1": list(self.v1), "v2": list(self.v2), "weight": self.weight}


def rdf_violation(g: Graph, f: RomanDominatingFunction) -> str | None:
    """Reason code why ``f`` is not an RDF of ``g``, or None."""
    everything = list(f.v0) + list(f.v1) + list(f.v2)
    if any(not 0 <= v < g.n for v in everything):
        return "out_of_range"
    if len(set(everything)) != len(everything):
        return "overlap"
    if len(everything) != g.n:
        return "not_covering"
    twos = set(f.v2)
    for v in f.v0:
        if not twos.intersection(g.adjacency[v]):
            return "undominated"
    return None


def is_valid_rdf(g: Graph, f: RomanDominatingFunction) -> bool:
    return rdf_violation(g, f) is None


# ---------------------------------------------------------------------------
# subset search


def _popcount(x: int) -> int:
    return bin(x).count("1")


class _Search:
    """Lexicographic-order DFS over vertex subsets of one graph."""

    def __init__(self, g: Graph):
        self.n = g.n
        self.masks = g.closed_masks()
        self.full = (1 << g.n) - 1
        # suffix[i]: vertices coverable by adding any vertex >= i
        self.suffix = [0] * (g.n + 1)
        for i in range(g.n - 1, -1, -1):
            self.suffix[i] = self.suffix[i + 1] | self.masks[i]

    def _best_gain(self, live: int, start: int) -> int:
        return max((_popcount(self.masks[w] & live) for w in range(start, self.n)), default=0)

    def _roman_lb(self, size: int, dom: int, start: int) -> int:
        und = self.full & ~dom
        reach = self.suffix[start]
        dead = _popcount(und & ~reach)
        live = und & reach
        u = _popcount(live)
        if u == 0:
            return 2 * size + dead
        c = self._best_gain(live, start)
        # each new 2-vertex costs 2 and covers <= c; a 1-label costs 1 and covers 1
        extra = u if c <= 2 else -(-2 * u // c)
        return 2 * size + dead + extra

    def roman_sets(self, bound: int | None) -> Iterator[tuple[list[int], int]]:
        """Yield (S, weight) in lexicographic order of S.

        With ``bound`` set, only sets of weight <= bound are yielded and
        branches whose lower bound exceeds it are cut. With ``bound`` None
        the search yields strict improvements only, tightening as it goes.
        """
        best = [bound if bound is not None else 2 * self.n + 1]
        strict = bound is None
        stack: list[int] = []

        def visit(dom: int, start: int):
            lb = self._roman_lb(len(stack), dom, start)
            if lb > best[0] or (strict and lb >= best[0]):
                return
            weight = 2 * len(stack) + _popcount(self.full & ~dom)
            if weight < best[0] or (not strict and weight == best[0]):
                if strict:
                    best[0] = weight
                yield list(stack), weight
            und = self.full & ~dom
            for w in range(start, self.n):
                # a vertex that dominates nothing new is never in an optimum
                if not self.masks[w] & und:
                    continue
                stack.append(w)
                yield from visit(dom | self.masks[w], w + 1)
                stack.pop()

        yield from visit(0, 0)

    def domination(self) -> list[int]:
        """Lexicographically first minimum dominating set."""
        best_size = [self.n + 1]
        best_set: list[list[int]] = [list(range(self.n))]
        stack: list[int] = []

        def visit(dom: int, start: int):
            und = self.full & ~dom
            if und == 0:
                if len(stack) < best_size[0]:
                    best_size[0] = len(stack)
                    best_set[0] = list(stack)
                return
            if und & ~self.suffix[start]:
                return
            c = self._best_gain(und, start)
            if len(stack) + -(-_popcount(und) // c) >= best_size[0]:
                return
            for w in range(start, self.n):
                if not self.masks[w] & und:
                    continue
                stack.append(w)
                visit(dom | self.masks[w], w + 1)
                stack.pop()

        visit(0, 0)
        return best_set[0]


def _check_size(n: int) -> None:
    if n > MAX_SEARCH_VERTICES:
        raise ProblemTooLargeError(
            f"exact search is limited to {MAX_SEARCH_VERTICES} vertices per component, got {n}"
        )


def _canonical_component(g: Graph) -> RomanDominatingFunction:
    _check_size(g.n)
    if g.n == 0:
        return RomanDominatingFunction((), (), ())
    s = None
    for s, _ in _Search(g).roman_sets(None):
        pass
    return RomanDominatingFunction.from_v2(g, s)


def _merge(parts: list[tuple[list[int], RomanDominatingFunction]]) -> RomanDominatingFunction:
    v0: list[int] = []
    v1: list[int] = []
    v2: list[int] = []
    for verts, f in parts:
        v0 += [verts[i] for i in f.v0]
        v1 += [verts[i] for i in f.v1]
        v2 += [verts[i] for i in f.v2]
    return RomanDominatingFunction(v0, v1, v2)


def min_roman_domination(g: Graph) -> tuple[int, RomanDominatingFunction]:
    """Roman domination number and the canonical minimum RDF.

    Each connected component is solved on its own and gets its
    lexicographically smallest (V2, V1) optimum; for a connected graph
    this is the global lexicographic minimum. Raises
    ProblemTooLargeError for components above MAX_SEARCH_VERTICES.
    """
    parts = []
    for comp in components(g):
        parts.append((comp, _canonical_component(g.subgraph(comp))))
    f = _merge(parts)
    return f.weight, f


def min_domination(g: Graph) -> tuple[int, list[int]]:
    """Domination number and the per-component lexicographically first witness."""
    witness: list[int] = []
    for comp in components(g):
        sub = g.subgraph(comp)
        _check_size(sub.n)
        witness += [comp[i] for i in _Search(sub).domination()]
    witness.sort()
    return len(witness), witness


class RdfEnumeration(NamedTuple):
    rdfs: list[RomanDominatingFunction]
    truncated: bool


def enumerate_min_rdfs(g: Graph, cap: int = 1000) -> RdfEnumeration:
    """All minimum RDFs in increasing (V2, V1) order, at most ``cap`` of them."""
    if cap < 1:
        raise ValueError("cap must be positive")
    _check_size(g.n)
    gamma_r, _ = min_roman_domination(g)
    out = []
    for s, _ in _Search(g).roman_sets(gamma_r):
        if len(out) == cap:
            return RdfEnumeration(out, True)
        out.append(RomanDominatingFunction.from_v2(g, s))
    return RdfEnumeration(out, False)


def brute_force_min_rdf(g: Graph) -> int:
    """Minimum RDF weight by trying all 3^n labellings (test oracle)."""
    if g.n > MAX_BRUTE_FORCE_VERTICES:
        raise ProblemTooLargeError(f"brute force is limited to {MAX_BRUTE_FORCE_VERTICES} vertices")
    best = 2 * g.n
    for lab in itertools.product((0, 1, 2), repeat=g.n):
        w = sum(lab)
        if w >= best:
            continue
        if all(x or any(lab[u] == 2 for u in g.adjacency[v]) for v, x in enumerate(lab)):
            best = w
    return best if g.n else 0


@dataclass(frozen=True)
class SandwichReport:
    gamma: int
    gamma_r: int

    @property
    def holds(self) -> bool:
        return self.gamma <= self.gamma_r <= 2 * self.gamma


def check_sandwich(g: Graph) -> SandwichReport:
    gamma, _ = min_domination(g)
    gamma_r, _ = min_roman_domination(g)
    return SandwichReport(gamma, gamma_r)
