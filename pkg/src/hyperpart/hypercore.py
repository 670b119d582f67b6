"""Uniform hypergraphs on 1-based vertex sets, faces, partitions, isomorphism."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Edge = tuple[int, ...]

DEFAULT_ISO_CAP = 10


class HypergraphError(ValueError):
    """Raised when a hypergraph or one of its edges violates an invariant."""


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on the vertices 1..n.

    ``edges`` is a tuple of strictly increasing tuples in lexicographic
    order. Use :func:`make_hypergraph` to build one from raw data; the
    constructor trusts its input.
    """

    n: int
    r: int
    edges: tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, edge) -> bool:
        return tuple(edge) in self.edge_set

    @property
    def edge_set(self) -> frozenset[Edge]:
        # cached on first use; the dataclass is frozen so go through object
        try:
            return self.__dict__["_edge_set"]
        except KeyError:
            s = frozenset(self.edges)
            object.__setattr__(self, "_edge_set", s)
            return s

    def without(self, *removed: Sequence[int]) -> Hypergraph:
        drop = {tuple(e) for e in removed}
        return Hypergraph(self.n, self.r, tuple(e for e in self.edges if e not in drop))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


def _check_edge(raw: Iterable[int], n: int, r: int) -> Edge:
    edge = tuple(sorted(int(v) for v in raw))
    if len(edge) != r:
        raise HypergraphError(f"edge {list(raw)} has arity {len(edge)}, expected {r}")
    if len(set(edge)) != len(edge):
        raise HypergraphError(f"edge {list(raw)} repeats a vertex")
    if edge and (edge[0] < 1 or edge[-1] > n):
        raise HypergraphError(f"edge {list(raw)} has a vertex outside 1..{n}")
    return edge


def make_hypergraph(n: int, r: int, edges: Iterable[Iterable[int]] = ()) -> Hypergraph:
    """Canonicalize ``edges``: sort each edge, drop duplicates, order lexicographically."""
    if n < 1 or not 1 <= r <= n:
        raise HypergraphError(f"need n >= 1 and 1 <= r <= n, got n={n}, r={r}")
    canon = {_check_edge(e, n, r) for e in edges}
    return Hypergraph(n, r, tuple(sorted(canon)))


def complete_hypergraph(n: int, r: int) -> Hypergraph:
    if not 1 <= r <= n:
        raise HypergraphError(f"complete hypergraph needs 1 <= r <= n, got n={n}, r={r}")
    return Hypergraph(n, r, tuple(itertools.combinations(range(1, n + 1), r)))


@dataclass(frozen=True)
class FaceSet:
    s: int
    faces: tuple[Edge, ...]

    def __len__(self) -> int:
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def __contains__(self, face) -> bool:
        return tuple(face) in set(self.faces)


def faces(h: Hypergraph, s: int) -> FaceSet:
    """All s-subsets of vertices contained in some edge of ``h``."""
    if not 1 <= s <= h.r:
        raise HypergraphError(f"face size must lie in 1..{h.r}, got {s}")
    if s == h.r:
        return FaceSet(s, h.edges)
    found = set()
    for e in h.edges:
        found.update(itertools.combinations(e, s))
    return FaceSet(s, tuple(sorted(found)))


# --- partitions -------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    r: int
    d: int
    parts: tuple[Hypergraph, ...]

    @property
    def n(self) -> int:
        return self.r * self.d


@dataclass
class PartitionReport:
    valid: bool
    violations: list[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.valid


def verify_partition(p: Partition) -> PartitionReport:
    """Check vertex sets, pairwise disjointness, and coverage of K_{rd}^(r)."""
    n = p.r * p.d
    violations = []
    if len(p.parts) != p.d:
        violations.append(f"count: expected {p.d} parts, got {len(p.parts)}")
    for i, part in enumerate(p.parts, 1):
        if part.n != n or part.r != p.r:
            violations.append(f"vertex-set: part {i} is on n={part.n}, r={part.r}; expected n={n}, r={p.r}")
    owner: dict[Edge, int] = {}
    for i, part in enumerate(p.parts, 1):
        for e in part.edges:
            if e in owner:
                violations.append(f"disjointness: edge {e} lies in parts {owner[e]} and {i}")
            else:
                owner[e] = i
    if n >= p.r >= 1:
        for e in itertools.combinations(range(1, n + 1), p.r):
            if e not in owner:
                violations.append(f"coverage: edge {e} lies in no part")
                break
    extra = [e for e in owner if len(e) != p.r or e[-1] > n]
    if extra:
        violations.append(f"coverage: edge {extra[0]} is not an edge of K_{n}^({p.r})")
    return PartitionReport(not violations, violations)


# --- permutations and isomorphism -------------------------------------------


@dataclass(frozen=True)
class VertexPermutation:
    """Bijection of 1..n; ``image[i - 1]`` is the image of vertex i."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise HypergraphError(f"not a permutation of 1..{len(self.image)}: {self.image}")

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, v: int) -> int:
        return self.image[v - 1]

    def map_edge(self, edge: Sequence[int]) -> Edge:
        return tuple(sorted(self.image[v - 1] for v in edge))

    def apply(self, h: Hypergraph) -> Hypergraph:
        return Hypergraph(h.n, h.r, tuple(sorted(self.map_edge(e) for e in h.edges)))

    def inverse(self) -> VertexPermutation:
        inv = [0] * self.n
        for i, v in enumerate(self.image, 1):
            inv[v - 1] = i
        return VertexPermutation(tuple(inv))

    @classmethod
    def identity(cls, n: int) -> VertexPermutation:
        return cls(tuple(range(1, n + 1)))


def _degrees(h: Hypergraph) -> list[int]:
    deg = [0] * (h.n + 1)
    for e in h.edges:
        for v in e:
            deg[v] += 1
    return deg


def are_isomorphic(a: Hypergraph, b: Hypergraph, *, cap: int = DEFAULT_ISO_CAP,
                   prune: bool = True) -> VertexPermutation | None:
    """Exhaustive search for a vertex permutation carrying E(a) onto E(b).

    With ``prune`` the search maps vertices one at a time, only onto vertices
    of equal degree, and rejects a partial map as soon as an edge of ``a``
    whose vertices are all assigned lands outside E(b). Without it every one
    of the n! permutations is tried in lexicographic order.
    """
    if a.n != b.n or a.r != b.r:
        raise HypergraphError("isomorphism search needs equal n and r")
    if a.n > cap:
        raise HypergraphError(f"n={a.n} exceeds the exhaustive-search cap {cap}")
    if len(a.edges) != len(b.edges):
        return None
    target = b.edge_set
    n = a.n

    if not prune:
        for image in itertools.permutations(range(1, n + 1)):
            perm = VertexPermutation(image)
            if all(perm.map_edge(e) in target for e in a.edges):
                return perm
        return None

    deg_a, deg_b = _degrees(a), _degrees(b)
    if Counter(deg_a[1:]) != Counter(deg_b[1:]):
        return None
    # edges of a that become fully assigned once vertex v is placed
    closing: dict[int, list[Edge]] = {v: [] for v in range(1, n + 1)}
    for e in a.edges:
        closing[e[-1]].append(e)
    image = [0] * (n + 1)
    used = [False] * (n + 1)

    def extend(v: int) -> bool:
        if v > n:
            return True
        for w in range(1, n + 1):
            if used[w] or deg_a[v] != deg_b[w]:
                continue
            image[v] = w
            if all(tuple(sorted(image[x] for x in e)) in target for e in closing[v]):
                used[w] = True
                if extend(v + 1):
                    return True
                used[w] = False
        image[v] = 0
        return False

    if extend(1):
        return VertexPermutation(tuple(image[1:]))
    return None
