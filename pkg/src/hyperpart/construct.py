"""The residue partition of K_{rd}^(r) into d isomorphic parts and its Γ pieces.

Part a (1 <= a <= d) holds the r-subsets i_1 < ... < i_r of {1..rd} whose
t-th smallest vertex lies in the block S_a = {ra-r+1, ..., ra}, where
t = (i_1 + ... + i_r mod r) + 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterator

from hyperpart.hypercore import (
    Edge,
    Hypergraph,
    HypergraphError,
    Partition,
    VertexPermutation,
    faces,
)


def block(a: int, r: int) -> tuple[int, ...]:
    """The r consecutive integers ending at r*a."""
    return tuple(range(r * a - r + 1, r * a + 1))


def _block_index(v: int, r: int) -> int:
    return (v - 1) // r + 1


def omega_contains(edge: Edge, a: int, r: int, d: int) -> bool:
    edge = tuple(edge)
    if len(edge) != r or any(x >= y for x, y in zip(edge, edge[1:])):
        raise HypergraphError(f"edge {edge} is not a strictly increasing {r}-tuple")
    if edge[0] < 1 or edge[-1] > r * d:
        raise HypergraphError(f"edge {edge} has a vertex outside 1..{r * d}")
    t = sum(edge) % r  # zero-based position of the selected vertex
    return _block_index(edge[t], r) == a


def omega_part_of(edge: Edge, r: int) -> int:
    """Index of the unique part containing ``edge``."""
    return _block_index(edge[sum(edge) % r], r)


def build_omega(a: int, r: int, d: int) -> Hypergraph:
    if not 1 <= a <= d:
        raise HypergraphError(f"part index a={a} outside 1..{d}")
    n = r * d
    edges = tuple(e for e in itertools.combinations(range(1, n + 1), r)
                  if omega_part_of(e, r) == a)
    return Hypergraph(n, r, edges)


def build_partition(r: int, d: int) -> Partition:
    if r < 1 or d < 1:
        raise HypergraphError(f"need r >= 1 and d >= 1, got r={r}, d={d}")
    n = r * d
    buckets: list[list[Edge]] = [[] for _ in range(d)]
    for e in itertools.combinations(range(1, n + 1), r):
        buckets[omega_part_of(e, r) - 1].append(e)
    return Partition(r, d, tuple(Hypergraph(n, r, tuple(b)) for b in buckets))


def phi_map(a: int, r: int, d: int) -> VertexPermutation:
    """Vertex permutation carrying part a+1 onto part a.

    Fixes everything outside S_a and S_{a+1}; sends S_{a+1} to S_a keeping
    the residue mod r, and S_a to S_{a+1} lowering the residue by one.
    """
    if not 1 <= a < d:
        raise HypergraphError(f"phi needs 1 <= a < d, got a={a}, d={d}")
    image = list(range(1, r * d + 1))
    lo, hi = block(a, r), block(a + 1, r)
    by_residue_lo = {z % r: z for z in lo}
    by_residue_hi = {z % r: z for z in hi}
    for z in hi:
        image[z - 1] = by_residue_lo[z % r]
    for z in lo:
        image[z - 1] = by_residue_hi[(z - 1) % r]
    return VertexPermutation(tuple(image))


def shift_permutation(r: int) -> VertexPermutation:
    """i -> i + 1 mod r on {1..r}, with r sent to 1."""
    return VertexPermutation(tuple(i % r + 1 for i in range(1, r + 1)))


# --- Γ pieces ----------------------------------------------------------------


@dataclass(frozen=True, order=True)
class GammaKey:
    """Selects the edges of part 1 with exactly k vertices in 1..r and tail ``js``."""

    k: int
    js: tuple[int, ...] = ()

    def validate(self, r: int, d: int) -> None:
        if not 1 <= self.k <= r:
            raise HypergraphError(f"k={self.k} outside 1..{r}")
        if len(self.js) != r - self.k:
            raise HypergraphError(f"js={self.js} must have length r-k={r - self.k}")
        if any(x >= y for x, y in zip(self.js, self.js[1:])):
            raise HypergraphError(f"js={self.js} is not strictly increasing")
        if self.js and (self.js[0] < r + 1 or self.js[-1] > r * d):
            raise HypergraphError(f"js={self.js} must lie in {r + 1}..{r * d}")

    def __str__(self) -> str:
        return f"k={self.k} js=({','.join(map(str, self.js))})"


def gamma_keys(r: int, d: int) -> Iterator[GammaKey]:
    """All valid keys, by increasing k then lexicographic js."""
    for k in range(1, r + 1):
        for js in itertools.combinations(range(r + 1, r * d + 1), r - k):
            yield GammaKey(k, js)


def gamma_abstract(k: int, r: int, a: int) -> Hypergraph:
    """k-subsets of {1..r} whose sum is a, a+1, ..., or a+k-1 mod r."""
    if not 1 <= k <= r:
        raise HypergraphError(f"need 1 <= k <= r, got k={k}, r={r}")
    a %= r
    allowed = {(a + t) % r for t in range(k)}
    edges = tuple(e for e in itertools.combinations(range(1, r + 1), k) if sum(e) % r in allowed)
    return Hypergraph(r, k, edges)


def gamma_sub(key: GammaKey, r: int, d: int) -> Hypergraph:
    key.validate(r, d)
    edges = []
    for head in itertools.combinations(range(1, r + 1), key.k):
        e = head + key.js
        if omega_part_of(e, r) == 1:
            edges.append(e)
    return Hypergraph(r * d, r, tuple(edges))


@dataclass(frozen=True)
class PsiMap:
    """Tail-appending bijection from Γ_{k,r}^{-a} onto a Γ piece of part 1."""

    key: GammaKey
    residue: int
    domain: Hypergraph
    codomain: Hypergraph

    def forward(self, head: Edge) -> Edge:
        return tuple(head) + self.key.js

    def inverse(self, edge: Edge) -> Edge:
        return tuple(edge[: self.key.k])

    def pairs(self) -> list[tuple[Edge, Edge]]:
        return [(h, self.forward(h)) for h in self.domain.edges]


def psi_map(key: GammaKey, r: int, d: int) -> PsiMap:
    key.validate(r, d)
    a = sum(key.js) % r
    domain = gamma_abstract(key.k, r, -a)
    codomain = gamma_sub(key, r, d)
    return PsiMap(key, a, domain, codomain)


@dataclass(frozen=True)
class Decomposition:
    r: int
    d: int
    pieces: tuple[tuple[GammaKey, Hypergraph], ...]

    def nonempty(self) -> list[tuple[GammaKey, Hypergraph]]:
        return [(key, h) for key, h in self.pieces if h.edges]

    def total(self) -> int:
        return sum(len(h) for _, h in self.pieces)


def decompose_omega1(r: int, d: int) -> Decomposition:
    n = r * d
    buckets: dict[GammaKey, list[Edge]] = {key: [] for key in gamma_keys(r, d)}
    for e in build_omega(1, r, d).edges:
        k = sum(1 for v in e if v <= r)
        buckets[GammaKey(k, e[k:])].append(e)
    return Decomposition(r, d, tuple((key, Hypergraph(n, r, tuple(es))) for key, es in buckets.items()))


# --- homogeneity -------------------------------------------------------------


@dataclass
class HomogeneityReport:
    ok: bool
    # (part, s, actual, expected); s == r is the edge count row
    rows: list[tuple[int, int, int, int]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    def failures(self) -> list[tuple[int, int, int, int]]:
        return [row for row in self.rows if row[2] != row[3]]


def homogeneity_report(p: Partition) -> HomogeneityReport:
    """Face counts |E_s| against C(rd, s) for s < r, and |E| against C(rd-1, r-1)."""
    n = p.r * p.d
    rows = []
    for i, part in enumerate(p.parts, 1):
        for s in range(1, p.r):
            rows.append((i, s, len(faces(part, s)), comb(n, s)))
        rows.append((i, p.r, len(part.edges), comb(n - 1, p.r - 1)))
    report = HomogeneityReport(True, rows)
    report.ok = not report.failures()
    return report
