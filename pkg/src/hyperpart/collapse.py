"""Leaf removal: peel edges that own a private (r-1)-face until nothing is left.

An edge is a leaf when one of its (r-1)-faces lies in no other edge of the
current hypergraph. Removing leaves does not change the top Betti number, so
peeling a hypergraph down to nothing certifies b_{r-1} = 0.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable

from hyperpart.construct import GammaKey, build_omega, decompose_omega1, gamma_sub
from hyperpart.hypercore import Edge, FaceSet, Hypergraph, HypergraphError


class CollapseError(RuntimeError):
    """A structured collapse stage could not find a private face it should have."""


@dataclass(frozen=True)
class PeelStep:
    edge: Edge
    private_face: Edge
    stage: GammaKey | None = None

    def __str__(self) -> str:
        return f"{' '.join(map(str, self.edge))} | {' '.join(map(str, self.private_face))}"


@dataclass(frozen=True)
class PeelSequence:
    initial: Hypergraph
    steps: tuple[PeelStep, ...]
    residual: Hypergraph

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def complete(self) -> bool:
        return not self.residual.edges


def _drop(edge: Edge, i: int) -> Edge:
    return edge[:i] + edge[i + 1:]


def _subfaces(edge: Edge) -> list[Edge]:
    """(r-1)-faces of ``edge`` in lexicographic order."""
    return [_drop(edge, i) for i in range(len(edge) - 1, -1, -1)]


class _FaceIndex:
    """face -> set of live edges containing it, updated as edges are removed."""

    def __init__(self, edges: Iterable[Edge]):
        self.live: set[Edge] = set()
        self.owners: dict[Edge, set[Edge]] = {}
        for e in edges:
            self.live.add(e)
            for f in _subfaces(e):
                self.owners.setdefault(f, set()).add(e)

    def is_private(self, face: Edge) -> bool:
        return len(self.owners.get(face, ())) == 1

    def private_face(self, edge: Edge, allowed=None) -> Edge | None:
        for f in _subfaces(edge):
            if self.is_private(f) and (allowed is None or f in allowed):
                return f
        return None

    def remove(self, edge: Edge) -> list[Edge]:
        """Remove ``edge``; return edges that just gained a private face."""
        self.live.discard(edge)
        freed = []
        for f in _subfaces(edge):
            owners = self.owners[f]
            owners.discard(edge)
            if len(owners) == 1:
                freed.append(next(iter(owners)))
        return freed


def weight(edge: Iterable[int]) -> int:
    return sum(edge)


@dataclass(frozen=True)
class WeightReport:
    a: int
    q: int
    top_class: tuple[Edge, ...]


def weight_report(g: Hypergraph, a: int, r: int) -> WeightReport:
    """Weight level q = max floor((w - a) / r) over edges, and the edges attaining it."""
    if not g.edges:
        raise HypergraphError("weight report needs at least one edge")
    levels = {e: (weight(e) - a) // r for e in g.edges}
    q = max(levels.values())
    return WeightReport(a, q, tuple(e for e in g.edges if levels[e] == q))


def find_leaf(h: Hypergraph) -> tuple[Edge, Edge] | None:
    """Lexicographically smallest edge with a private face, and its smallest such face."""
    index = _FaceIndex(h.edges)
    for e in h.edges:
        f = index.private_face(e)
        if f is not None:
            return e, f
    return None


def greedy_collapse(h: Hypergraph) -> PeelSequence:
    """Peel the smallest leaf until none remains.

    Face counts only go down, so an edge that becomes a leaf stays one until
    it is removed; a heap of leaf candidates therefore replays exactly the
    choices of repeated :func:`find_leaf` calls.
    """
    index = _FaceIndex(h.edges)
    heap = [e for e in h.edges if index.private_face(e) is not None]
    heapq.heapify(heap)
    steps = []
    while heap:
        e = heapq.heappop(heap)
        if e not in index.live:
            continue
        f = index.private_face(e)
        steps.append(PeelStep(e, f))
        for freed in index.remove(e):
            heapq.heappush(heap, freed)
    residual = Hypergraph(h.n, h.r, tuple(sorted(index.live)))
    return PeelSequence(h, tuple(steps), residual)


def je_faces(key: GammaKey, r: int, d: int) -> FaceSet:
    """(r-1)-faces of the Γ piece that keep every vertex of its tail ``js``."""
    piece = gamma_sub(key, r, d)
    found = {_drop(e, i) for e in piece.edges for i in range(key.k)}
    return FaceSet(r - 1, tuple(sorted(found)))


def structured_collapse_omega1(r: int, d: int) -> PeelSequence:
    """Empty part 1 piece by piece: k = 1..r, tails in lexicographic order.

    Each piece is peeled greedily, but only through faces that contain its
    whole tail; privacy is judged against everything still present.
    """
    decomposition = decompose_omega1(r, d)
    initial = build_omega(1, r, d)
    index = _FaceIndex(initial.edges)
    steps = []
    for key, piece in decomposition.pieces:
        remaining = list(piece.edges)
        allowed = {_drop(e, i) for e in remaining for i in range(key.k)}
        while remaining:
            for e in remaining:
                f = index.private_face(e, allowed)
                if f is not None:
                    break
            else:
                raise CollapseError(f"piece {key} of part 1 (r={r}, d={d}) has no leaf "
                                    f"through a tail-containing face; {len(remaining)} edges left")
            steps.append(PeelStep(e, f, key))
            index.remove(e)
            remaining.remove(e)
    residual = Hypergraph(initial.n, r, tuple(sorted(index.live)))
    return PeelSequence(initial, tuple(steps), residual)


@dataclass
class PeelValidation:
    valid: bool
    failed_step: int | None = None
    reason: str = ""
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.valid


def validate_peel(seq: PeelSequence) -> PeelValidation:
    """Replay ``seq`` from its initial hypergraph, checking every leaf condition."""
    index = _FaceIndex(seq.initial.edges)
    for i, step in enumerate(seq.steps):
        e, f = tuple(step.edge), tuple(step.private_face)
        if e not in index.live:
            return PeelValidation(False, i, f"edge {e} is not present")
        if len(f) != len(e) - 1 or not set(f) <= set(e):
            return PeelValidation(False, i, f"{f} is not an (r-1)-face of {e}")
        if not index.is_private(f):
            others = sorted(index.owners[f] - {e})
            return PeelValidation(False, i, f"face {f} is shared with {others[0]}",
                                  {"shared_with": others})
        index.remove(e)
    if index.live != set(seq.residual.edges):
        return PeelValidation(False, len(seq.steps), "replay does not end at the recorded residual")
    return PeelValidation(True)
