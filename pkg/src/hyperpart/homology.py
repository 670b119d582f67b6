"""Reduced rational homology of the simplicial complex spanned by a uniform hypergraph."""

from __future__ import annotations

from dataclasses import dataclass

from hyperpart.hypercore import Edge, Hypergraph, faces
from hyperpart.linalg import RankResult, SparseMatrix, matrix_rank


@dataclass(frozen=True)
class ChainComplex:
    """Bases of C_{-1}, ..., C_{r-1} for the complex X(H).

    ``bases[k + 1]`` lists the (k+1)-vertex faces spanning C_k, so
    ``bases[0] == ((),)`` is the augmentation. Only vertices that lie in some
    edge enter C_0.
    """

    r: int
    bases: tuple[tuple[Edge, ...], ...]

    def basis(self, k: int) -> tuple[Edge, ...]:
        return self.bases[k + 1]

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.bases)


def chain_complex(h: Hypergraph) -> ChainComplex:
    bases: list[tuple[Edge, ...]] = [((),)]
    for s in range(1, h.r + 1):
        bases.append(faces(h, s).faces)
    return ChainComplex(h.r, tuple(bases))


def boundary_matrix(cc: ChainComplex, k: int) -> SparseMatrix:
    """Matrix of the boundary C_k -> C_{k-1}; dropping the j-th vertex (from 0) has sign (-1)^j."""
    if not 0 <= k <= cc.r - 1:
        raise ValueError(f"boundary index k={k} outside 0..{cc.r - 1}")
    rows = cc.basis(k - 1)
    index = {f: i for i, f in enumerate(rows)}
    cols = []
    for face in cc.basis(k):
        col = []
        for j in range(len(face)):
            col.append((index[face[:j] + face[j + 1:]], -1 if j % 2 else 1))
        cols.append(tuple(col))
    return SparseMatrix(len(rows), len(cols), tuple(cols))


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers b_{-1}, ..., b_{r-1}.

    ``method`` is "exact" when every rank was computed over Q, and
    "modular" when the fast path returned all zeros: a modular rank can only
    undershoot, so zero Betti numbers from it are already certain.
    """

    values: tuple[int, ...]
    method: str = "exact"

    def __getitem__(self, k: int) -> int:
        # indexed by homological degree, so b[-1] is the augmentation term
        return self.values[k + 1]

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def is_zero(self) -> bool:
        return not any(self.values)

    def alternating_sum(self) -> int:
        return sum(v if i % 2 == 0 else -v for i, v in enumerate(self.values))

    def __str__(self) -> str:
        return " ".join(map(str, self.values))


def boundary_ranks(cc: ChainComplex, mode: str = "exact") -> list[RankResult]:
    return [matrix_rank(boundary_matrix(cc, k), mode) for k in range(cc.r)]


def _betti_from_ranks(sizes: tuple[int, ...], ranks: list[int]) -> tuple[int, ...]:
    # sizes[k + 1] = dim C_k; ranks[k] = rank of the boundary out of C_k
    out = []
    for k in range(-1, len(ranks)):
        rank_out = ranks[k] if k >= 0 else 0
        rank_in = ranks[k + 1] if k + 1 < len(ranks) else 0
        out.append(sizes[k + 1] - rank_out - rank_in)
    return tuple(out)


def betti(h: Hypergraph, mode: str = "auto") -> BettiVector:
    """Reduced Betti numbers over Q.

    ``mode`` is "exact", "fast" (ranks mod a word-sized prime) or "auto"
    (exact for small boundary matrices, modular for large ones). A non-zero
    result obtained with any modular rank is recomputed exactly.
    """
    cc = chain_complex(h)
    results = boundary_ranks(cc, mode)
    values = _betti_from_ranks(cc.sizes(), [res.rank for res in results])
    if all(res.method == "exact" for res in results):
        return BettiVector(values, "exact")
    if not any(values):
        return BettiVector(values, "modular")
    results = boundary_ranks(cc, "exact")
    return BettiVector(_betti_from_ranks(cc.sizes(), [res.rank for res in results]), "exact")


def euler_characteristic(h: Hypergraph) -> int:
    """Alternating sum of chain-group dimensions, with C_{-1} counted positively."""
    sizes = chain_complex(h).sizes()
    return sum(v if i % 2 == 0 else -v for i, v in enumerate(sizes))
