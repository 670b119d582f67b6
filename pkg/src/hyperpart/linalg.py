"""Exact and modular rank of small sparse integer matrices."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

DEFAULT_PRIME = 2**31 - 1
# matrices with both dimensions below this are ranked exactly in "auto" mode
EXACT_CUTOFF = 500
MAX_ENTRIES = 50_000_000


class RankError(ValueError):
    pass


@dataclass(frozen=True)
class SparseMatrix:
    """Column-major sparse integer matrix: ``cols[j]`` lists ``(row, value)``."""

    nrows: int
    ncols: int
    cols: tuple[tuple[tuple[int, int], ...], ...]

    @classmethod
    def from_dense(cls, rows) -> SparseMatrix:
        a = np.asarray(rows, dtype=np.int64)
        if a.ndim != 2:
            raise RankError("expected a 2-d array")
        cols = tuple(tuple((int(i), int(a[i, j])) for i in np.flatnonzero(a[:, j]))
                     for j in range(a.shape[1]))
        return cls(a.shape[0], a.shape[1], cols)

    def to_dense(self) -> np.ndarray:
        a = np.zeros((self.nrows, self.ncols), dtype=np.int64)
        for j, col in enumerate(self.cols):
            for i, v in col:
                a[i, j] += v
        return a

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols


@dataclass(frozen=True)
class RankResult:
    rank: int
    method: str  # "exact" or "modular"
    prime: int | None = None


def _rank_exact(m: SparseMatrix) -> int:
    """Fraction-free sparse elimination over the integers with Markowitz pivoting.

    Each step takes the sparsest live column and, within it, the sparsest
    row (a cheap Markowitz-style choice that keeps fill low), cross-multiplies
    the pivot out of the other rows of that column and divides every touched
    row by its content so entries stay small.
    """
    rows: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = {}
    for j, col in enumerate(m.cols):
        for i, v in col:
            if v:
                rows.setdefault(i, {})[j] = rows.get(i, {}).get(j, 0) + v
    for i in list(rows):
        rows[i] = {j: v for j, v in rows[i].items() if v}
        if not rows[i]:
            del rows[i]
            continue
        for j in rows[i]:
            col_rows.setdefault(j, set()).add(i)

    rank = 0
    while col_rows:
        j = min(col_rows, key=lambda c: (len(col_rows[c]), c))
        i = min(col_rows[j], key=lambda x: (len(rows[x]), x))
        prow = rows.pop(i)
        for c in prow:
            col_rows[c].discard(i)
        piv = prow[j]
        for x in list(col_rows[j]):
            row = rows[x]
            f = row[j]
            g = gcd(piv, f)
            mp, mf = piv // g, f // g
            for c in row:
                row[c] *= mp
            for c, v in prow.items():
                nv = row.get(c, 0) - mf * v
                if nv:
                    if c not in row:
                        col_rows[c].add(x)
                    row[c] = nv
                elif c in row:
                    del row[c]
                    col_rows[c].discard(x)
            if row:
                content = 0
                for v in row.values():
                    content = gcd(content, v)
                    if content == 1:
                        break
                if content > 1:
                    for c in row:
                        row[c] //= content
            else:
                del rows[x]
        for c in [c for c in prow if not col_rows[c]]:
            del col_rows[c]
        col_rows.pop(j, None)
        rank += 1
    return rank


def _rank_mod_p(m: SparseMatrix, p: int) -> int:
    """Dense row reduction over GF(p) with int64 arithmetic (needs p < 2**31)."""
    if m.nrows == 0 or m.ncols == 0:
        return 0
    a = m.to_dense() % p
    nrows, ncols = a.shape
    rank = 0
    for j in range(ncols):
        if rank == nrows:
            break
        nz = np.flatnonzero(a[rank:, j])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, j]), -1, p)
        a[rank, j:] = (a[rank, j:] * inv) % p
        below = rank + 1 + np.flatnonzero(a[rank + 1:, j])
        if below.size:
            f = a[below, j][:, None]
            a[below, j:] = (a[below, j:] - f * a[rank, j:]) % p
        rank += 1
    return rank


def matrix_rank(m: SparseMatrix, mode: str = "exact", prime: int = DEFAULT_PRIME) -> RankResult:
    """Rank over Q ("exact") or over GF(prime) ("fast"); the latter never exceeds the former.

    "auto" ranks exactly when both dimensions are below EXACT_CUTOFF.
    """
    if m.nrows * m.ncols > MAX_ENTRIES:
        raise RankError(f"{m.nrows}x{m.ncols} matrix exceeds the {MAX_ENTRIES}-entry limit")
    if mode == "auto":
        mode = "exact" if max(m.nrows, m.ncols) < EXACT_CUTOFF else "fast"
    if mode == "exact":
        return RankResult(_rank_exact(m), "exact")
    if mode == "fast":
        if not 2 <= prime < 2**31:
            raise RankError("modular rank needs a prime below 2**31")
        return RankResult(_rank_mod_p(m, prime), "modular", prime)
    raise RankError(f"unknown rank mode {mode!r}")
