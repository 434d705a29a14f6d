"""Exact minimum distance and weight distribution by enumeration.

Messages are visited in lexicographic order (first row most significant).
The last rows are expanded into one numpy block of all their combinations;
the leading rows are looped over in Python, one block per message prefix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import BudgetError
from .galois import FiniteField
from .linalg import nullspace, rank, rref

DEFAULT_BUDGET = 10**7
BLOCK_TARGET = 1 << 16


@dataclass(frozen=True)
class DistanceReport:
    k: int
    n: int
    exact_distance: int | None
    weight_distribution: tuple[int, ...] | None
    enumerated: int
    truncated: bool
    method: str = "enumerate"

    def to_json(self) -> dict:
        return {"k": self.k, "d": self.exact_distance, "truncated": self.truncated,
                "weights": list(self.weight_distribution) if self.weight_distribution else None,
                "method": self.method}


def _tables(F: FiniteField):
    add = np.asarray([[F.add(a, b) for b in range(F.q)] for a in range(F.q)], dtype=np.int32)
    mul = np.asarray([[F.mul(a, b) for b in range(F.q)] for a in range(F.q)], dtype=np.int32)
    return add, mul


def _rows_of(matrix):
    F = matrix.field
    rows = [list(r) for r in matrix.rows]
    return F, rows


def exact_min_distance(matrix, budget: int = DEFAULT_BUDGET, method: str = "enumerate") -> DistanceReport:
    """Minimum weight of the row space of ``matrix`` (rows must be independent).

    method: "enumerate" (full weight distribution), "columns" (smallest set of
    dependent parity-check columns) or "auto" (enumerate when q^k ≤ budget).
    """
    F, rows = _rows_of(matrix)
    n = matrix.ncols
    k = len(rows)
    if k and rank(F, rows) != k:
        raise ValueError("generator rows are linearly dependent; pre-reduce the matrix")
    if method == "auto":
        method = "enumerate" if F.q**k <= budget else "columns"
    if method == "columns":
        return _by_columns(F, rows, n)
    if method != "enumerate":
        raise ValueError(f"unknown method {method!r}")
    return _enumerate(F, rows, n, budget)


def _enumerate(F: FiniteField, rows, n: int, budget: int) -> DistanceReport:
    k = len(rows)
    if k == 0:
        return DistanceReport(0, n, None, (1,) + (0,) * n, 1, False)
    q = F.q
    total = q**k
    limit = min(total, budget)
    add, mul = _tables(F)
    G = np.asarray(rows, dtype=np.int32)
    # inner block: the last k1 rows, all q^k1 combinations, lexicographic
    k1 = 0
    while k1 < k and q ** (k1 + 1) <= max(BLOCK_TARGET, 1):
        k1 += 1
    k1 = max(k1, 1)
    inner = np.zeros((1, n), dtype=np.int32)
    for r in G[k - k1:]:
        scaled = mul[:, r]                                # (q, n): a·r for each a
        inner = add[inner[:, None, :], scaled[None, :, :]].reshape(-1, n)
    outer_rows = G[: k - k1]
    hist = np.zeros(n + 1, dtype=np.int64)
    seen = 0
    for prefix in itertools.product(range(q), repeat=k - k1):
        off = np.zeros(n, dtype=np.int32)
        for a, r in zip(prefix, outer_rows):
            if a:
                off = add[off, mul[a, r]]
        block = add[inner, off[None, :]]
        take = min(len(block), limit - seen)
        w = np.count_nonzero(block[:take], axis=1)
        hist += np.bincount(w, minlength=n + 1)
        seen += take
        if seen >= limit:
            break
    nz = np.flatnonzero(hist[1:])
    d = int(nz[0]) + 1 if len(nz) else None
    return DistanceReport(k, n, d, tuple(int(x) for x in hist), seen, seen < total)


def _by_columns(F: FiniteField, rows, n: int) -> DistanceReport:
    """d = least w such that some w columns of a parity-check matrix are dependent."""
    k = len(rows)
    if k == 0:
        return DistanceReport(0, n, None, None, 0, False, "columns")
    H = nullspace(F, rows, n)
    if not H:
        return DistanceReport(k, n, 1, None, 0, False, "columns")
    cols = list(zip(*H))
    for w in range(1, n - k + 2):
        for S in itertools.combinations(range(n), w):
            if rank(F, [cols[i] for i in S]) < w:
                return DistanceReport(k, n, w, None, 0, False, "columns")
    raise RuntimeError("no dependent column set found; Singleton bound violated")


def row_space_equal(A, B) -> bool:
    if A.field is not B.field and A.field != B.field:
        raise ValueError("matrices over different fields")
    if A.ncols != B.ncols:
        raise ValueError(f"column counts differ: {A.ncols} vs {B.ncols}")
    return rref(A.field, A.rows)[0] == rref(B.field, B.rows)[0]


def reduce_rows(F: FiniteField, rows) -> list[list[int]]:
    """Independent rows spanning the same space (reduced echelon form)."""
    return rref(F, rows)[0]


def check_budget(F: FiniteField, k: int, budget: int) -> None:
    if F.q**k > budget:
        raise BudgetError(f"{F.q}^{k} codewords exceed the budget {budget}")
