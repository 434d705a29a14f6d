"""Exact Gaussian elimination over a FiniteField. Matrices are lists of int rows."""

from __future__ import annotations

from .galois import FiniteField


def rref(F: FiniteField, rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row-echelon form (zero rows dropped) and pivot columns."""
    M = [list(r) for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(inv, a) for a in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(F: FiniteField, rows) -> int:
    return len(rref(F, rows)[1])


def row_basis(F: FiniteField, rows) -> list[list[int]]:
    return rref(F, rows)[0]


def nullspace(F: FiniteField, rows, ncols: int) -> list[list[int]]:
    """Basis of {v : M v = 0} (right kernel)."""
    R, piv = rref(F, rows)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(R, piv):
            v[pc] = F.neg(row[f])
        basis.append(v)
    return basis


def in_row_space(F: FiniteField, rows, v) -> bool:
    return rank(F, list(rows) + [list(v)]) == rank(F, rows)


def same_row_space(F: FiniteField, A, B) -> bool:
    return rref(F, A)[0] == rref(F, B)[0]


def mat_mul(F: FiniteField, A, B) -> list[list[int]]:
    Bt = list(zip(*B)) if B else []
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            acc = 0
            for a, b in zip(row, col):
                if a and b:
                    acc = F.add(acc, F.mul(a, b))
            out_row.append(acc)
        out.append(out_row)
    return out


def transpose(A) -> list[list[int]]:
    return [list(c) for c in zip(*A)]


def vec_mat(F: FiniteField, v, A) -> list[int]:
    """Row vector times matrix."""
    ncols = len(A[0]) if A else 0
    out = [0] * ncols
    for a, row in zip(v, A):
        if a:
            for j, b in enumerate(row):
                if b:
                    out[j] = F.add(out[j], F.mul(a, b))
    return out
