"""Integer matrix normal forms and congruence kernels.

Matrices are plain lists of lists of Python ints (row-major).  Everything is
exact; there are no modular shortcuts.
"""
from __future__ import annotations

import math
from typing import Sequence

__all__ = [
    "IntMatrix",
    "identity",
    "matmul",
    "determinant",
    "smith_normal_form",
    "hermite_normal_form",
    "kernel_mod",
    "lattice_index",
]

IntMatrix = list[list[int]]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _copy(A: Sequence[Sequence[int]]) -> IntMatrix:
    return [[int(x) for x in row] for row in A]


def _shape(A: Sequence[Sequence[int]], cols: int | None = None) -> tuple[int, int]:
    rows = len(A)
    if rows == 0:
        return 0, cols or 0
    ncols = len(A[0])
    if any(len(r) != ncols for r in A):
        raise ValueError("ragged matrix")
    return rows, ncols


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    if not A:
        return []
    inner = len(B)
    if len(A[0]) != inner:
        raise ValueError(f"shape mismatch: {len(A)}x{len(A[0])} times {inner}x?")
    cols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(A))]


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = _copy(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _row_op(M: IntMatrix, i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    """Replace rows (i, j) by (a*Ri + b*Rj, c*Ri + d*Rj)."""
    ri, rj = M[i], M[j]
    M[i] = [a * x + b * y for x, y in zip(ri, rj)]
    M[j] = [c * x + d * y for x, y in zip(ri, rj)]


def _col_op(M: IntMatrix, i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    for row in M:
        x, y = row[i], row[j]
        row[i] = a * x + b * y
        row[j] = c * x + d * y


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def smith_normal_form(A: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with U @ A @ V == D.

    U and V are unimodular, D is diagonal with nonnegative entries and
    D[i][i] | D[i+1][i+1].
    """
    rows, cols = _shape(A)
    D = _copy(A)
    U = identity(rows)
    V = identity(cols)
    t = 0
    while t < min(rows, cols):
        # choose the nonzero entry of least absolute value in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        if i != t:
            D[t], D[i] = D[i], D[t]
            U[t], U[i] = U[i], U[t]
        if j != t:
            _col_op(D, t, j, 0, 1, 1, 0)
            _col_op(V, t, j, 0, 1, 1, 0)
        done = False
        while not done:
            done = True
            for i in range(t + 1, rows):
                if D[i][t]:
                    if D[i][t] % D[t][t] == 0:
                        # plain elimination; the xgcd step would create fill-in here
                        q = D[i][t] // D[t][t]
                        _row_op(D, t, i, 1, 0, -q, 1)
                        _row_op(U, t, i, 1, 0, -q, 1)
                        continue
                    g, x, y = _xgcd(D[t][t], D[i][t])
                    a, b = D[t][t] // g, D[i][t] // g
                    _row_op(D, t, i, x, y, -b, a)
                    _row_op(U, t, i, x, y, -b, a)
            for j in range(t + 1, cols):
                if D[t][j]:
                    if D[t][j] % D[t][t] == 0:
                        q = D[t][j] // D[t][t]
                        _col_op(D, t, j, 1, 0, -q, 1)
                        _col_op(V, t, j, 1, 0, -q, 1)
                        continue
                    g, x, y = _xgcd(D[t][t], D[t][j])
                    a, b = D[t][t] // g, D[t][j] // g
                    _col_op(D, t, j, x, y, -b, a)
                    _col_op(V, t, j, x, y, -b, a)
                    done = False
            if any(D[i][t] for i in range(t + 1, rows)):
                done = False
                continue
            # enforce divisibility of the rest of the block by the pivot
            p = D[t][t]
            for i in range(t + 1, rows):
                if any(D[i][j] % p for j in range(t + 1, cols)):
                    D[t] = [x + y for x, y in zip(D[t], D[i])]
                    U[t] = [x + y for x, y in zip(U[t], U[i])]
                    done = False
                    break
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, D, V


def hermite_normal_form(A: Sequence[Sequence[int]]) -> IntMatrix:
    """Row-style Hermite normal form of the row lattice of A.

    Pivots are positive and entries above a pivot lie in [0, pivot).  The
    output has the same shape as A; zero rows are kept at the bottom.
    """
    return _hnf_with_transform(A)[0]


def _hnf_with_transform(A: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    rows, cols = _shape(A)
    H = _copy(A)
    U = identity(rows)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = [i for i in range(r, rows) if H[i][c]]
        if not nz:
            continue
        while True:
            nz = [i for i in range(r, rows) if H[i][c]]
            piv = min(nz, key=lambda i: abs(H[i][c]))
            if piv != r:
                H[r], H[piv] = H[piv], H[r]
                U[r], U[piv] = U[piv], U[r]
            clean = True
            for i in range(r + 1, rows):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
                    if H[i][c]:
                        clean = False
            if clean:
                break
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        p = H[r][c]
        for i in range(r):
            q = H[i][c] // p
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
    return H, U


def kernel_mod(A: Sequence[Sequence[int]], moduli: Sequence[int]) -> IntMatrix:
    """Z-basis (in HNF) of {x in Z^rows : (x A)_j = 0 mod moduli[j] for all j}.

    Works by stacking diag(moduli) under A and reading the left kernel off
    the HNF transform of the stacked system.
    """
    rows, cols = _shape(A, cols=len(moduli))
    if len(moduli) != cols:
        raise ValueError(f"need {cols} moduli, got {len(moduli)}")
    if any(m <= 0 for m in moduli):
        raise ValueError("moduli must be positive")
    if rows == 0:
        return []
    stacked = _copy(A) + [[m if j == k else 0 for j in range(cols)] for k, m in enumerate(moduli)]
    H, U = _hnf_with_transform(stacked)
    kernel = [U[i][:rows] for i in range(len(H)) if not any(H[i])]
    basis = [row for row in hermite_normal_form(kernel) if any(row)]
    assert len(basis) == rows, "congruence kernel must have full rank"
    return basis


def lattice_index(basis: Sequence[Sequence[int]]) -> int:
    """Index of the lattice spanned by a square full-rank basis in Z^n."""
    return abs(determinant(basis))


def is_diagonal_chain(D: Sequence[Sequence[int]]) -> bool:
    diag = []
    for i, row in enumerate(D):
        for j, x in enumerate(row):
            if i != j and x:
                return False
        if i < len(row):
            diag.append(row[i])
    if any(d < 0 for d in diag):
        return False
    return all(b % a == 0 if a else b == 0 for a, b in zip(diag, diag[1:]))


def gcd_list(xs: Sequence[int]) -> int:
    return math.gcd(*xs) if xs else 0
