"""Small dense linear algebra over a finite field (row vectors)."""
from __future__ import annotations

from .field import FieldElement, FieldParams

Matrix = list[list[FieldElement]]
Vector = list[FieldElement]


def identity_matrix(params: FieldParams, n: int) -> Matrix:
    return [[params.one if i == j else params.zero for j in range(n)]
            for i in range(n)]


def mat_mul(a: Matrix, b: Matrix, params: FieldParams) -> Matrix:
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = params.zero
            for k in range(m):
                if a[i][k]:
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def vec_mat(v: Vector, m: Matrix, params: FieldParams) -> Vector:
    cols = len(m[0])
    out = [params.zero] * cols
    for i, vi in enumerate(v):
        if vi:
            row = m[i]
            for j in range(cols):
                if row[j]:
                    out[j] = out[j] + vi * row[j]
    return out


def rank(rows: list[Vector], params: FieldParams) -> int:
    """Row rank via Gaussian elimination."""
    work = [list(r) for r in rows]
    cols = len(work[0]) if work else 0
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = work[r][c].inverse()
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return r


def mat_inv(m: Matrix, params: FieldParams) -> Matrix:
    """Inverse of a square matrix via Gauss-Jordan; raises on singular input."""
    n = len(m)
    work = [list(row) + ident for row, ident in
            zip(m, identity_matrix(params, n))]
    for c in range(n):
        pivot = next((i for i in range(c, n) if work[i][c]), None)
        if pivot is None:
            raise ValueError("singular matrix")
        work[c], work[pivot] = work[pivot], work[c]
        inv = work[c][c].inverse()
        work[c] = [x * inv for x in work[c]]
        for i in range(n):
            if i != c and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    return [row[n:] for row in work]
