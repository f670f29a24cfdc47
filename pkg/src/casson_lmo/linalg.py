"""Exact linear algebra over the rationals for small integer matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ArgumentError

__all__ = [
    "Matrix",
    "as_matrix",
    "is_symmetric",
    "det",
    "principal_minor_det",
    "charpoly",
    "inertia",
    "submatrix",
]

Matrix = list[list[Fraction]]


def as_matrix(rows: Iterable[Iterable[object]]) -> Matrix:
    M = [[Fraction(v) for v in row] for row in rows]  # type: ignore[arg-type]
    if any(len(row) != len(M) for row in M):
        raise ArgumentError("matrix must be square")
    return M


def is_symmetric(M: Sequence[Sequence[object]]) -> bool:
    n = len(M)
    return all(M[i][j] == M[j][i] for i in range(n) for j in range(i))


def submatrix(M: Sequence[Sequence[object]], keep: Sequence[int]) -> Matrix:
    return [[Fraction(M[i][j]) for j in keep] for i in keep]  # type: ignore[arg-type]


def det(M: Sequence[Sequence[object]]) -> Fraction:
    """Determinant by Bareiss fraction-free elimination; the empty matrix gives 1."""
    A = as_matrix(M)
    n = len(A)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if A[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else Fraction(1)


def principal_minor_det(M: Sequence[Sequence[object]], deleted: Iterable[int] = ()) -> Fraction:
    """Determinant after deleting the rows and columns with the given 0-based indices."""
    gone = set(deleted)
    n = len(M)
    if any(not 0 <= i < n for i in gone):
        raise ArgumentError("deleted index out of range")
    return det(submatrix(M, [i for i in range(n) if i not in gone]))


def charpoly(M: Sequence[Sequence[object]]) -> list[Fraction]:
    """Coefficients of det(xI - M), constant term first (Faddeev-LeVerrier)."""
    A = as_matrix(M)
    n = len(A)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    P = [[Fraction(0)] * n for _ in range(n)]  # M_0 = 0
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k) / k
        AP = [[sum(A[i][t] * P[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            AP[i][i] += coeffs[n - k + 1]
        P = AP
        trace = sum(sum(A[i][t] * P[t][i] for t in range(n)) for i in range(n))
        coeffs[n - k] = -trace / k
    return coeffs


def _sign_changes(coeffs: Sequence[Fraction]) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def inertia(M: Sequence[Sequence[object]]) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts of a symmetric matrix.

    All roots of the characteristic polynomial are real, so Descartes' rule
    of signs counts positive roots exactly.
    """
    if not is_symmetric(M):
        raise ArgumentError("inertia needs a symmetric matrix")
    p = charpoly(M)
    nullity = next(k for k, c in enumerate(p) if c != 0)
    q = p[nullity:]
    pos = _sign_changes(q)
    neg = _sign_changes([c if k % 2 == 0 else -c for k, c in enumerate(q)])
    return pos, neg, nullity
