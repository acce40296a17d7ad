"""Exact linear algebra over the rationals.

Determinants are evaluated by fraction-free (Bareiss) elimination when all
entries are integers and by rational Gaussian elimination otherwise, so
every value is exact.  On top of the determinant sit the Hankel builders,
the Gram (Binet-Cauchy) count, the Sylvester pairing sum, Jacobi's minor
identity, and the Zavrotsky closed form for det(S_p^{i+j}).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exactnum import superfactorial

__all__ = [
    "det_exact",
    "gram_count",
    "sylvester_pairing_sum",
    "hankel_matrix",
    "hankel_det",
    "hankel_minor_det",
    "jacobi_identity_residual",
    "zavrotsky_closed_form",
    "hilbert_det_value",
]

Matrix = Sequence[Sequence[Fraction | int]]


def _det_bareiss(rows: list[list[int]]) -> int:
    """Fraction-free elimination; all intermediate divisions are exact."""
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def _det_gauss(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    sign = 1
    det = Fraction(1)
    for k in range(n):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = rows[k][k]
        det *= pivot
        for i in range(k + 1, n):
            if rows[i][k] == 0:
                continue
            factor = rows[i][k] / pivot
            for j in range(k, n):
                rows[i][j] -= factor * rows[k][j]
    return sign * det


def det_exact(matrix: Matrix) -> int | Fraction:
    """Exact determinant; the empty (0 x 0) matrix has determinant 1."""
    rows = [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    if all(isinstance(x, int) for row in rows for x in row):
        return _det_bareiss(rows)
    return _det_gauss([[Fraction(x) for x in row] for row in rows])


def gram_count(matrix: Matrix) -> int | Fraction:
    """det(M M^t) for a k x n matrix with k <= n.

    By the Binet-Cauchy theorem this equals the sum of the squares of all
    k x k minors of M, which is how it enters the tiling counts.
    """
    rows = [list(r) for r in matrix]
    if not rows:
        return 1
    k, n = len(rows), len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be rectangular")
    if k > n:
        raise ValueError("gram_count requires rows <= cols")
    gram = [[sum(rows[i][t] * rows[j][t] for t in range(n)) for j in range(k)]
            for i in range(k)]
    return det_exact(gram)


def sylvester_pairing_sum(matrix: Matrix) -> int | Fraction:
    """Sum of det(U_A) det(U_Abar) over all k-subsets A of the rows of a
    2k x k matrix U, where U_A keeps the rows in A (in increasing order).

    The pairing identity states this equals
    2^k det(even-indexed rows) det(odd-indexed rows).
    """
    rows = [list(r) for r in matrix]
    if not rows or len(rows) % 2 != 0:
        raise ValueError("matrix must have 2k rows")
    k = len(rows) // 2
    if any(len(r) != k for r in rows):
        raise ValueError("matrix must be 2k x k")
    total = 0
    universe = range(2 * k)
    for subset in combinations(universe, k):
        chosen = set(subset)
        rest = [i for i in universe if i not in chosen]
        total += det_exact([rows[i] for i in subset]) * det_exact([rows[i] for i in rest])
    return total


def hankel_matrix(seq: Sequence[Fraction | int], size: int,
                  shift: int = 0) -> list[list[Fraction | int]]:
    """The size x size matrix with entry a_{(i+j+shift)/2}, taking the
    entry to be 0 whenever (i+j+shift) is odd."""
    if size < 0:
        raise ValueError("size must be nonnegative")
    needed = (2 * (size - 1) + shift) // 2 if size > 0 else -1
    if needed >= len(seq):
        raise ValueError(
            f"sequence of length {len(seq)} too short for size {size}, shift {shift}")
    return [[seq[(i + j + shift) // 2] if (i + j + shift) % 2 == 0 else 0
             for j in range(size)] for i in range(size)]


def hankel_det(seq: Sequence[Fraction | int], size: int,
               shift: int = 0) -> int | Fraction:
    """H_s(k) = det(a_{(i+j+s)/2})_{0<=i,j<k}, with H_s(0) = 1."""
    return det_exact(hankel_matrix(seq, size, shift))


def hankel_minor_det(seq: Sequence[Fraction | int], size: int,
                     offset: int = 0) -> int | Fraction:
    """M_r(k) = det(a_{i+j+r})_{0<=i,j<k}: the dense Hankel minor with no
    interleaved zeros.  M_r(0) = 1."""
    if size < 0:
        raise ValueError("size must be nonnegative")
    needed = 2 * (size - 1) + offset
    if size > 0 and needed >= len(seq):
        raise ValueError(
            f"sequence of length {len(seq)} too short for size {size}, offset {offset}")
    return det_exact([[seq[i + j + offset] for j in range(size)] for i in range(size)])


def jacobi_identity_residual(seq: Sequence[Fraction | int], m: int) -> int | Fraction:
    """M_1(m)^2 - M_0(m) M_2(m) + M_0(m+1) M_2(m-1), which Jacobi's
    determinant identity asserts is 0.  Requires the sequence through
    index 2m; M_2(0) = 1 by the empty-determinant convention."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if 2 * m >= len(seq):
        raise ValueError("sequence must be defined through index 2m")
    m1 = hankel_minor_det(seq, m, 1)
    return (m1 * m1
            - hankel_minor_det(seq, m, 0) * hankel_minor_det(seq, m, 2)
            + hankel_minor_det(seq, m + 1, 0) * hankel_minor_det(seq, m - 1, 2))


def hilbert_det_value(k: int) -> Fraction:
    """Closed form V(k-1)^4 / V(2k-1) for the k x k Hilbert determinant
    det(1/(i+j+1))."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return Fraction(superfactorial(k - 1) ** 4, superfactorial(2 * k - 1))


def zavrotsky_closed_form(p: int, k: int) -> Fraction:
    """Closed form for det(S_p^{i+j})_{0<=i,j<k}:

        V(k-1)^4 / V(2k-1) * (p-k+1)^1 (p-k+2)^2 ... (p-1)^{k-1} p^k
                             (p+1)^{k-1} ... (p+k-1)^1,

    equivalently V(p+k-1) V(p-k-1) V(k-1)^4 / (V(p-1)^2 V(2k-1)) when
    p >= k+1.  The product form is authoritative at the boundary: it is 0
    for p <= k-1 (the matrix has rank at most p) and avoids superfactorials
    at negative arguments.
    """
    if p < 0 or k < 1:
        raise ValueError("requires p >= 0 and k >= 1")
    if p >= k + 1:
        return Fraction(
            superfactorial(p + k - 1) * superfactorial(p - k - 1)
            * superfactorial(k - 1) ** 4,
            superfactorial(p - 1) ** 2 * superfactorial(2 * k - 1))
    prod = 1
    for d in range(-(k - 1), k):
        prod *= (p + d) ** (k - abs(d))
    return Fraction(superfactorial(k - 1) ** 4 * prod, superfactorial(2 * k - 1))
