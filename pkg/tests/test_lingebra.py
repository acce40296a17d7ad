import random
from fractions import Fraction
from itertools import permutations

import pytest

from tilecount.exactnum import power_sum, superfactorial
from tilecount.lingebra import (
    det_exact,
    gram_count,
    hankel_det,
    hankel_matrix,
    hankel_minor_det,
    hilbert_det_value,
    jacobi_identity_residual,
    sylvester_pairing_sum,
    zavrotsky_closed_form,
)

rng = random.Random(987654321)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


def _det_by_permutations(matrix):
    """Leibniz-formula determinant; the independent oracle for det_exact."""
    n = len(matrix)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):  # count inversions
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = sign
        for i in range(n):
            term *= matrix[i][perm[i]]
        total += term
    return total


def test_det_identity_and_empty():
    assert det_exact([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert det_exact([]) == 1
    assert det_exact([[7]]) == 7


def test_det_two_by_two():
    assert det_exact([[2, 3], [3, 5]]) == 1


def test_det_rejects_nonsquare():
    with pytest.raises(ValueError):
        det_exact([[1, 2, 3], [4, 5, 6]])


def test_det_matches_leibniz_on_random_integer_matrices():
    for n in range(1, 5):
        for _ in range(30):
            m = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
            assert det_exact(m) == _det_by_permutations(m)


def test_det_matches_leibniz_on_random_rational_matrices():
    for n in range(1, 5):
        for _ in range(10):
            m = [[Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                  for _ in range(n)] for _ in range(n)]
            assert det_exact(m) == _det_by_permutations(m)


def test_det_handles_zero_pivots():
    m = [[0, 2, 0], [3, 0, 0], [0, 0, 5]]
    assert det_exact(m) == _det_by_permutations(m) == -30


def test_hilbert_determinant_closed_form():
    for k in range(1, 6):
        hilbert = [[Fraction(1, i + j + 1) for j in range(k)] for i in range(k)]
        assert det_exact(hilbert) == hilbert_det_value(k)
    assert hilbert_det_value(2) == Fraction(1, 12)


def test_gram_count_examples():
    assert gram_count([[1, 2]]) == 5
    assert gram_count([[1, 1, 1]]) == 3  # powers of L = {0,1,2} at k=1
    square = [[2, 1], [3, 4]]
    assert gram_count(square) == det_exact(square) ** 2


def test_gram_count_is_sum_of_squared_minors():
    from itertools import combinations
    for k in range(1, 4):
        for n in range(k, 7):
            m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(k)]
            want = sum(det_exact([[m[i][c] for c in cols] for i in range(k)]) ** 2
                       for cols in combinations(range(n), k))
            assert gram_count(m) == want


def test_gram_count_shape_violation():
    with pytest.raises(ValueError):
        gram_count([[1], [2]])


def test_sylvester_pairing_k1():
    assert sylvester_pairing_sum([[3], [5]]) == 30  # 2uv


def test_sylvester_pairing_identity():
    for k in range(1, 4):
        for _ in range(25):
            rows = [[rng.randint(-9, 9) for _ in range(k)] for _ in range(2 * k)]
            got = sylvester_pairing_sum(rows)
            want = 2 ** k * det_exact(rows[0::2]) * det_exact(rows[1::2])
            assert got == want


def test_sylvester_pairing_vanishes_on_equal_even_rows():
    rows = [[1, 2], [3, 4], [1, 2], [5, 6]]  # rows 0 and 2 equal
    assert sylvester_pairing_sum(rows) == 0


def test_hankel_matrix_interleaves_zeros():
    assert hankel_matrix(CATALAN, 2, shift=2) == [[1, 0], [0, 2]]


def test_hankel_det_catalan():
    for k in range(0, 5):
        assert hankel_det(CATALAN, k) == 1
    assert hankel_det(CATALAN, 2, shift=2) == 2
    assert hankel_det(CATALAN, 0, shift=5) == 1


def test_hankel_det_short_sequence_errors():
    with pytest.raises(ValueError):
        hankel_det([1, 2], 4)
    with pytest.raises(ValueError):
        hankel_minor_det([1, 2], 3)


def test_jacobi_identity_residual_zero():
    assert jacobi_identity_residual(CATALAN, 2) == 0
    seq = [power_sum(5, 2 * i) for i in range(9)]
    assert jacobi_identity_residual(seq, 2) == 0
    assert jacobi_identity_residual([3, 1, 4, 1], 1) == 0
    for _ in range(40):
        m = rng.randint(1, 4)
        seq = [rng.randint(1, 9) for _ in range(2 * m + 1)]
        assert jacobi_identity_residual(seq, m) == 0


def test_zavrotsky_examples():
    assert zavrotsky_closed_form(3, 1) == 3
    assert zavrotsky_closed_form(2, 2) == 1  # det [[2,3],[3,5]]
    assert zavrotsky_closed_form(1, 3) == 0  # rank at most p


def test_zavrotsky_matches_determinant():
    for p in range(0, 9):
        for k in range(1, 7):
            direct = det_exact([[power_sum(p, i + j) for j in range(k)]
                                for i in range(k)])
            assert zavrotsky_closed_form(p, k) == direct


def test_zavrotsky_superfactorial_and_product_forms_agree():
    for k in range(1, 6):
        for p in range(k + 1, k + 6):
            v_form = Fraction(
                superfactorial(p + k - 1) * superfactorial(p - k - 1)
                * superfactorial(k - 1) ** 4,
                superfactorial(p - 1) ** 2 * superfactorial(2 * k - 1))
            assert zavrotsky_closed_form(p, k) == v_form
