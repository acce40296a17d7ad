import random
from fractions import Fraction
from math import factorial

import pytest

from tilecount.cfhankel import (
    FormalSeries,
    JFraction,
    TerminatingFractionError,
    VanishingHankelMinorError,
    cf_to_series,
    e_operator,
    g_k_series,
    hankel_from_cf,
    hyp2f1_series,
    l_operator,
    mu_coefficients,
    mu_fraction_odd_series,
    odd_power_sum_series,
    prop_j_h2,
    series_to_cf,
    sinh_kernel_series,
    verify_g_recurrence,
    walz_coefficient,
)
from tilecount.exactnum import power_sum
from tilecount.lingebra import hankel_det, hankel_minor_det

rng = random.Random(424242)

CATALAN_LAMBDAS = JFraction((1,) * 12)


def geometric(order):
    return FormalSeries([1] * (order + 1))


# -- series arithmetic -------------------------------------------------

def test_series_mul_and_div():
    ex = FormalSeries.exp(1, 8)
    assert ex * FormalSeries.exp(-1, 8) == FormalSeries.one(8)
    assert (FormalSeries.one(8) / (1 - FormalSeries.x(8))) == geometric(8)
    assert geometric(8) * (1 - FormalSeries.x(8)) == FormalSeries.one(8)


def test_series_division_with_valuation():
    x = FormalSeries.x(6)
    x2 = x * x
    assert x2 / x == FormalSeries.x(5)
    with pytest.raises(ValueError):
        _ = x / x2  # quotient would not be a power series
    with pytest.raises(ZeroDivisionError):
        _ = x / FormalSeries.zero(6)


def test_series_differentiate_and_pow():
    ex = FormalSeries.exp(1, 9)
    assert ex.differentiate() == ex.truncate(8)
    cube = (1 + FormalSeries.x(6)) ** 3
    assert cube.coeffs[:4] == (Fraction(1), Fraction(3), Fraction(3), Fraction(1))


def test_series_compose():
    # exp(2x) = exp(x) composed with 2x
    outer = FormalSeries.exp(1, 7)
    inner = 2 * FormalSeries.x(7)
    assert outer.compose(inner) == FormalSeries.exp(2, 7)


def test_l_and_e_operators():
    assert l_operator(FormalSeries.exp(1, 10)) == geometric(10)
    assert e_operator(geometric(10)) == FormalSeries.exp(1, 10)
    x2_over_2 = FormalSeries([0, 0, Fraction(1, 2)])
    assert l_operator(x2_over_2) == FormalSeries([0, 0, 1])
    s = FormalSeries([rng.randint(-5, 5) for _ in range(9)])
    assert l_operator(e_operator(s)) == s


# -- continued fractions ----------------------------------------------

def test_cf_to_series_catalan():
    series = cf_to_series(CATALAN_LAMBDAS, 4)
    assert series.coeffs == (1, 1, 2, 5, 14)


def test_cf_to_series_terminating():
    series = cf_to_series(JFraction((2, 1, 0)), 3)
    assert series.coeffs == (2, 2, 2, 2)  # 2/(1-x)
    constant = cf_to_series(JFraction((7,), terminated=True), 3)
    assert constant.coeffs == (7, 0, 0, 0)


def test_cf_to_series_needs_depth_or_termination():
    with pytest.raises(ValueError):
        cf_to_series(JFraction((1, 1)), 5)
    with pytest.raises(ValueError):
        cf_to_series(JFraction((0, 1, 1)), 2)


def test_series_to_cf_geometric():
    jf = series_to_cf(2 * geometric(8))
    assert jf.lambdas == (2, 1)
    assert jf.terminated


def test_series_to_cf_catalan_roundtrip():
    series = cf_to_series(CATALAN_LAMBDAS, 8)
    jf = series_to_cf(series, max_depth=8)
    assert jf.lambdas == (1,) * 8


def test_series_to_cf_constant():
    jf = series_to_cf(FormalSeries([1, 0, 0, 0]))
    assert jf.lambdas == (1,)
    assert jf.terminated


def test_series_to_cf_vanishing_minor():
    with pytest.raises(VanishingHankelMinorError):
        series_to_cf(FormalSeries([1, 0, 1, 0, 1]))


def test_roundtrip_random_lambdas():
    nonzero = [v for v in range(-5, 6) if v != 0]
    for _ in range(25):
        lam = tuple(Fraction(rng.choice(nonzero)) for _ in range(9))
        series = cf_to_series(JFraction(lam), 8)
        back = series_to_cf(series, max_depth=8)
        assert back.lambdas[:8] == lam[:8]


def test_hankel_from_cf_matches_direct_determinants():
    for k in range(0, 9):
        assert hankel_from_cf(CATALAN_LAMBDAS, k) == 1
    assert hankel_from_cf(JFraction((2, 1, 0)), 2) == 4
    seq = cf_to_series(JFraction((2, 1, 0)), 16).coeffs
    assert hankel_det(seq, 2) == 4
    for _ in range(10):
        lam = tuple(Fraction(rng.randint(1, 5)) for _ in range(17))
        seq = cf_to_series(JFraction(lam), 16).coeffs
        for k in range(0, 9):
            assert hankel_from_cf(JFraction(lam), k) == hankel_det(seq, k)


def test_prop_j_h2_small_values():
    assert prop_j_h2(CATALAN_LAMBDAS, 0) == 1
    assert prop_j_h2(CATALAN_LAMBDAS, 1) == 1
    assert prop_j_h2(CATALAN_LAMBDAS, 2) == 2


def test_prop_j_h2_matches_direct_determinants():
    for _ in range(10):
        lam = tuple(Fraction(rng.randint(1, 5)) for _ in range(18))
        seq = cf_to_series(JFraction(lam), 17).coeffs
        for k in range(0, 9):
            assert prop_j_h2(JFraction(lam), k) == hankel_det(seq, k, shift=2)


def test_prop_j_h2_terminating_fraction_error():
    lam = mu_coefficients(1, 6)  # mu_2 = 0
    with pytest.raises(TerminatingFractionError):
        prop_j_h2(JFraction(lam), 2)


def test_prop_j_h2_parity_bridge():
    # H_2(2m+1)/H_2(2m) == H_0(2m+2)/H_0(2m+1)
    for _ in range(10):
        lam = JFraction(tuple(Fraction(rng.randint(1, 6)) for _ in range(16)))
        for m in range(0, 4):
            lhs = prop_j_h2(lam, 2 * m + 1) / prop_j_h2(lam, 2 * m)
            rhs = hankel_from_cf(lam, 2 * m + 2) / hankel_from_cf(lam, 2 * m + 1)
            assert lhs == rhs


def test_interleaved_hankel_factorizes_into_dense_minors():
    # H_{2r}(k) = M_r(ceil(k/2)) * M_{r+1}(floor(k/2))
    for _ in range(20):
        seq = [rng.randint(1, 9) for _ in range(16)]
        for r in range(0, 3):
            for k in range(0, 7):
                lhs = hankel_det(seq, k, shift=2 * r)
                rhs = (hankel_minor_det(seq, (k + 1) // 2, r)
                       * hankel_minor_det(seq, k // 2, r + 1))
                assert lhs == rhs


# -- the odd power-sum fraction ----------------------------------------

def test_mu_coefficients_values():
    assert mu_coefficients(1, 3) == (2, 1, 0)
    assert mu_coefficients(2, 2)[1] == 3  # (1/2) * 3 * 2
    for n in range(1, 8):
        assert mu_coefficients(n, 1)[0] == n * (n + 1)
        assert mu_coefficients(n, 2 * n + 1)[2 * n] == 0  # termination


def test_walz_coefficient_matches_mu():
    for n in (2, 5, Fraction(7, 2)):
        mu = mu_coefficients(n, 9)
        for idx in range(1, 9):
            assert walz_coefficient(idx, n) == mu[idx]


def test_odd_power_sum_series_values():
    assert odd_power_sum_series(1, 5).coeffs == (2,) * 6
    assert odd_power_sum_series(2, 2).coeffs[1] == 18  # 2 (1 + 8)
    assert odd_power_sum_series(3, 1).coeffs[0] == 12  # 2 (1 + 2 + 3)


def test_mu_recovered_from_odd_power_sums():
    for n in range(1, 11):
        jf = series_to_cf(odd_power_sum_series(n, 12), max_depth=12)
        mu = mu_coefficients(n, len(jf.lambdas))
        assert jf.lambdas == mu[:len(jf.lambdas)]
        if n <= 5:
            assert jf.terminated  # mu_{2n} = 0 falls inside 12 terms


def test_sinh_kernel_series_values():
    assert sinh_kernel_series(1, 9) == 2 * FormalSeries.sinh(1, 9)
    assert sinh_kernel_series(0, 9).is_zero
    for n in range(1, 5):
        kernel = sinh_kernel_series(n, 10)
        for j in range(11):
            doubled = 2 * power_sum(n, j) if j % 2 == 1 else 0
            assert kernel.coeffs[j] == Fraction(doubled, factorial(j))


def test_mu_fraction_matches_sinh_kernel():
    for n in (1, 2, 3, Fraction(7, 2)):
        lhs = l_operator(sinh_kernel_series(n, 12))
        assert lhs == mu_fraction_odd_series(n, 12)


# -- hypergeometric layer ----------------------------------------------

def test_hyp2f1_terminating_case():
    z = FormalSeries.x(6)
    assert hyp2f1_series(1, -1, 2, z) == 1 - z / 2


def test_hyp2f1_requires_valuation():
    with pytest.raises(ValueError):
        hyp2f1_series(1, 1, 2, FormalSeries.one(4))


def test_g0_is_one():
    for n in (1, 3, Fraction(7, 2)):
        assert g_k_series(0, n, 10) == FormalSeries.one(10)


def test_g1_sinh_product_identity():
    # g_1 = 2/(n(n+1)) * sinh(nx/2) sinh((n+1)x/2) / sinh(x/2)
    for n in (1, 2, 3, Fraction(7, 2)):
        n = Fraction(n)
        lhs = g_k_series(1, n, 12)
        assert lhs == sinh_kernel_series(n, 12) / (n * (n + 1))


def test_g_recurrence_residual_is_zero():
    for n in (1, 2, Fraction(7, 2)):
        for k in (1, 2, 3):
            assert verify_g_recurrence(k, n, 10).is_zero


def test_g_recurrence_rejects_k0():
    with pytest.raises(ValueError):
        verify_g_recurrence(0, 1, 8)
