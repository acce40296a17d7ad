"""Truncated formal power series over exact rationals, the J-fraction /
Hankel-determinant correspondence, and the hypergeometric series machinery
behind the central-tile recurrences.

A J-fraction is the continued fraction

    lambda_0 / (1 - lambda_1 x / (1 - lambda_2 x / (1 - ...))),

whose expansion a_0 + a_1 x + ... encodes the interleaved Hankel
determinants det(a_{(i+j)/2})_{0<=i,j<k} = lambda_0^k lambda_1^{k-1} ...
lambda_{k-1} (entries 0 at odd i+j).  All series are truncated at an
explicit order and every identity is asserted through that order; there is
no analytic continuation anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

__all__ = [
    "FormalSeries",
    "JFraction",
    "VanishingHankelMinorError",
    "TerminatingFractionError",
    "DEFAULT_ORDER",
    "cf_to_series",
    "series_to_cf",
    "hankel_from_cf",
    "prop_j_h2",
    "mu_coefficients",
    "walz_coefficient",
    "odd_power_sum_series",
    "sinh_kernel_series",
    "mu_fraction_odd_series",
    "l_operator",
    "e_operator",
    "hyp2f1_series",
    "g_k_series",
    "verify_g_recurrence",
]

DEFAULT_ORDER = 16


class VanishingHankelMinorError(ArithmeticError):
    """A zero constant term appeared mid-inversion: some Hankel minor of
    the series vanishes and the J-fraction does not exist in this form."""


class TerminatingFractionError(ArithmeticError):
    """A lambda coefficient needed in a denominator is zero."""


class FormalSeries:
    """Immutable truncated power series with Fraction coefficients.

    The order is len(coeffs) - 1; binary operations truncate to the
    smaller order of the two operands, keeping every retained coefficient
    exact.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int]):
        self.coeffs: tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("series needs at least a constant term")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "FormalSeries":
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> "FormalSeries":
        return cls([1] + [0] * order)

    @classmethod
    def constant(cls, value: Fraction | int, order: int) -> "FormalSeries":
        return cls([value] + [0] * order)

    @classmethod
    def x(cls, order: int) -> "FormalSeries":
        if order < 1:
            raise ValueError("order must be >= 1 for the series x")
        return cls([0, 1] + [0] * (order - 1))

    @classmethod
    def exp(cls, rate: Fraction | int, order: int) -> "FormalSeries":
        """Series of e^(rate * x)."""
        rate = Fraction(rate)
        return cls([rate ** i / factorial(i) for i in range(order + 1)])

    @classmethod
    def sinh(cls, rate: Fraction | int, order: int) -> "FormalSeries":
        """Series of sinh(rate * x)."""
        rate = Fraction(rate)
        return cls([rate ** i / factorial(i) if i % 2 == 1 else Fraction(0)
                    for i in range(order + 1)])

    # -- basic properties ---------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient; None for the zero series."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"FormalSeries({list(self.coeffs)!r})"

    def truncate(self, order: int) -> "FormalSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return FormalSeries(self.coeffs[:order + 1])

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "FormalSeries":
        if isinstance(other, (int, Fraction)):
            coeffs = list(self.coeffs)
            coeffs[0] += other
            return FormalSeries(coeffs)
        order = min(self.order, other.order)
        return FormalSeries([self.coeffs[i] + other.coeffs[i]
                             for i in range(order + 1)])

    __radd__ = __add__

    def __neg__(self) -> "FormalSeries":
        return FormalSeries([-c for c in self.coeffs])

    def __sub__(self, other) -> "FormalSeries":
        return self + (-other if isinstance(other, FormalSeries) else -Fraction(other))

    def __rsub__(self, other) -> "FormalSeries":
        return (-self) + other

    def __mul__(self, other) -> "FormalSeries":
        if isinstance(other, (int, Fraction)):
            return FormalSeries([c * other for c in self.coeffs])
        order = min(self.order, other.order)
        out = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self.coeffs[:order + 1]):
            if a == 0:
                continue
            for j in range(order + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return FormalSeries(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "FormalSeries":
        if exponent < 0:
            raise ValueError("negative powers not supported; divide instead")
        result = FormalSeries.one(self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __truediv__(self, other) -> "FormalSeries":
        if isinstance(other, (int, Fraction)):
            inv = Fraction(1, 1) / Fraction(other)
            return self * inv
        val = other.valuation()
        if val is None:
            raise ZeroDivisionError("division by the zero series")
        if self.is_zero:
            return FormalSeries.zero(min(self.order, other.order))
        if val > 0:
            my_val = self.valuation()
            if my_val is None or my_val < val:
                raise ValueError("quotient is not a power series "
                                 f"(valuations {my_val} < {val})")
            return self.shift_down(val) / other.shift_down(val)
        order = min(self.order, other.order)
        b0 = other.coeffs[0]
        out = [Fraction(0)] * (order + 1)
        for m in range(order + 1):
            acc = self.coeffs[m]
            for k in range(1, m + 1):
                acc -= other.coeffs[k] * out[m - k]
            out[m] = acc / b0
        return FormalSeries(out)

    def __rtruediv__(self, other) -> "FormalSeries":
        return FormalSeries.constant(other, self.order) / self

    def shift_down(self, amount: int) -> "FormalSeries":
        """Divide by x^amount; requires the low coefficients to vanish."""
        if amount == 0:
            return self
        if any(c != 0 for c in self.coeffs[:amount]):
            raise ValueError(f"series not divisible by x^{amount}")
        if amount > self.order:
            raise ValueError("shift exceeds truncation order")
        return FormalSeries(self.coeffs[amount:])

    def differentiate(self) -> "FormalSeries":
        if self.order == 0:
            return FormalSeries.zero(0)
        return FormalSeries([i * self.coeffs[i] for i in range(1, self.order + 1)])

    def compose(self, inner: "FormalSeries") -> "FormalSeries":
        """Substitute ``inner`` (valuation >= 1) for x, by Horner.

        The result is truncated to the order both operands support: a
        missing outer coefficient a_t would first matter at order t.
        """
        if inner.coeffs[0] != 0:
            raise ValueError("composition needs an inner series with no constant term")
        top = min(self.order, inner.order)
        result = FormalSeries.constant(self.coeffs[top], inner.order)
        for i in range(top - 1, -1, -1):
            result = result * inner + self.coeffs[i]
        return result if top == inner.order else result.truncate(top)


def l_operator(series: FormalSeries) -> FormalSeries:
    """Coefficient reweighting sum u_i x^i/i! -> sum u_i x^i."""
    return FormalSeries([c * factorial(i) for i, c in enumerate(series.coeffs)])


def e_operator(series: FormalSeries) -> FormalSeries:
    """Inverse of l_operator: sum a_i x^i -> sum a_i x^i/i!."""
    return FormalSeries([c / factorial(i) for i, c in enumerate(series.coeffs)])


@dataclass(frozen=True)
class JFraction:
    """Coefficients lambda_0, lambda_1, ... of a J-fraction; ``terminated``
    means the fraction ends there (all later coefficients are 0)."""
    lambdas: tuple[Fraction, ...]
    terminated: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lambdas",
                           tuple(Fraction(c) for c in self.lambdas))

    def coefficient(self, index: int) -> Fraction:
        if index < len(self.lambdas):
            return self.lambdas[index]
        if self.terminated:
            return Fraction(0)
        raise ValueError(f"lambda_{index} not available (depth {len(self.lambdas)}, "
                         "fraction not terminated)")


def _as_jfraction(value: JFraction | Sequence[Fraction | int]) -> JFraction:
    if isinstance(value, JFraction):
        return value
    return JFraction(tuple(value))


def cf_to_series(jf: JFraction | Sequence[Fraction | int], order: int) -> FormalSeries:
    """Expand a J-fraction through the given order.

    Terminating fractions expand as rational functions; a zero lambda_k
    simply cuts off all deeper levels.
    """
    jf = _as_jfraction(jf)
    if not jf.lambdas or jf.lambdas[0] == 0:
        raise ValueError("lambda_0 must be nonzero")
    # a zero lambda cuts off every deeper level, so a list containing one
    # determines the expansion to all orders
    cut_off = jf.terminated or any(l == 0 for l in jf.lambdas[1:])
    if not cut_off and len(jf.lambdas) < order + 1:
        raise ValueError(
            f"need lambda through index {order} (got {len(jf.lambdas)}) "
            "or a terminated fraction")
    depth = min(len(jf.lambdas) - 1, order)
    x = FormalSeries.x(order) if order >= 1 else None
    tail = FormalSeries.zero(order)
    for k in range(depth, 0, -1):
        lam = jf.lambdas[k]
        if lam == 0:
            tail = FormalSeries.zero(order)
            continue
        tail = (x * lam) / (1 - tail)
    return FormalSeries.constant(jf.lambdas[0], order) / (1 - tail)


def series_to_cf(series: FormalSeries, max_depth: int = 8) -> JFraction:
    """Invert cf_to_series: recover lambda coefficients from a series.

    Each recursion level consumes one order of truncation, so a series of
    order N yields at most N+1 coefficients.  Termination is reported when
    a remainder vanishes identically within the available order.  A zero
    constant term in a nonzero remainder signals a vanishing Hankel minor
    and raises rather than guessing.
    """
    lambdas: list[Fraction] = []
    cur = series
    for _ in range(max_depth):
        if cur.is_zero:
            return JFraction(tuple(lambdas), terminated=True)
        c = cur.coeffs[0]
        if c == 0:
            raise VanishingHankelMinorError(
                f"zero constant term at depth {len(lambdas)}: a Hankel minor "
                "of the series vanishes")
        lambdas.append(c)
        if cur.order == 0:
            break
        tail = 1 - FormalSeries.constant(c, cur.order) / cur
        cur = tail.shift_down(1)
    return JFraction(tuple(lambdas), terminated=False)


def hankel_from_cf(jf: JFraction | Sequence[Fraction | int], size: int) -> Fraction:
    """lambda_0^k lambda_1^{k-1} ... lambda_{k-1}: the interleaved Hankel
    determinant of the fraction's expansion (1 for k = 0)."""
    jf = _as_jfraction(jf)
    out = Fraction(1)
    for i in range(size):
        out *= jf.coefficient(i) ** (size - i)
    return out


def prop_j_h2(jf: JFraction | Sequence[Fraction | int], size: int) -> Fraction:
    """H_2(k) from the lambda coefficients:

        H_2(k) = lambda_0^{-1} H_0(k+1) * sum_{j=0}^{floor(k/2)}
                 prod_{i=1}^{j} lambda_{2i-1}/lambda_{2i},

    with H_0(k+1) the lambda product.  A zero even-indexed lambda inside
    the sum means the fraction terminates and the formula's ratios are
    undefined; use a direct Hankel determinant in that case.
    """
    jf = _as_jfraction(jf)
    if jf.coefficient(0) == 0:
        raise ValueError("lambda_0 must be nonzero")
    h0 = Fraction(1)
    for i in range(size + 1):
        h0 *= jf.coefficient(i) ** (size + 1 - i)
    total = Fraction(0)
    ratio = Fraction(1)
    for j in range(size // 2 + 1):
        if j > 0:
            denom = jf.coefficient(2 * j)
            if denom == 0:
                raise TerminatingFractionError(
                    "terminating fraction; use direct Hankel determinant")
            ratio *= jf.coefficient(2 * j - 1) / denom
        total += ratio
    return h0 / jf.coefficient(0) * total


def walz_coefficient(index: int, n: Fraction | int) -> Fraction:
    """The coefficient c_index (= mu_index for index >= 1) of the
    odd-power-sum continued fraction:

        c_{2i}   = i/(4i+2) * (n+i+1)(n-i)
        c_{2i+1} = (i+1)/(4i+2) * (n+i+1)(n-i).
    """
    if index < 1:
        raise ValueError("defined for index >= 1")
    n = Fraction(n)
    if index % 2 == 0:
        i = index // 2
        return Fraction(i, 4 * i + 2) * (n + i + 1) * (n - i)
    i = (index - 1) // 2
    return Fraction(i + 1, 4 * i + 2) * (n + i + 1) * (n - i)


def mu_coefficients(n: Fraction | int, count: int) -> tuple[Fraction, ...]:
    """mu_0 = n(n+1) followed by walz_coefficient(1), ..., for ``count``
    coefficients in total.  For integer n >= 1 the coefficient mu_{2n}
    vanishes: the fraction terminates."""
    if count < 1:
        raise ValueError("count must be >= 1")
    n = Fraction(n)
    out = [n * (n + 1)]
    out.extend(walz_coefficient(i, n) for i in range(1, count))
    return tuple(out)


def odd_power_sum_series(n: int, order: int = DEFAULT_ORDER) -> FormalSeries:
    """The series whose coefficient of x^i is 2 S(n, 2i+1)."""
    from .exactnum import power_sum
    if n < 1:
        raise ValueError("n must be >= 1")
    return FormalSeries([2 * power_sum(n, 2 * i + 1) for i in range(order + 1)])


def sinh_kernel_series(n: Fraction | int, order: int = DEFAULT_ORDER) -> FormalSeries:
    """Series of 2 sinh(n x/2) sinh((n+1) x/2) / sinh(x/2).

    For integer n the coefficient of x^j/j! is (1 + (-1)^(j-1)) S(n, j),
    i.e. twice the odd-j power sums; n may be any rational.
    """
    n = Fraction(n)
    work = order + 1  # one extra order: the denominator has valuation 1
    numerator = 2 * FormalSeries.sinh(n / 2, work) * FormalSeries.sinh((n + 1) / 2, work)
    if numerator.is_zero:
        return FormalSeries.zero(order)
    quotient = numerator / FormalSeries.sinh(Fraction(1, 2), work)
    return quotient.truncate(order)


def mu_fraction_odd_series(n: Fraction | int, order: int = DEFAULT_ORDER) -> FormalSeries:
    """Odd-coefficient expansion of the mu continued fraction:

        x * [mu_0 / (1 - mu_1 x^2 / (1 - mu_2 x^2 / ...))]

    with mu_0 = n(n+1).  For integer n this is sum_i 2 S(n, 2i+1) x^{2i+1};
    for any rational n it matches l_operator(sinh_kernel_series(n)) through
    the truncation order.
    """
    inner_order = max((order - 1) // 2, 0)
    lam = mu_coefficients(n, inner_order + 1)
    if lam[0] == 0:
        return FormalSeries.zero(order)
    inner = cf_to_series(JFraction(lam), inner_order)
    coeffs = [Fraction(0)] * (order + 1)
    for i, c in enumerate(inner.coeffs):
        if 2 * i + 1 <= order:
            coeffs[2 * i + 1] = c
    return FormalSeries(coeffs)


def hyp2f1_series(a: Fraction | int, b: Fraction | int, c: Fraction | int,
                  argument: FormalSeries) -> FormalSeries:
    """Gauss hypergeometric series 2F1(a, b; c; z) composed with a series
    argument of valuation >= 1, truncated at the argument's order:

        sum_t (a)_t (b)_t / (t! (c)_t) z^t.
    """
    if argument.coeffs[0] != 0:
        raise ValueError("argument must have zero constant term")
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    order = argument.order
    coeffs = [Fraction(1)]
    term = Fraction(1)
    for t in range(1, order + 1):
        den = t * (c + t - 1)
        if den == 0:
            if term == 0:
                break  # terminated before the bad denominator
            raise ValueError(f"2F1 undefined: c = {c} hits a nonpositive integer")
        term *= (a + t - 1) * (b + t - 1) / den
        coeffs.append(term)
    return FormalSeries(coeffs).compose(argument)


def g_k_series(k: int, n: Fraction | int, order: int = DEFAULT_ORDER) -> FormalSeries:
    """The k-th member of the hypergeometric solution family

        g_k = (e^x - 1)^k / k! * e^{-n x}
              * 2F1(floor((k+1)/2), floor((k+1)/2) - n; k+1; 1 - e^x)
              * 2F1(floor(k/2) + 1,  floor(k/2) - n;   k+1; 1 - e^x),

    satisfying g_k' - g_{k-1} = c_k g_{k+1} with the walz coefficients.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    n = Fraction(n)
    ex = FormalSeries.exp(1, order)
    z = 1 - ex  # valuation 1
    half_hi = (k + 1) // 2
    half_lo = k // 2
    f1 = hyp2f1_series(half_hi, half_hi - n, k + 1, z)
    f2 = hyp2f1_series(half_lo + 1, half_lo - n, k + 1, z)
    return (ex - 1) ** k / factorial(k) * FormalSeries.exp(-n, order) * f1 * f2


def verify_g_recurrence(k: int, n: Fraction | int, order: int = DEFAULT_ORDER) -> FormalSeries:
    """Residual dg_k/dx - g_{k-1} - c_k g_{k+1}, truncated at order-1;
    the zero series when the solution family satisfies its recurrence."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = Fraction(n)
    g_k = g_k_series(k, n, order)
    g_prev = g_k_series(k - 1, n, order)
    g_next = g_k_series(k + 1, n, order)
    c_k = walz_coefficient(k, n)
    return (g_k.differentiate()
            - g_prev.truncate(order - 1)
            - (g_next * c_k).truncate(order - 1))
