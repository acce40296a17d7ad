"""Exact arithmetic kernel: power sums, superfactorials, rising factorials.

Everything here is arbitrary precision (`int` and `fractions.Fraction`);
nothing ever rounds.  These are the scalar building blocks of every
determinant and closed-form count in the package.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

__all__ = [
    "power_sum",
    "power_sum_polynomial",
    "poly_eval",
    "superfactorial",
    "pochhammer",
]


@lru_cache(maxsize=None)
def power_sum(m: int, j: int) -> int:
    """The power sum S(m, j).

    For m > 0 this is 1^j + 2^j + ... + m^j.  S(0, j) = 0 for every j,
    and for m < 0 the reflection

        S(m, j) = (-1)^(j+1) * (0^j + 1^j + ... + (-m-1)^j)

    applies, with 0^0 taken to be 1.  Consequently S(-m, j) =
    (-1)^(j+1) S(m-1, j) for m > 0, and S(-1, j) = 0 for j > 0.
    """
    if j < 0:
        raise ValueError("exponent j must be nonnegative")
    if m == 0:
        return 0
    if m > 0:
        return sum(i ** j for i in range(1, m + 1))
    tail = sum(i ** j for i in range(0, -m))  # 0**0 == 1 in Python
    return tail if j % 2 == 1 else -tail


def _poly_mul(p: list[Fraction], q: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        if pi == 0:
            continue
        for k, qk in enumerate(q):
            out[i + k] += pi * qk
    return out


def power_sum_polynomial(j: int) -> tuple[Fraction, ...]:
    """Coefficients (constant term first) of the polynomial p with
    p(m) = power_sum(m, j) for every integer m >= 0.

    The polynomial has degree j+1 and leading coefficient 1/(j+1); it is
    recovered by Lagrange interpolation through m = 0, 1, ..., j+1.
    """
    if j < 0:
        raise ValueError("exponent j must be nonnegative")
    nodes = list(range(j + 2))
    acc = [Fraction(0)] * (j + 2)
    for i in nodes:
        yi = power_sum(i, j)
        if yi == 0:
            continue
        basis = [Fraction(1)]
        denom = 1
        for l in nodes:
            if l == i:
                continue
            basis = _poly_mul(basis, [Fraction(-l), Fraction(1)])
            denom *= i - l
        scale = Fraction(yi, denom)
        for d, c in enumerate(basis):
            acc[d] += scale * c
    return tuple(acc)


def poly_eval(coeffs: Sequence[Fraction | int], x: Fraction | int) -> Fraction:
    """Evaluate a coefficient list (constant term first) by Horner's rule."""
    out = Fraction(0)
    for c in reversed(coeffs):
        out = out * x + c
    return out


@lru_cache(maxsize=None)
def superfactorial(n: int) -> int:
    """The superfactorial V(n) = 1! 2! ... n!.

    V(0) = V(-1) = 1 (empty products); V(-1) is needed so closed forms
    that divide by V at a boundary parameter degenerate correctly.
    """
    if n < -1:
        raise ValueError("superfactorial is defined only for n >= -1")
    if n <= 0:
        return 1
    return superfactorial(n - 1) * factorial(n)


def pochhammer(a: Fraction | int, j: int) -> Fraction:
    """Rising factorial (a)_j = a (a+1) ... (a+j-1), with (a)_0 = 1."""
    if j < 0:
        raise ValueError("pochhammer length must be nonnegative")
    base = Fraction(a)
    out = Fraction(1)
    for i in range(j):
        out *= base + i
    return out
