"""Closed-form and determinant-form tiling counts, with cross-checking
against the brute-force oracle.

Every public operation returns an exact integer and refuses to round: a
determinant pipeline that produces a non-integer (after dividing out its
superfactorial prefactor) aborts with diagnostics instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactnum import pochhammer, power_sum, superfactorial
from .lingebra import det_exact
from .regions import (
    DefectSpec,
    DentedAztecRectangle,
    DentedSemiHexagon,
    HexagonSpec,
    UndentedAztecRectangle,
    build_aztec_region,
    build_hexagon_region,
    build_semihexagon_region,
    complement_indices,
)
from . import oracle as _oracle

__all__ = [
    "NonIntegralCountError",
    "CountResult",
    "CrossCheckResult",
    "WZPair",
    "semihex_dented_count",
    "aztec_dented_count",
    "hexagon_count_kqk",
    "crossing_restricted_count",
    "central_triangle_removed_det",
    "central_triangle_removed_closed",
    "central_lozenge_det",
    "central_lozenge_closed",
    "prop_det_closed",
    "wz_term",
    "wz_q",
    "wz_u",
    "wz_pair",
    "wz_sum",
    "wz_certificate_residual",
    "aztec_missing_squares_count",
    "problem10_closed",
    "cross_check",
    "CROSS_CHECK_INSTANCES",
]


class NonIntegralCountError(ArithmeticError):
    """A counting pipeline produced something other than a nonnegative
    integer; the inputs are echoed for diagnosis."""


def _exact_int(value: Fraction | int, label: str) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise NonIntegralCountError(f"{label}: non-integral value {value}")
    if value < 0:
        raise NonIntegralCountError(f"{label}: negative value {value}")
    return int(value)


def _pair_product(values: Sequence[int]) -> int:
    out = 1
    for j in range(len(values)):
        for i in range(j):
            out *= values[j] - values[i]
    return out


# ---------------------------------------------------------------------------
# Dent formulas
# ---------------------------------------------------------------------------

def semihex_dented_count(k: int, q: int, dents: Iterable[int]) -> int:
    """Number of tilings of a (k, q, k) semi-hexagon with dents at the
    given k positions:  prod_{i<j} (r_j - r_i) / V(k-1).

    Depends only on the differences between the dent positions.
    """
    spec = DentedSemiHexagon(k, q, tuple(dents))  # validates
    return _exact_int(Fraction(_pair_product(spec.dents), superfactorial(k - 1)),
                      f"semihex_dented_count(k={k}, q={q}, dents={spec.dents})")


def aztec_dented_count(a: int, b: int, dents: Iterable[int]) -> int:
    """Number of tilings of an a x b dented Aztec rectangle:

        2^(b(b-1)/2) / V(b-1) * prod_{i<j} (r_j - r_i).

    Dents may repeat (nondecreasing), in which case the count is 0.
    """
    dents = tuple(dents)
    if len(dents) != b:
        raise ValueError(f"expected exactly {b} dents, got {len(dents)}")
    if any(r2 < r1 for r1, r2 in zip(dents, dents[1:])):
        raise ValueError("dents must be nondecreasing")
    if dents and (dents[0] < 0 or dents[-1] > a):
        raise ValueError(f"dents must lie in [0, {a}]")
    value = Fraction(2 ** (b * (b - 1) // 2) * _pair_product(dents),
                     superfactorial(b - 1))
    return _exact_int(value, f"aztec_dented_count(a={a}, b={b}, dents={dents})")


# ---------------------------------------------------------------------------
# Hexagon counts
# ---------------------------------------------------------------------------

def hexagon_count_kqk(k: int, q: int) -> int:
    """Total number of lozenge tilings of a (k, q, k) hexagon:

        V(2k+q-1) V(q-1) V(k-1)^2 / (V(k+q-1)^2 V(2k-1)).
    """
    if k < 1 or q < 0:
        raise ValueError("requires k >= 1 and q >= 0")
    value = Fraction(
        superfactorial(2 * k + q - 1) * superfactorial(q - 1)
        * superfactorial(k - 1) ** 2,
        superfactorial(k + q - 1) ** 2 * superfactorial(2 * k - 1))
    return _exact_int(value, f"hexagon_count_kqk({k}, {q})")


def crossing_restricted_count(k: int, q: int, allowed: Iterable[int]) -> int:
    """Number of tilings of a (k, q, k) hexagon whose vertical lozenges
    cross the q+k-long symmetry axis only at indices in ``allowed``:

        det( sum_{l in L} l^(i+j) )_{0<=i,j<k} / V(k-1)^2.

    Invariant under shifting all of L by a constant.
    """
    allowed = sorted(set(allowed))
    if k < 1 or q < 0:
        raise ValueError("requires k >= 1 and q >= 0")
    if allowed and (allowed[0] < 0 or allowed[-1] >= k + q):
        raise ValueError(f"crossing indices must lie in [0, {k + q})")
    matrix = [[sum(l ** (i + j) for l in allowed) for j in range(k)]
              for i in range(k)]
    value = Fraction(det_exact(matrix), superfactorial(k - 1) ** 2)
    return _exact_int(value, f"crossing_restricted_count({k}, {q}, {allowed})")


def central_triangle_removed_det(k: int, n: int) -> int:
    """Determinant form for the tilings of a (k, 2n+1-k, k, k+1, 2n-k, k+1)
    hexagon with the triangle below the center of the dividing line removed:

        det( (1 + (-1)^(i+j)) S(n, i+j+1) )_{0<=i,j<k} / (V(k-1) V(k)).
    """
    if not (1 <= k <= 2 * n):
        raise ValueError("requires 1 <= k <= 2n")
    matrix = [[(2 if (i + j) % 2 == 0 else 0) * power_sum(n, i + j + 1)
               for j in range(k)] for i in range(k)]
    value = Fraction(det_exact(matrix),
                     superfactorial(k - 1) * superfactorial(k))
    return _exact_int(value, f"central_triangle_removed_det({k}, {n})")


def central_triangle_removed_closed(k: int, n: int) -> int:
    """Closed form for the same count, split by the parity of k.

    For k = 2q+1:
        (n-q)^1 (n-q+1)^5 ... n^(4q+1) (n+1)^(4q+1) ... (n+q+1)^1
        / ( 2^(2q(2q+1)) 3^(8(q-1)+2) 5^(8(q-2)+2) ... (2q+1)^2 )

    and for k = 2q:
        (n-q+1)^3 ... n^(4q-1) (n+1)^(4q-1) ... (n+q)^3
        / ( 2^((2q-1)2q) 3^(8(q-1)-2) 5^(8(q-2)-2) ... (2q-1)^6 ).
    """
    if not (1 <= k <= 2 * n):
        raise ValueError("requires 1 <= k <= 2n")
    num = 1
    den = 1
    if k % 2 == 1:
        q = (k - 1) // 2
        for i in range(q + 1):
            num *= (n - q + i) ** (4 * i + 1)
            num *= (n + 1 + i) ** (4 * (q - i) + 1)
        den *= 2 ** (2 * q * (2 * q + 1))
        for i in range(1, q + 1):
            den *= (2 * i + 1) ** (8 * (q - i) + 2)
    else:
        q = k // 2
        for i in range(1, q + 1):
            num *= (n - q + i) ** (4 * i - 1)
            num *= (n + i) ** (4 * (q - i) + 3)
        den *= 2 ** ((2 * q - 1) * 2 * q)
        for i in range(1, q):
            den *= (2 * i + 1) ** (8 * (q - i) - 2)
    return _exact_int(Fraction(num, den),
                      f"central_triangle_removed_closed({k}, {n})")


def _parity_matrix_det(p: int, lo: int, hi: int) -> int:
    """det( (1 + (-1)^(i+j)) S(p, i+j) ) over the index range lo..hi."""
    size = hi - lo + 1
    if size <= 0:
        return 1
    matrix = [[(2 if (i + j) % 2 == 0 else 0) * power_sum(p, i + j)
               for j in range(lo, hi + 1)] for i in range(lo, hi + 1)]
    return det_exact(matrix)


def central_lozenge_det(m: int, n: int, parity: str = "odd") -> int:
    """Determinant form for the tilings with a vertical lozenge at the
    center: for parity "odd" the (2m-1, 2n, 2m-1) hexagon,

        det( (1+(-1)^(i+j)) S(m+n-1, i+j) )_{1<=i,j<=2m-2} / V(2m-2)^2,

    and for parity "even" the (2m, 2n-1, 2m) hexagon with index range
    1..2m-1 and prefactor 1/V(2m-1)^2.  Empty index ranges (m = 1, odd)
    give determinant 1.
    """
    if m < 1 or n < 1:
        raise ValueError("requires m >= 1 and n >= 1")
    p = m + n - 1
    if parity == "odd":
        det = _parity_matrix_det(p, 1, 2 * m - 2)
        denom = superfactorial(2 * m - 2) ** 2
    elif parity == "even":
        det = _parity_matrix_det(p, 1, 2 * m - 1)
        denom = superfactorial(2 * m - 1) ** 2
    else:
        raise ValueError("parity must be 'odd' or 'even'")
    return _exact_int(Fraction(det, denom),
                      f"central_lozenge_det({m}, {n}, {parity})")


def _pochhammer_ratio_sum(p: Fraction | int, last: int) -> Fraction:
    """sum_{j=0}^{last} of the balanced Pochhammer ratio

        (1/2)_j^2 (5/4)_j (-p)_j (p+1)_j
        --------------------------------
        (1)_j^2 (1/4)_j (3/2+p)_j (1/2-p)_j

    evaluated with incremental term updates (no factorial recomputation).
    """
    p = Fraction(p)
    total = Fraction(0)
    term = Fraction(1)
    for j in range(last + 1):
        if j > 0:
            t = j - 1
            term *= (Fraction(1, 2) + t) ** 2 * (Fraction(5, 4) + t) \
                * (-p + t) * (p + 1 + t)
            term /= (Fraction(1) + t) ** 2 * (Fraction(1, 4) + t) \
                * (Fraction(3, 2) + p + t) * (Fraction(1, 2) - p + t)
        total += term
    return total


def central_lozenge_closed(m: int, n: int, parity: str = "odd") -> int:
    """Closed form for the central-lozenge counts: a superfactorial
    prefactor times the partial hypergeometric sum

        sum_{j=0}^{m-1} (1/2)_j^2 (5/4)_j (1-m-n)_j (m+n)_j /
                        ((1)_j^2 (1/4)_j (1/2+m+n)_j (3/2-m-n)_j).
    """
    if m < 1 or n < 1:
        raise ValueError("requires m >= 1 and n >= 1")
    total = _pochhammer_ratio_sum(m + n - 1, m - 1)
    if parity == "odd":
        pref = Fraction(
            superfactorial(4 * m + 2 * n - 3) * superfactorial(2 * n - 1)
            * superfactorial(2 * m - 2) ** 2,
            (2 * m + 2 * n - 1) * superfactorial(2 * m + 2 * n - 2) ** 2
            * superfactorial(4 * m - 3))
    elif parity == "even":
        pref = Fraction(
            superfactorial(4 * m + 2 * n - 2) * superfactorial(2 * n - 2)
            * superfactorial(2 * m - 1) ** 2,
            (2 * m + 2 * n - 1) * superfactorial(2 * m + 2 * n - 2) ** 2
            * superfactorial(4 * m - 1))
    else:
        raise ValueError("parity must be 'odd' or 'even'")
    return _exact_int(pref * total, f"central_lozenge_closed({m}, {n}, {parity})")


def prop_det_closed(p: int, k: int) -> int:
    """Closed form for det( (1+(-1)^(i+j)) S(p, i+j) )_{1<=i,j<=k}:

        1/(2p+1) * V(2p+k+1) V(2p-k-1) V(k)^4 / (V(2p)^2 V(2k+1))
                 * sum_{j=0}^{floor(k/2)} [Pochhammer ratio as above].
    """
    if p < 1 or k < 0:
        raise ValueError("requires p >= 1 and k >= 0")
    if k > 2 * p:
        raise ValueError("closed form requires k <= 2p")
    pref = Fraction(
        superfactorial(2 * p + k + 1) * superfactorial(2 * p - k - 1)
        * superfactorial(k) ** 4,
        (2 * p + 1) * superfactorial(2 * p) ** 2 * superfactorial(2 * k + 1))
    return _exact_int(pref * _pochhammer_ratio_sum(p, k // 2),
                      f"prop_det_closed({p}, {k})")


# ---------------------------------------------------------------------------
# The WZ certificate layer
# ---------------------------------------------------------------------------

def wz_term(p: Fraction | int, i: int) -> Fraction:
    """Single Pochhammer-ratio summand (the j = i term of the partial sum)."""
    p = Fraction(p)
    num = (pochhammer(Fraction(1, 2), i) ** 2 * pochhammer(Fraction(5, 4), i)
           * pochhammer(-p, i) * pochhammer(p + 1, i))
    den = (pochhammer(1, i) ** 2 * pochhammer(Fraction(1, 4), i)
           * pochhammer(Fraction(3, 2) + p, i) * pochhammer(Fraction(1, 2) - p, i))
    return num / den


def wz_q(n: int, i: int) -> Fraction:
    """Q(n, i): the normalized summand with sum_{i=0}^{n-1} Q(n, i) = 1/3."""
    if n < 1 or i < 0:
        raise ValueError("requires n >= 1 and i >= 0")
    return wz_term(2 * n - 1, i) / (4 * n - 1)


def wz_u(n: int, i: int) -> Fraction:
    """The WZ certificate

        U(n, i) = i^2 (2i+1-4n)(1+4n)(8n^2+4n-2i^2+i+1)
                  / ((4i+1)(2i+1+4n)(i-2n)(i-1-2n)(2n+1)n) * Q(n, i),

    satisfying U(n, i+1) - U(n, i) = Q(n+1, i) - Q(n, i), U(n, 0) = 0 and
    Q(n+1, n) + U(n, n) = 0.
    """
    if n < 1 or i < 0:
        raise ValueError("requires n >= 1 and i >= 0")
    num = i * i * (2 * i + 1 - 4 * n) * (1 + 4 * n) \
        * (8 * n * n + 4 * n - 2 * i * i + i + 1)
    den = (4 * i + 1) * (2 * i + 1 + 4 * n) * (i - 2 * n) * (i - 1 - 2 * n) \
        * (2 * n + 1) * n
    return Fraction(num, den) * wz_q(n, i)


@dataclass(frozen=True)
class WZPair:
    n: int
    i: int
    q: Fraction
    u: Fraction


def wz_pair(n: int, i: int) -> WZPair:
    return WZPair(n, i, wz_q(n, i), wz_u(n, i))


def wz_sum(n: int) -> Fraction:
    """The partial hypergeometric sum at the one-third special case; equals
    (4n-1)/3 for every n >= 1."""
    if n < 1:
        raise ValueError("requires n >= 1")
    return _pochhammer_ratio_sum(2 * n - 1, n - 1)


def wz_certificate_residual(n: int, i: int) -> Fraction:
    """U(n, i+1) - U(n, i) - Q(n+1, i) + Q(n, i); identically zero."""
    if not 0 <= i <= n - 1:
        raise ValueError("requires 0 <= i <= n-1")
    return wz_u(n, i + 1) - wz_u(n, i) - wz_q(n + 1, i) + wz_q(n, i)


# ---------------------------------------------------------------------------
# Aztec rectangles with missing squares
# ---------------------------------------------------------------------------

def aztec_missing_squares_count(a: int, b: int, removed: Iterable[int]) -> int:
    """Number of tilings of an a x b undented Aztec rectangle
    (a < b <= 2a+1) with the squares at the given b-a indices removed from
    its length-(a+1) central diagonal (through the central square for odd
    b, touching it for even b).

    With t the sorted complement of the removed indices in {0..a}:

      b = 2k+1:  2^(k^2+a) / V(k)^2 * [prod_(i<j in removed) (r_j - r_i)]^2
                 * prod |t_i - r_j| * det(t_{2i}^j) det(t_{2i+1}^j),
                 both determinants of size a-k;

      b = 2k:    2^(k^2-k+a) / (V(k-1) V(k)) * the same products
                 * det(t_{2i}^j) det(t_{2i+1}^j) of sizes a-k+1 and a-k.

    The removed-index pair product is squared because both dented
    half-rectangles of the diagonal decomposition carry every removed
    square as a dent; with a single removed square (the Problem 10 case)
    the product is empty either way.
    """
    removed = tuple(removed)
    if not a < b <= 2 * a + 1:
        raise ValueError("requires a < b <= 2a+1")
    if len(removed) != b - a:
        raise ValueError(f"expected {b - a} removed indices, got {len(removed)}")
    if any(r2 <= r1 for r1, r2 in zip(removed, removed[1:])):
        raise ValueError("removed indices must be strictly increasing")
    t = complement_indices(a, removed)

    cross = 1
    for ti in t:
        for rj in removed:
            cross *= abs(ti - rj)

    t_even = t[0::2]
    t_odd = t[1::2]
    d_even = det_exact([[ti ** j for j in range(len(t_even))] for ti in t_even])
    d_odd = det_exact([[ti ** j for j in range(len(t_odd))] for ti in t_odd])

    if b % 2 == 1:
        k = (b - 1) // 2
        pref = Fraction(2 ** (k * k + a), superfactorial(k) ** 2)
    else:
        k = b // 2
        pref = Fraction(2 ** (k * k - k + a),
                        superfactorial(k - 1) * superfactorial(k))
    value = pref * _pair_product(removed) ** 2 * cross * d_even * d_odd
    return _exact_int(value, f"aztec_missing_squares_count({a}, {b}, {removed})")


def _p10_even_positions_closed(k: int) -> int:
    """Closed product for prod_{j0<j1} (t_{2j1} - t_{2j0}) with
    t = {0..2k-1} minus {k-1} (the Problem-10 complement set)."""
    out = 1
    if k % 2 == 0:
        q = k // 2
        for i in range(1, q):
            out *= (2 * i) ** (2 * (q - i))        # squared even ramp
            out *= (2 * i + 1) ** i                # rising odd ramp
            out *= (2 * q + 1 + 2 * i) ** (q - i)  # falling odd ramp
        out *= (2 * q + 1) ** q
    else:
        q = (k - 1) // 2
        for i in range(1, q):
            out *= (2 * i) ** (q - i)
            out *= (2 * i + 1) ** i
        for i in range(1, q + 1):
            out *= (2 * i) ** (q + 1 - i)
            out *= (2 * q + 1 + 2 * i) ** (q - i + 1)
        out *= (2 * q + 1) ** q
    return out


def _p10_odd_positions_closed(k: int) -> int:
    """Closed product for prod_{j0<j1} (t_{2j1+1} - t_{2j0+1}) on the same
    complement set."""
    out = 1
    if k % 2 == 0:
        q = k // 2
        for i in range(1, q - 1):
            out *= (2 * i) ** (q - 1 - i)
        for i in range(1, q):
            out *= (2 * i) ** (q - i)
            out *= (2 * i + 1) ** i
        for i in range(q - 1):
            out *= (2 * q + 1 + 2 * i) ** (q - 1 - i)
    else:
        q = (k - 1) // 2
        for i in range(1, q):
            out *= (2 * i) ** (2 * (q - i))
            out *= (2 * i + 1) ** i
            out *= (2 * q + 1 + 2 * i) ** (q - i)
        out *= (2 * q + 1) ** q
    return out


def problem10_closed(k: int) -> int:
    """Closed form for the number of domino tilings of a (2k-1) x 2k
    undented Aztec rectangle with the square adjoining the central square
    removed (the a = 2k-1, b = 2k, r_0 = k-1 missing-squares instance):

      k = 2q:    2^(k^2+k-1) / (V(2q-2) V(2q-1))
                 * 2^(4q-5) 4^(4q-9) ... (2q-2)^3
                 * 3^2 5^4 ... (2q-1)^(2q-2) (2q+1)^(2q-1)
                   (2q+3)^(2q-3) ... (4q-3)^3 (4q-1);

      k = 2q+1:  2^(k^2+k-1) / (V(2q-1) V(2q))
                 * 2^(4q-3) 4^(4q-7) ... (2q-2)^5 (2q)
                 * 3^2 5^4 ... (2q-1)^(2q-2) (2q+1)^(2q)
                   (2q+3)^(2q-1) ... (4q-1)^3 (4q+1).
    """
    if k < 1:
        raise ValueError("requires k >= 1")
    num = 2 ** (k * k + k - 1)
    if k % 2 == 0:
        q = k // 2
        for i in range(1, q):
            num *= (2 * i) ** (4 * (q - i) - 1)
            num *= (2 * i + 1) ** (2 * i)
            num *= (2 * q + 1 + 2 * i) ** (2 * (q - i) - 1)
        num *= (2 * q + 1) ** (2 * q - 1)
    else:
        q = (k - 1) // 2
        for i in range(1, q + 1):
            num *= (2 * i) ** (4 * (q - i) + 1)
            num *= (2 * q + 1 + 2 * i) ** (2 * (q - i) + 1)
        for i in range(1, q):
            num *= (2 * i + 1) ** (2 * i)
        num *= (2 * q + 1) ** (2 * q)
    den = superfactorial(k - 2) * superfactorial(k - 1)
    return _exact_int(Fraction(num, den), f"problem10_closed({k})")


# ---------------------------------------------------------------------------
# Cross-checking
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CountResult:
    value: int
    method: str  # "closed-form" | "determinant" | "oracle"
    instance: str
    params: tuple[tuple[str, object], ...]


@dataclass(frozen=True)
class CrossCheckResult:
    instance: str
    params: tuple[tuple[str, object], ...]
    results: tuple[CountResult, ...]
    agree: bool
    oracle_skipped: bool = False
    ratio: Fraction | None = None  # defect count / total count, when meaningful

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(r.value for r in self.results)


def _problem_legs(instance: str, params: dict):
    """(closed, determinant-or-None, oracle-region-builder, ratio-total)."""
    if instance == "problem1":
        n = params["n"]
        return (
            lambda: central_lozenge_closed(n, n, "odd"),
            lambda: central_lozenge_det(n, n, "odd"),
            lambda: build_hexagon_region(HexagonSpec.kqk(2 * n - 1, 2 * n),
                                         DefectSpec.central_lozenge_forced()),
            lambda: hexagon_count_kqk(2 * n - 1, 2 * n),
        )
    if instance == "notri":
        k, n = params["k"], params["n"]
        spec = HexagonSpec(k, 2 * n + 1 - k, k, k + 1, 2 * n - k, k + 1)
        return (
            lambda: central_triangle_removed_closed(k, n),
            lambda: central_triangle_removed_det(k, n),
            lambda: build_hexagon_region(spec, DefectSpec.central_triangle_removed()),
            None,
        )
    if instance == "problem10":
        k = params["k"]
        return (
            lambda: problem10_closed(k),
            lambda: aztec_missing_squares_count(2 * k - 1, 2 * k, (k - 1,)),
            lambda: build_aztec_region(UndentedAztecRectangle(2 * k - 1, 2 * k),
                                       DefectSpec.diagonal_squares_removed((k - 1,))),
            None,
        )
    if instance == "hexagon":
        k, q = params["k"], params["q"]
        return (
            lambda: hexagon_count_kqk(k, q),
            lambda: crossing_restricted_count(k, q, range(k + q)),
            lambda: build_hexagon_region(HexagonSpec.kqk(k, q)),
            None,
        )
    if instance == "semihex":
        k, q, dents = params["k"], params["q"], tuple(params["dents"])
        return (
            lambda: semihex_dented_count(k, q, dents),
            None,
            lambda: build_semihexagon_region(DentedSemiHexagon(k, q, dents)),
            None,
        )
    if instance == "aztec":
        a, b, dents = params["a"], params["b"], tuple(params["dents"])
        return (
            lambda: aztec_dented_count(a, b, dents),
            None,
            lambda: build_aztec_region(DentedAztecRectangle(a, b, dents)),
            None,
        )
    raise ValueError(f"unknown cross-check instance {instance!r}")


CROSS_CHECK_INSTANCES = ("problem1", "notri", "problem10", "hexagon",
                         "semihex", "aztec")


def cross_check(instance: str, *, legs: Iterable[str] = ("closed-form",
                                                         "determinant",
                                                         "oracle"),
                node_budget: int | None = None, **params) -> CrossCheckResult:
    """Run the requested legs of a problem instance and compare.

    The oracle leg is skipped (and flagged) when its node budget runs out;
    the two algebraic legs always run to completion.
    """
    legs = tuple(legs)
    closed_fn, det_fn, region_fn, total_fn = _problem_legs(instance, params)
    echoed = tuple(sorted(params.items()))
    results = []
    oracle_skipped = False

    if "closed-form" in legs:
        results.append(CountResult(closed_fn(), "closed-form", instance, echoed))
    if "determinant" in legs and det_fn is not None:
        results.append(CountResult(det_fn(), "determinant", instance, echoed))
    if "oracle" in legs:
        try:
            value = _oracle.count_matchings(region_fn(), node_budget)
            results.append(CountResult(value, "oracle", instance, echoed))
        except _oracle.OracleBudgetExceeded:
            oracle_skipped = True

    values = {r.value for r in results}
    ratio = None
    if total_fn is not None and results:
        ratio = Fraction(results[0].value, total_fn())
    return CrossCheckResult(instance, echoed, tuple(results),
                            agree=len(values) <= 1,
                            oracle_skipped=oracle_skipped,
                            ratio=ratio)
