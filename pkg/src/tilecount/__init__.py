"""tilecount: exact counting of lozenge tilings of hexagons and domino
tilings of Aztec rectangles with defects.

Each count is available three ways -- closed form, determinant /
continued-fraction reduction, and a brute-force matching oracle -- and the
package's job is to compute them exactly and verify that they agree.
"""

from .exactnum import (
    pochhammer,
    poly_eval,
    power_sum,
    power_sum_polynomial,
    superfactorial,
)
from .lingebra import (
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
from .regions import (
    CellRegion,
    DefectSpec,
    DentedAztecRectangle,
    DentedSemiHexagon,
    HexagonSpec,
    Square,
    Triangle,
    UndentedAztecRectangle,
    build_aztec_region,
    build_hexagon_region,
    build_semihexagon_region,
    complement_indices,
    validate_hexagon,
)
from .oracle import (
    EnumerationLimitExceeded,
    MatchingConstraint,
    OracleBudgetExceeded,
    count_matchings,
    count_matchings_constrained,
    enumerate_matchings,
)
from .cfhankel import (
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
from .formulas import (
    CountResult,
    CrossCheckResult,
    NonIntegralCountError,
    WZPair,
    aztec_dented_count,
    aztec_missing_squares_count,
    central_lozenge_closed,
    central_lozenge_det,
    central_triangle_removed_closed,
    central_triangle_removed_det,
    cross_check,
    crossing_restricted_count,
    hexagon_count_kqk,
    problem10_closed,
    prop_det_closed,
    semihex_dented_count,
    wz_certificate_residual,
    wz_pair,
    wz_q,
    wz_sum,
    wz_u,
)

__version__ = "0.1.0"
