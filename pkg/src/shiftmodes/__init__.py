"""Exact analysis of the modes of P(x+d) for polynomials with nonnegative nondecreasing coefficients."""

from .numeric import (
    DensePolynomial,
    Rational,
    falling_factorial,
    format_rational,
    parse_rational,
    poly_derivative,
    poly_eval,
    taylor_shift,
)
from .sequences import (
    ModeRange,
    is_log_concave,
    is_ratio_monotone,
    is_spiral,
    is_unimodal,
    mode_range,
)
from .shift import (
    AdmissiblePolynomial,
    NotAdmissible,
    ShiftProfile,
    b_poly,
    f_derivative_closed,
    f_poly,
    mode_range_at,
    shift_profile,
    verify_theorem1,
)
from .thresholds import (
    IsolatingInterval,
    ModeCurve,
    Threshold,
    ThresholdKind,
    ThresholdOrderError,
    ThresholdProfile,
    UndecidedAtPrecision,
    cauchy_root_bound,
    count_positive_zeros,
    deflate_origin,
    descartes_variations,
    mode_curve,
    sign_at,
    threshold,
    threshold_profile,
)

__version__ = "0.1.0"
