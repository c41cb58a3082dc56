"""JSON/CSV (de)serialization. Rationals always travel as ``"p/q"`` strings."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .numeric import format_rational, parse_rational
from .thresholds import ModeCurve, Threshold, ThresholdKind, ThresholdProfile, to_decimal

__all__ = [
    "DocumentError",
    "load_polynomial",
    "parse_coefficients",
    "threshold_doc",
    "profile_doc",
    "curve_doc",
    "curve_csv",
    "decimal_digits",
]


class DocumentError(ValueError):
    """Input that cannot be parsed at all (as opposed to an inadmissible polynomial)."""


def _parse(text, what: str) -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise DocumentError(f"{what} must be a rational string, got {text!r}")
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise DocumentError(f"{what}: {exc}") from None


def parse_coefficients(items) -> list[Fraction]:
    if not isinstance(items, list):
        raise DocumentError('"coeffs" must be a list of rational strings')
    return [_parse(c, f"coefficient {i}") for i, c in enumerate(items)]


def load_polynomial(text: str) -> tuple[list[Fraction], str | None]:
    """Parse a ``{"name": ..., "coeffs": [...]}`` document.

    Only syntax is checked here; admissibility is left to
    :class:`AdmissiblePolynomial` so the caller can tell the two apart.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "coeffs" not in doc:
        raise DocumentError('expected a JSON object with a "coeffs" list')
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise DocumentError('"name" must be a string')
    return parse_coefficients(doc["coeffs"]), name


def decimal_digits(precision: Fraction) -> int:
    """Decimal places needed to show a value known to within ``precision``."""
    return len(str(-(-precision.denominator // precision.numerator)))


def threshold_doc(z: Threshold, digits: int) -> dict:
    doc = {"k": z.k, "kind": z.kind.value}
    if z.kind is ThresholdKind.INTERVAL:
        doc["lo"] = format_rational(z.interval.lo)
        doc["hi"] = format_rational(z.interval.hi)
        doc["decimal"] = to_decimal(z.approximation(), digits)
    else:
        doc["value"] = format_rational(z.value)
    return doc


def profile_doc(profile: ThresholdProfile, digits: int) -> list[dict]:
    return [threshold_doc(z, digits) for z in profile.thresholds]


def _endpoint(bp, digits: int, default: str) -> str:
    if bp is None:
        return default
    z = bp.threshold
    if z.kind is ThresholdKind.INTERVAL:
        return to_decimal(z.approximation(), digits)
    return format_rational(z.value)


def _exact_endpoint(bp, default: str):
    # irrational endpoints become their isolating bracket
    if bp is None:
        return default
    z = bp.threshold
    if z.kind is ThresholdKind.INTERVAL:
        return {"lo": format_rational(z.interval.lo), "hi": format_rational(z.interval.hi)}
    return format_rational(z.value)


def curve_doc(curve: ModeCurve, digits: int) -> dict:
    return {
        "breakpoints": [
            {
                "ks": list(bp.ks),
                "threshold": threshold_doc(bp.threshold, digits),
                "m_star": bp.m_star,
                "m_sup": bp.m_sup,
            }
            for bp in curve.breakpoints
        ],
        "intervals": [
            {
                "d_lo": _exact_endpoint(seg.lo, "0"),
                "d_hi": _exact_endpoint(seg.hi, "inf"),
                "m_star": seg.m_star,
                "m_sup": seg.m_sup,
            }
            for seg in curve.segments
        ],
    }


def curve_csv(curve: ModeCurve, digits: int) -> str:
    """Open intervals of the mode curve. Irrational endpoints are decimals."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["d_lo", "d_hi", "m_star", "m_sup"])
    for seg in curve.segments:
        writer.writerow([
            _endpoint(seg.lo, digits, "0"),
            _endpoint(seg.hi, digits, "inf"),
            seg.m_star,
            seg.m_sup,
        ])
    return buf.getvalue()
