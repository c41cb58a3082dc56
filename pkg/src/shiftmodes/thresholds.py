"""Certified positive-root counting and the mode-transition thresholds.

Positive zeros are counted exactly with Descartes' rule of signs and
interval subdivision on the square-free part of the polynomial; isolating
intervals are refined by bisection with dyadic endpoints.  The threshold
``z_k`` is the unique zero of ``f_k`` on ``(0, inf)`` (or 0 when there is
none), so that for every rational ``d > 0``

    sign(f_k(d)) == sign(d - z_k).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import lcm

from .numeric import DensePolynomial, as_rational, poly_eval, taylor_shift
from .sequences import ModeRange
from .shift import _admissible

__all__ = [
    "UndecidedAtPrecision",
    "ThresholdOrderError",
    "IsolatingInterval",
    "ThresholdKind",
    "Threshold",
    "ThresholdProfile",
    "Breakpoint",
    "Segment",
    "ModeCurve",
    "DEFAULT_PRECISION",
    "sign_at",
    "deflate_origin",
    "descartes_variations",
    "cauchy_root_bound",
    "squarefree_part",
    "count_roots_in",
    "count_positive_zeros",
    "isolate_positive_root",
    "threshold",
    "compare_thresholds",
    "threshold_profile",
    "mode_curve",
    "curve_from_profile",
    "to_decimal",
]

DEFAULT_PRECISION = Fraction(1, 2**40)
DEFAULT_MAX_REFINEMENTS = 256


class UndecidedAtPrecision(ArithmeticError):
    """Two thresholds could not be ordered within the refinement budget."""


class ThresholdOrderError(ArithmeticError):
    """A certified comparison found ``z_k < z_{k+1}``."""


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_at(p: DensePolynomial, x) -> int:
    """Exact sign of ``p(x)``."""
    return _sign(poly_eval(p, x))


def deflate_origin(p: DensePolynomial) -> tuple[int, DensePolynomial]:
    """Split ``p = x**s * q`` with ``q(0) != 0``."""
    if p.is_zero():
        raise ValueError("cannot deflate the zero polynomial")
    s = 0
    while p.coeffs[s] == 0:
        s += 1
    return s, DensePolynomial(p.coeffs[s:])


def descartes_variations(p: DensePolynomial) -> int:
    """Sign changes in the coefficient sequence, zeros skipped."""
    if p.is_zero():
        raise ValueError("sign variations of the zero polynomial are undefined")
    signs = [_sign(c) for c in p.coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_root_bound(p: DensePolynomial) -> Fraction:
    """``1 + max |c_i| / |c_deg|``; all real roots lie strictly inside ``(-B, B)``."""
    if p.degree is None or p.degree < 1:
        raise ValueError("Cauchy bound needs a polynomial of degree >= 1")
    lead = abs(p.leading_coefficient)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lead


def _dyadic_ceiling(x: Fraction) -> Fraction:
    # smallest power of two >= x, for x >= 1
    n = -((-x.numerator) // x.denominator)
    return Fraction(1 << (n - 1).bit_length())


def _divmod(a: DensePolynomial, b: DensePolynomial):
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db, lb = b.degree, b.leading_coefficient
    quot = [Fraction(0)] * max(len(rem) - db, 0)
    for i in range(len(rem) - db - 1, -1, -1):
        c = rem[i + db] / lb
        quot[i] = c
        if c:
            for j, bc in enumerate(b.coeffs):
                rem[i + j] -= c * bc
    return DensePolynomial(quot), DensePolynomial(rem[:db])


def _monic(p: DensePolynomial) -> DensePolynomial:
    return p * (1 / p.leading_coefficient)


def _gcd(a: DensePolynomial, b: DensePolynomial) -> DensePolynomial:
    while not b.is_zero():
        a, b = b, _divmod(a, b)[1]
    return _monic(a) if not a.is_zero() else a


def squarefree_part(p: DensePolynomial) -> DensePolynomial:
    """``p / gcd(p, p')``, made monic; same distinct roots, all simple."""
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free part")
    if p.degree == 0:
        return DensePolynomial([1])
    g = _gcd(p, p.derivative())
    return _monic(_divmod(p, g)[0])


def _variations_in(p: DensePolynomial, a: Fraction, b: Fraction) -> int:
    # Descartes bound for roots in (a, b): map (a, b) onto (0, inf) with
    # x -> (a*t + b)/(t + 1) and count sign variations of the numerator.
    n = p.degree
    shifted = taylor_shift(p, a).coeffs
    width = b - a
    scaled = [c * width**i for i, c in enumerate(shifted)]
    scaled += [Fraction(0)] * (n + 1 - len(scaled))
    return descartes_variations(taylor_shift(DensePolynomial(scaled[::-1]), 1))


def count_roots_in(p: DensePolynomial, a, b) -> int:
    """Distinct real roots of ``p`` in the open interval ``(a, b)``."""
    a, b = as_rational(a), as_rational(b)
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    if a >= b or p.degree == 0:
        return 0
    q = squarefree_part(p)
    total = 0
    stack = [(a, b)]
    while stack:
        lo, hi = stack.pop()
        v = _variations_in(q, lo, hi)
        if v <= 1:
            total += v
            continue
        mid = (lo + hi) / 2
        if poly_eval(q, mid) == 0:
            total += 1
        stack.append((mid, hi))
        stack.append((lo, mid))
    return total


def count_positive_zeros(p: DensePolynomial) -> int:
    """Exact number of distinct zeros of ``p`` in ``(0, inf)``."""
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    _, q = deflate_origin(p)
    if q.degree == 0:
        return 0
    sqf = squarefree_part(q)
    v = descartes_variations(sqf)
    if v <= 1:
        return v
    return count_roots_in(sqf, 0, _dyadic_ceiling(cauchy_root_bound(sqf)))


@dataclass(frozen=True)
class IsolatingInterval:
    """Open interval ``(lo, hi)`` holding exactly one zero of ``poly``.

    ``sign_lo`` and ``sign_hi`` are the exact, nonzero and opposite signs of
    ``poly`` at the endpoints.
    """

    lo: Fraction
    hi: Fraction
    sign_lo: int
    sign_hi: int
    poly: DensePolynomial = field(repr=False, compare=False)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo < x < self.hi

    def bisect(self) -> "IsolatingInterval | Fraction":
        """Halve once; returns the midpoint itself if it is the zero."""
        mid = (self.lo + self.hi) / 2
        s = sign_at(self.poly, mid)
        if s == 0:
            return mid
        if s == self.sign_lo:
            return replace(self, lo=mid)
        return replace(self, hi=mid, sign_hi=s)

    def refined(self, width) -> "IsolatingInterval | Fraction":
        width = as_rational(width)
        current = self
        while isinstance(current, IsolatingInterval) and current.width > width:
            current = current.bisect()
        return current


def _integer_coefficients(p: DensePolynomial) -> list[int]:
    den = lcm(*(c.denominator for c in p.coeffs))
    return [int(c * den) for c in p.coeffs]


def isolate_positive_root(p: DensePolynomial, precision=DEFAULT_PRECISION):
    """Unique zero of ``p`` in ``(0, inf)``: exact Fraction or IsolatingInterval.

    Returns ``None`` when ``p`` has no positive zero.  Raises ``ArithmeticError``
    if there is more than one, or if the zero does not change the sign of ``p``.
    """
    precision = as_rational(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    count = count_positive_zeros(p)
    if count == 0:
        return None
    if count > 1:
        raise ArithmeticError(f"{count} positive zeros, expected at most one")
    _, q = deflate_origin(p)
    if q.degree == 1:
        return -q.coeffs[0] / q.coeffs[1]
    bound = _dyadic_ceiling(cauchy_root_bound(q))
    s0, sb = sign_at(q, 0), sign_at(q, bound)
    if s0 == sb:
        raise ArithmeticError("positive zero of even multiplicity")
    start = IsolatingInterval(Fraction(0), bound, s0, sb, q)

    # A rational zero p/t in lowest terms has t dividing the leading
    # coefficient L of the integer polynomial, and two distinct such
    # fractions are at least 1/L^2 apart.
    lead = abs(_integer_coefficients(q)[-1])
    probe = start.refined(Fraction(1, 2 * lead * lead))
    if isinstance(probe, Fraction):
        return probe
    candidate = ((probe.lo + probe.hi) / 2).limit_denominator(lead)
    if probe.contains(candidate) and poly_eval(q, candidate) == 0:
        return candidate
    return start.refined(precision)


class ThresholdKind(enum.Enum):
    EXACT = "exact"
    INTERVAL = "interval"
    ZERO_BOUNDARY = "zero_boundary"


@dataclass(frozen=True)
class Threshold:
    """Shift ``z_k`` at which coefficients ``k-1`` and ``k`` of ``P(x+d)`` swap order."""

    k: int
    kind: ThresholdKind
    value: Fraction | None = None
    interval: IsolatingInterval | None = None

    def compare(self, d) -> int:
        """Certified ``sign(d - z_k)``."""
        d = as_rational(d)
        if self.kind is ThresholdKind.ZERO_BOUNDARY:
            return _sign(d)
        if self.kind is ThresholdKind.EXACT:
            return _sign(d - self.value)
        iv = self.interval
        if d <= iv.lo:
            return -1
        if d >= iv.hi:
            return 1
        s = sign_at(iv.poly, d)
        if s == 0:
            return 0
        return -1 if s == iv.sign_lo else 1

    def approximation(self) -> Fraction:
        if self.kind is ThresholdKind.INTERVAL:
            return (self.interval.lo + self.interval.hi) / 2
        return self.value if self.value is not None else Fraction(0)

    def refined(self, width) -> "Threshold":
        if self.kind is not ThresholdKind.INTERVAL:
            return self
        iv = self.interval.refined(width)
        if isinstance(iv, Fraction):
            return Threshold(self.k, ThresholdKind.EXACT, value=iv)
        return replace(self, interval=iv)


def threshold(P, k: int, precision=DEFAULT_PRECISION) -> Threshold:
    """Threshold ``z_k``: exact when rational, otherwise an isolating interval."""
    P = _admissible(P)
    precision = as_rational(precision)
    if precision <= 0:
        raise ValueError("precision must be positive")
    if not 1 <= k <= P.m:
        raise IndexError(f"k={k} outside 1..{P.m}")
    root = isolate_positive_root(P.f_polys[k], precision)
    if root is None:
        return Threshold(k, ThresholdKind.ZERO_BOUNDARY, value=Fraction(0))
    if isinstance(root, Fraction):
        return Threshold(k, ThresholdKind.EXACT, value=root)
    return Threshold(k, ThresholdKind.INTERVAL, interval=root)


def compare_thresholds(a: Threshold, b: Threshold,
                       max_refinements: int = DEFAULT_MAX_REFINEMENTS):
    """Certified ``sign(z_a - z_b)``, with the (possibly refined) thresholds.

    Two interval thresholds are refined until disjoint; equal irrational
    zeros are recognised through the gcd of their polynomials.
    """
    zero = ThresholdKind.ZERO_BOUNDARY
    if a.kind is zero or b.kind is zero:
        return _sign((a.kind is not zero) - (b.kind is not zero)), a, b
    if a.kind is ThresholdKind.EXACT:
        return b.compare(a.value), a, b
    if b.kind is ThresholdKind.EXACT:
        return -a.compare(b.value), a, b

    ia, ib = a.interval, b.interval
    lo, hi = max(ia.lo, ib.lo), min(ia.hi, ib.hi)
    if lo < hi:
        g = _gcd(ia.poly, ib.poly)
        if g.degree and count_roots_in(g, lo, hi) > 0:
            return 0, a, b
    for _ in range(max_refinements):
        if ia.hi <= ib.lo:
            return -1, a, b
        if ib.hi <= ia.lo:
            return 1, a, b
        a = a.refined(a.interval.width / 2)
        b = b.refined(b.interval.width / 2)
        if a.kind is not ThresholdKind.INTERVAL or b.kind is not ThresholdKind.INTERVAL:
            return compare_thresholds(a, b, max_refinements)
        ia, ib = a.interval, b.interval
    if ia.hi <= ib.lo:
        return -1, a, b
    if ib.hi <= ia.lo:
        return 1, a, b
    raise UndecidedAtPrecision(
        f"cannot order z_{a.k} and z_{b.k} after {max_refinements} refinements"
    )


@dataclass(frozen=True)
class ThresholdProfile:
    """Thresholds ``z_1 >= ... >= z_m``; ``ties[i]`` means ``z_{i+1} == z_{i+2}``."""

    thresholds: tuple[Threshold, ...]
    ties: tuple[bool, ...]

    def __getitem__(self, k: int) -> Threshold:
        return self.thresholds[k - 1]

    def __len__(self):
        return len(self.thresholds)


def threshold_profile(P, precision=DEFAULT_PRECISION,
                      max_refinements: int = DEFAULT_MAX_REFINEMENTS) -> ThresholdProfile:
    """All thresholds of ``P`` with their nonincreasing order certified."""
    P = _admissible(P)
    zs = [threshold(P, k, precision) for k in range(1, P.m + 1)]
    ties = []
    for i in range(len(zs) - 1):
        c, zs[i], zs[i + 1] = compare_thresholds(zs[i], zs[i + 1], max_refinements)
        if c < 0:
            raise ThresholdOrderError(f"z_{i + 1} < z_{i + 2} for {P!r}")
        ties.append(c == 0)
    return ThresholdProfile(tuple(zs), tuple(ties))


@dataclass(frozen=True)
class Breakpoint:
    """Shift value where the mode drops; ``ks`` are the tied threshold indices."""

    threshold: Threshold
    ks: tuple[int, ...]
    m_star: int
    m_sup: int


@dataclass(frozen=True)
class Segment:
    """Open shift interval between breakpoints (``None`` means 0 or +inf)."""

    lo: Breakpoint | None
    hi: Breakpoint | None
    m_star: int
    m_sup: int


@dataclass(frozen=True)
class ModeCurve:
    breakpoints: tuple[Breakpoint, ...]
    segments: tuple[Segment, ...]
    profile: ThresholdProfile = field(repr=False)

    def modes_at(self, d) -> ModeRange:
        d = as_rational(d)
        if d <= 0:
            raise ValueError("mode curve is defined for d > 0")
        for i, bp in enumerate(self.breakpoints):
            c = bp.threshold.compare(d)
            if c < 0:
                seg = self.segments[i]
                return ModeRange(seg.m_star, seg.m_sup)
            if c == 0:
                return ModeRange(bp.m_star, bp.m_sup)
        seg = self.segments[-1]
        return ModeRange(seg.m_star, seg.m_sup)


def mode_curve(P, precision=DEFAULT_PRECISION,
               max_refinements: int = DEFAULT_MAX_REFINEMENTS) -> ModeCurve:
    """Step function ``d -> (M_*, M^*)`` on ``(0, inf)``."""
    return curve_from_profile(threshold_profile(P, precision, max_refinements))


def curve_from_profile(profile: ThresholdProfile) -> ModeCurve:
    """Assemble the mode curve from an ordered threshold profile.

    On ``(z_{k+1}, z_k)`` the mode is ``k``; at a value shared by
    ``z_k = ... = z_{k+r-1}`` the modes are ``k-1`` and ``k+r-1``.
    """
    zs = profile.thresholds
    positive = sum(1 for z in zs if z.kind is not ThresholdKind.ZERO_BOUNDARY)

    groups = []  # descending threshold value
    k = 1
    while k <= positive:
        r = 1
        while k + r <= positive and profile.ties[k + r - 2]:
            r += 1
        groups.append(tuple(range(k, k + r)))
        k += r

    breakpoints = tuple(
        Breakpoint(zs[ks[0] - 1], ks, ks[0] - 1, ks[-1]) for ks in reversed(groups)
    )
    segments = []
    lower, mode = None, positive
    for bp in breakpoints:
        segments.append(Segment(lower, bp, mode, mode))
        lower, mode = bp, bp.m_star
    segments.append(Segment(lower, None, mode, mode))
    return ModeCurve(breakpoints, tuple(segments), profile)


def to_decimal(x: Fraction, digits: int) -> str:
    """``x`` rounded half-up to ``digits`` decimal places, exactly."""
    x = as_rational(x)
    scale = 10**digits
    n = (abs(x) * scale * 2 + 1) // 2
    sign = "-" if x < 0 and n else ""
    whole, frac = divmod(int(n), scale)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"
