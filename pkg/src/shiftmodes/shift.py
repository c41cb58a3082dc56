"""Shifted coefficient sequences of polynomials with nondecreasing coefficients.

For ``P(x) = a_0 + ... + a_m x^m`` the coefficient of ``x^k`` in ``P(x+d)``
is ``b_k(d)`` where

    b_k(x) = sum_{j=k}^{m} C(j, k) a_j x^(j-k),

and adjacent coefficients are ordered by the sign of
``f_k(x) = b_{k-1}(x) - b_k(x)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .numeric import (
    DensePolynomial,
    as_rational,
    binomial_column,
    falling_factorial,
    poly_eval,
)
from .sequences import ModeRange, mode_range

__all__ = [
    "NotAdmissible",
    "AdmissiblePolynomial",
    "ShiftProfile",
    "Theorem1Report",
    "b_poly",
    "f_poly",
    "f_derivative_closed",
    "shift_profile",
    "mode_range_at",
    "modes_from_signs",
    "verify_theorem1",
]


class NotAdmissible(ValueError):
    """Coefficients are not nonnegative, nondecreasing, with positive leading term."""


class AdmissiblePolynomial:
    """Degree >= 1 polynomial with nonnegative nondecreasing coefficients.

    The leading coefficient only has to be positive; nothing here depends
    on the polynomial being monic.
    """

    def __init__(self, coeffs: Iterable, name: str | None = None):
        values = tuple(as_rational(c) for c in coeffs)
        if len(values) < 2:
            raise NotAdmissible("degree must be ≥ 1")
        for i, a in enumerate(values):
            if a < 0:
                raise NotAdmissible(f"coefficient at index {i} is negative")
        for i in range(1, len(values)):
            if values[i] < values[i - 1]:
                raise NotAdmissible(f"coefficients not nondecreasing at index {i}")
        if values[-1] == 0:
            raise NotAdmissible("leading coefficient must be positive")
        self.coeffs = values
        self.name = name

    @property
    def m(self) -> int:
        return len(self.coeffs) - 1

    @cached_property
    def poly(self) -> DensePolynomial:
        return DensePolynomial(self.coeffs)

    @cached_property
    def b_polys(self) -> tuple[DensePolynomial, ...]:
        a, m = self.coeffs, self.m
        return tuple(
            DensePolynomial(c * aj for c, aj in zip(binomial_column(k, m), a[k:]))
            for k in range(m + 1)
        )

    @cached_property
    def f_polys(self) -> tuple[DensePolynomial, ...]:
        # index 0 unused so f_polys[k] is f_k
        b = self.b_polys
        return (DensePolynomial(),) + tuple(b[k - 1] - b[k] for k in range(1, self.m + 1))

    def scaled(self, c) -> "AdmissiblePolynomial":
        c = as_rational(c)
        if c <= 0:
            raise ValueError("scale factor must be positive")
        return AdmissiblePolynomial([c * a for a in self.coeffs], self.name)

    def __eq__(self, other):
        if not isinstance(other, AdmissiblePolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"AdmissiblePolynomial([{', '.join(str(a) for a in self.coeffs)}])"


def _admissible(P) -> AdmissiblePolynomial:
    return P if isinstance(P, AdmissiblePolynomial) else AdmissiblePolynomial(P)


@dataclass(frozen=True)
class ShiftProfile:
    d: Fraction
    values: tuple[Fraction, ...]


def b_poly(P, k: int) -> DensePolynomial:
    P = _admissible(P)
    if not 0 <= k <= P.m:
        raise IndexError(f"k={k} outside 0..{P.m}")
    return P.b_polys[k]


def f_poly(P, k: int) -> DensePolynomial:
    P = _admissible(P)
    if not 1 <= k <= P.m:
        raise IndexError(f"k={k} outside 1..{P.m}")
    return P.f_polys[k]


def f_derivative_closed(P, k: int, n: int) -> DensePolynomial:
    """n-th derivative of ``f_k`` from the falling-factorial closed form.

    ``(k+n-1)_n b_{k+n-1} - (k+n)_n b_{k+n}`` with ``b_{m+1} = 0``.
    """
    P = _admissible(P)
    if not 1 <= k <= P.m:
        raise IndexError(f"k={k} outside 1..{P.m}")
    if not 0 <= n <= P.m - k + 1:
        raise IndexError(f"n={n} outside 0..{P.m - k + 1}")
    if n == 0:
        return P.f_polys[k]
    upper = P.b_polys[k + n] if k + n <= P.m else DensePolynomial()
    return (
        falling_factorial(k + n - 1, n) * P.b_polys[k + n - 1]
        - falling_factorial(k + n, n) * upper
    )


def shift_profile(P, d) -> ShiftProfile:
    """Coefficients ``b_0(d), ..., b_m(d)`` of ``P(x + d)``."""
    P = _admissible(P)
    d = as_rational(d)
    if d < 0:
        raise ValueError("shift d must be nonnegative")
    return ShiftProfile(d, tuple(poly_eval(b, d) for b in P.b_polys))


def modes_from_signs(P, d) -> ModeRange:
    """Mode range of ``P(x+d)`` read off the signs of ``f_1(d), ..., f_m(d)``.

    Valid because the shifted profile is unimodal for ``d > 0``:
    ``M*`` is the last k with ``f_k(d) <= 0`` and ``M_*`` the last with
    ``f_k(d) < 0``.
    """
    P = _admissible(P)
    d = as_rational(d)
    m_star = m_sup = 0
    for k in range(1, P.m + 1):
        v = poly_eval(P.f_polys[k], d)
        if v <= 0:
            m_sup = k
        if v < 0:
            m_star = k
    return ModeRange(m_star, m_sup)


def mode_range_at(P, d) -> ModeRange:
    """Smallest and greatest mode of ``P(x + d)`` for ``d > 0``.

    Computed by a direct max scan and cross-checked against the sign rule;
    a disagreement raises ``RuntimeError`` since it can only be a bug.
    """
    P = _admissible(P)
    d = as_rational(d)
    if d <= 0:
        raise ValueError("mode_range_at requires d > 0")
    direct = mode_range(shift_profile(P, d).values)
    signs = modes_from_signs(P, d)
    if direct != signs:
        raise RuntimeError(
            f"mode mismatch for {P!r} at d={d}: max scan {direct}, signs {signs}"
        )
    return direct


@dataclass(frozen=True)
class Theorem1Report:
    d1: Fraction
    d2: Fraction
    modes_d1: ModeRange
    modes_d2: ModeRange
    holds: bool = field(init=False)

    def __post_init__(self):
        ok = (self.modes_d1.m_star >= self.modes_d2.m_star
              and self.modes_d1.m_sup >= self.modes_d2.m_sup)
        object.__setattr__(self, "holds", ok)


def verify_theorem1(P, d1, d2) -> Theorem1Report:
    """Check that both modes of ``P(x+d)`` do not increase from ``d1`` to ``d2``."""
    d1, d2 = as_rational(d1), as_rational(d2)
    if not 0 < d1 < d2:
        raise ValueError(f"need 0 < d1 < d2, got d1={d1}, d2={d2}")
    P = _admissible(P)
    return Theorem1Report(d1, d2, mode_range_at(P, d1), mode_range_at(P, d2))
