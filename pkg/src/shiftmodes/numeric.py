"""Exact rational scalars and dense univariate polynomials over them.

Rationals are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator, so equality is structural.

A :class:`DensePolynomial` stores its coefficients in ascending order,
``coeffs[i]`` being the coefficient of ``x**i``.  Trailing zeros are
stripped on construction; the zero polynomial has an empty coefficient
tuple and degree ``None``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "DensePolynomial",
    "as_rational",
    "parse_rational",
    "format_rational",
    "poly_eval",
    "poly_derivative",
    "taylor_shift",
    "falling_factorial",
    "binomial_column",
]

_RATIONAL_RE = re.compile(
    r"""^\s*(?P<sign>[+-]?)
        (?P<num>\d+)(?:\^(?P<nexp>\d+))?
        (?:\s*/\s*(?P<den>\d+)(?:\^(?P<dexp>\d+))?)?
        \s*$""",
    re.VERBOSE,
)


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or rational string to a Fraction.

    Floats are refused: a float is already rounded and would leak
    inexactness into every downstream comparison.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational numbers")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"``, ``"p/q"`` or power forms such as ``"1/2^40"``."""
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not a rational number: {text!r}")
    num = int(match["num"]) ** int(match["nexp"] or 1)
    den = 1
    if match["den"] is not None:
        den = int(match["den"]) ** int(match["dexp"] or 1)
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    value = Fraction(num, den)
    return -value if match["sign"] == "-" else value


def format_rational(value: Fraction) -> str:
    """Canonical ``"p/q"`` (or ``"p"``) string; inverse of :func:`parse_rational`."""
    return str(Fraction(value))


def binomial_column(k: int, m: int) -> list[int]:
    """Return ``[C(k,k), C(k+1,k), ..., C(m,k)]`` as exact integers."""
    if k < 0 or m < k:
        return []
    column = [1]
    c = 1
    for j in range(k, m):
        # C(j+1, k) = C(j, k) * (j+1) / (j+1-k), always an exact division
        c = c * (j + 1) // (j + 1 - k)
        column.append(c)
    return column


def falling_factorial(m: int, j: int) -> int:
    """Falling factorial ``m (m-1) ... (m-j+1)``; ``(m)_0 == 1``."""
    if j < 0:
        raise ValueError(f"falling factorial needs j >= 0, got {j}")
    result = 1
    for i in range(j):
        result *= m - i
    return result


class DensePolynomial:
    """Immutable dense polynomial with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        values = [as_rational(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs = tuple(values)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "DensePolynomial":
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | None:
        """Index of the highest nonzero coefficient; ``None`` for zero."""
        return len(self._coeffs) - 1 if self._coeffs else None

    @property
    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        if i < 0:
            raise IndexError("negative coefficient index")
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, DensePolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"DensePolynomial([{', '.join(map(format_rational, self._coeffs))}])"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = format_rational(abs(c)) + ("*" + mono if mono else "")
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __call__(self, x) -> Fraction:
        return poly_eval(self, x)

    def __neg__(self) -> "DensePolynomial":
        return DensePolynomial(-c for c in self._coeffs)

    def __add__(self, other) -> "DensePolynomial":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return other
        n = max(len(self._coeffs), len(other._coeffs))
        return DensePolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "DensePolynomial":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "DensePolynomial":
        return (-self) + other

    def __mul__(self, other) -> "DensePolynomial":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return DensePolynomial(c * a for a in self._coeffs)
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return DensePolynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return DensePolynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "DensePolynomial":
        return poly_derivative(self)

    def shift(self, d, method: str = "horner") -> "DensePolynomial":
        return taylor_shift(self, d, method)


def _coerce_poly(value):
    if isinstance(value, DensePolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return DensePolynomial([value])
    return NotImplemented


def _as_poly(p) -> DensePolynomial:
    return p if isinstance(p, DensePolynomial) else DensePolynomial(p)


def poly_eval(p: DensePolynomial | Sequence, x) -> Fraction:
    """Evaluate ``p`` at ``x`` exactly, in Horner order."""
    x = as_rational(x)
    acc = Fraction(0)
    for c in reversed(_as_poly(p).coeffs):
        acc = acc * x + c
    return acc


def poly_derivative(p: DensePolynomial | Sequence) -> DensePolynomial:
    """Formal derivative."""
    coeffs = _as_poly(p).coeffs
    return DensePolynomial(i * c for i, c in enumerate(coeffs) if i > 0)


def _shift_binomial(coeffs: tuple[Fraction, ...], d: Fraction) -> list[Fraction]:
    m = len(coeffs) - 1
    out = []
    for k in range(m + 1):
        # k-th coefficient of p(x+d): sum_j C(j,k) a_j d^(j-k)
        acc = Fraction(0)
        power = Fraction(1)
        for c, a in zip(binomial_column(k, m), coeffs[k:]):
            acc += c * a * power
            power *= d
        out.append(acc)
    return out


def _shift_horner(coeffs: tuple[Fraction, ...], d: Fraction) -> list[Fraction]:
    a = list(coeffs)
    n = len(a) - 1
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            a[j] += d * a[j + 1]
    return a


_SHIFT_METHODS = {"binomial": _shift_binomial, "horner": _shift_horner}


def taylor_shift(p: DensePolynomial | Sequence, d, method: str = "horner") -> DensePolynomial:
    """Return ``q`` with ``q(x) == p(x + d)``.

    ``method="binomial"`` sums the binomial expansion coefficient by
    coefficient; ``method="horner"`` performs repeated synthetic division.
    Both give the same canonical result.
    """
    try:
        impl = _SHIFT_METHODS[method]
    except KeyError:
        raise ValueError(f"unknown Taylor shift method {method!r}") from None
    coeffs = _as_poly(p).coeffs
    if not coeffs:
        return DensePolynomial()
    return DensePolynomial(impl(coeffs, as_rational(d)))
