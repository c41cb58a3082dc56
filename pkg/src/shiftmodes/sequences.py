"""Unimodality, spiral, log-concavity and ratio monotonicity of finite sequences.

Every checker has a ``*_violation`` twin that returns the index tuple of the
first failing inequality (or ``None``); the boolean form is just
``violation is None``.  Ratio inequalities ``x/y <= u/v`` are always
evaluated as ``x*v <= u*y`` so zero entries need no special casing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .numeric import as_rational

__all__ = [
    "ModeRange",
    "coefficient_sequence",
    "mode_range",
    "is_unimodal",
    "is_spiral",
    "is_log_concave",
    "is_ratio_monotone",
    "unimodal_violation",
    "spiral_violation",
    "log_concave_violation",
    "ratio_monotone_violation",
    "spiral_order",
    "PROPERTIES",
]


@dataclass(frozen=True)
class ModeRange:
    """Smallest and greatest index of a maximal entry."""

    m_star: int
    m_sup: int

    def __iter__(self):
        return iter((self.m_star, self.m_sup))


def coefficient_sequence(values: Iterable) -> tuple[Fraction, ...]:
    """Validate and convert to a tuple of nonnegative Fractions."""
    seq = tuple(as_rational(v) for v in values)
    if not seq:
        raise ValueError("sequence must be nonempty")
    for i, v in enumerate(seq):
        if v < 0:
            raise ValueError(f"entry at index {i} is negative")
    return seq


def mode_range(values: Iterable) -> ModeRange:
    seq = coefficient_sequence(values)
    top = max(seq)
    hits = [i for i, v in enumerate(seq) if v == top]
    return ModeRange(hits[0], hits[-1])


def unimodal_violation(values: Iterable) -> tuple[int, ...] | None:
    """Index of the first strict rise that follows a strict fall."""
    seq = coefficient_sequence(values)
    fallen = False
    for i in range(1, len(seq)):
        if seq[i] < seq[i - 1]:
            fallen = True
        elif seq[i] > seq[i - 1] and fallen:
            return (i,)
    return None


def spiral_order(m: int) -> list[int]:
    """Indices in the interleaved order ``m, 0, m-1, 1, ...`` ending at ``m // 2``."""
    order = []
    lo, hi = 0, m
    while lo <= hi:
        order.append(hi)
        if lo < hi:
            order.append(lo)
        lo, hi = lo + 1, hi - 1
    return order


def spiral_violation(values: Iterable) -> tuple[int, ...] | None:
    seq = coefficient_sequence(values)
    order = spiral_order(len(seq) - 1)
    for i, j in zip(order, order[1:]):
        if seq[i] > seq[j]:
            return (i, j)
    return None


def log_concave_violation(values: Iterable) -> tuple[int, ...] | None:
    seq = coefficient_sequence(values)
    for k in range(1, len(seq) - 1):
        if seq[k] * seq[k] < seq[k - 1] * seq[k + 1]:
            return (k,)
    return None


def _ratio_chain_violation(seq, pairs) -> tuple[int, ...] | None:
    # pairs: (numerator index, denominator index), ratios must be
    # nondecreasing and the last one at most 1
    for (x, y), (u, v) in zip(pairs, pairs[1:]):
        if seq[x] * seq[v] > seq[u] * seq[y]:
            return (x, y, u, v)
    if pairs:
        x, y = pairs[-1]
        if seq[x] > seq[y]:
            return (x, y)
    return None


def ratio_monotone_violation(values: Iterable) -> tuple[int, ...] | None:
    """First failing link of the two ratio chains.

    First chain: ``a_{m-i}/a_i`` for ``i = 0..(m-1)//2``; second chain:
    ``a_{i-1}/a_{m-i}`` for ``i = 1..m//2``.  A 4-tuple ``(x, y, u, v)``
    reports a failing ``a_x/a_y <= a_u/a_v``; a pair ``(x, y)`` a failing
    ``a_x/a_y <= 1``.
    """
    seq = coefficient_sequence(values)
    m = len(seq) - 1
    first = [(m - i, i) for i in range(0, (m - 1) // 2 + 1)]
    second = [(i - 1, m - i) for i in range(1, m // 2 + 1)]
    return _ratio_chain_violation(seq, first) or _ratio_chain_violation(seq, second)


def is_unimodal(values: Iterable) -> bool:
    return unimodal_violation(values) is None


def is_spiral(values: Iterable) -> bool:
    return spiral_violation(values) is None


def is_log_concave(values: Iterable) -> bool:
    return log_concave_violation(values) is None


def is_ratio_monotone(values: Iterable) -> bool:
    return ratio_monotone_violation(values) is None


PROPERTIES = {
    "unimodal": unimodal_violation,
    "spiral": spiral_violation,
    "log_concave": log_concave_violation,
    "ratio_monotone": ratio_monotone_violation,
}
