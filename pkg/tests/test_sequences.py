import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shiftmodes.sequences import (
    ModeRange,
    is_log_concave,
    is_ratio_monotone,
    is_spiral,
    is_unimodal,
    log_concave_violation,
    mode_range,
    ratio_monotone_violation,
    spiral_order,
    unimodal_violation,
)

small_seqs = st.lists(st.integers(0, 4), min_size=1, max_size=8)
positive_seqs = st.lists(st.integers(1, 6), min_size=1, max_size=9)


def has_indeterminate_ratio(s):
    """True when one of the ratio chains contains a 0/0 link."""
    m = len(s) - 1
    pairs = [(m - i, i) for i in range((m - 1) // 2 + 1)]
    pairs += [(i - 1, m - i) for i in range(1, m // 2 + 1)]
    return any(s[x] == 0 and s[y] == 0 for x, y in pairs)


def brute_unimodal(s):
    return any(
        all(s[i] <= s[i + 1] for i in range(k)) and all(s[i] >= s[i + 1] for i in range(k, len(s) - 1))
        for k in range(len(s))
    )


@pytest.mark.parametrize("seq, expected", [
    ((1, 2, 3, 2), True),
    ((2, 1, 2), False),
    ((4, 6, 4, 1), True),
])
def test_is_unimodal(seq, expected):
    assert is_unimodal(seq) is expected


def test_unimodal_violation_index():
    assert unimodal_violation((2, 1, 2)) == (2,)


@pytest.mark.parametrize("seq, expected", [
    ((1, 3, 3, 1), ModeRange(1, 2)),
    ((5,), ModeRange(0, 0)),
    ((4, 6, 4, 1), ModeRange(1, 1)),
])
def test_mode_range(seq, expected):
    assert mode_range(seq) == expected


def test_spiral_order():
    assert spiral_order(0) == [0]
    assert spiral_order(2) == [2, 0, 1]
    assert spiral_order(3) == [3, 0, 2, 1]
    assert spiral_order(4) == [4, 0, 3, 1, 2]


@pytest.mark.parametrize("seq, expected", [
    ((1, 3, 2), False),
    ((2, 3, 2), True),
    ((7,), True),
])
def test_is_spiral(seq, expected):
    assert is_spiral(seq) is expected


@pytest.mark.parametrize("seq, expected", [
    ((1, 2, 3, 2, 1), True),
    ((1, 1, 4), False),
    ((3, 9), True),
    ((3,), True),
])
def test_is_log_concave(seq, expected):
    assert is_log_concave(seq) is expected


def test_log_concave_violation_index():
    assert log_concave_violation((1, 1, 4)) == (1,)


@pytest.mark.parametrize("seq, expected", [
    ((4, 6, 4, 1), True),
    ((1, 1, 4), False),
    ((2,), True),
])
def test_is_ratio_monotone(seq, expected):
    assert is_ratio_monotone(seq) is expected


def test_ratio_monotone_violation_reports_link():
    # a_2/a_0 <= 1 fails first
    assert ratio_monotone_violation((1, 1, 4)) == (2, 0)


@pytest.mark.parametrize("check", [is_unimodal, is_spiral, is_log_concave, is_ratio_monotone, mode_range])
def test_rejects_empty_and_negative(check):
    with pytest.raises(ValueError):
        check(())
    with pytest.raises(ValueError):
        check((1, -1))


@given(small_seqs)
def test_unimodal_matches_brute_force(s):
    assert is_unimodal(s) == brute_unimodal(s)


def test_ratio_monotone_implies_log_concave_and_spiral_exhaustive():
    checked = 0
    for n in range(1, 8):
        for s in itertools.product(range(5), repeat=n):
            if is_ratio_monotone(s) and not has_indeterminate_ratio(s):
                checked += 1
                assert is_log_concave(s) and is_spiral(s), s
    assert checked > 250


def test_zero_over_zero_links_break_the_implication():
    # cross-multiplication turns 1/0 <= 0/0 into 0 <= 0, so the chains pass
    s = (0, 0, 0, 1)
    assert is_ratio_monotone(s)
    assert not is_spiral(s)


@given(positive_seqs)
def test_ratio_monotone_implies_log_concave_and_spiral(s):
    s = sorted(s)  # nondecreasing rows pass the ratio chains more often
    for seq in (s, s[::-1], tuple(reversed(s[: len(s) // 2])) + tuple(s[len(s) // 2:])):
        if is_ratio_monotone(seq):
            assert is_log_concave(seq) and is_spiral(seq)


def test_spiral_implies_unimodal_exhaustive():
    for n in range(1, 7):
        for s in itertools.product(range(4), repeat=n):
            if is_spiral(s):
                assert is_unimodal(s), s


@given(small_seqs)
def test_mode_range_attains_max(s):
    r = mode_range(s)
    top = max(s)
    assert s[r.m_star] == top and s[r.m_sup] == top
    assert 0 <= r.m_star <= r.m_sup < len(s)
    if is_unimodal(s):
        assert all(s[i] == top for i in range(r.m_star, r.m_sup + 1))
        assert all(s[i] < top for i in range(len(s)) if not r.m_star <= i <= r.m_sup)


@given(small_seqs, st.fractions(min_value=0, max_value=50, max_denominator=9).filter(lambda c: c > 0))
def test_positive_scaling_invariance(s, c):
    t = [c * Fraction(v) for v in s]
    for check in (is_unimodal, is_spiral, is_log_concave, is_ratio_monotone, mode_range):
        assert check(s) == check(t)
