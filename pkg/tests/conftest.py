from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from shiftmodes.shift import AdmissiblePolynomial

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
positive_rationals = st.fractions(min_value=0, max_value=10, max_denominator=64).filter(lambda q: q > 0)
nonneg_rationals = st.fractions(min_value=0, max_value=10, max_denominator=64)


@st.composite
def admissible(draw, max_degree=8, rational=False):
    m = draw(st.integers(1, max_degree))
    if rational:
        entries = st.fractions(min_value=0, max_value=20, max_denominator=7)
    else:
        entries = st.integers(0, 20).map(Fraction)
    coeffs = sorted(draw(st.lists(entries, min_size=m + 1, max_size=m + 1)))
    if coeffs[-1] == 0:
        coeffs[-1] = Fraction(draw(st.integers(1, 20)))
    return AdmissiblePolynomial(coeffs)


polys = st.lists(rationals, max_size=8)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
