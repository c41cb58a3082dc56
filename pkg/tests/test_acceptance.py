"""Acceptance criteria, one test each; a PASS/FAIL line per criterion is
printed in the pytest terminal summary."""

import io
import random
import time
from contextlib import redirect_stdout
from fractions import Fraction


from shiftmodes.cli import main
from shiftmodes.fuzz import FuzzConfig, random_polynomial, run_fuzz
from shiftmodes.numeric import poly_derivative
from shiftmodes.sequences import ModeRange
from shiftmodes.shift import AdmissiblePolynomial, b_poly, f_derivative_closed, f_poly, mode_range_at, shift_profile
from shiftmodes.thresholds import ThresholdKind, count_positive_zeros, threshold_profile

from conftest import ACCEPTANCE_LINES

SEED = 1


def record(number, title, ok, detail=""):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {number}. {title}" + (f" ({detail})" if detail else ""))
    assert ok, detail


def sample_polynomials(count, salt):
    rng = random.Random(f"acceptance:{salt}")
    return [random_polynomial(rng, 12) for _ in range(count)]


def fuzz_counts(props, trials):
    report = run_fuzz(FuzzConfig(SEED, trials, 12, props))
    return report, report.to_dict()["results"]


def test_1_theorem1_fuzz():
    start = time.perf_counter()
    report, results = fuzz_counts(("theorem1",), 1000)
    elapsed = time.perf_counter() - start
    ok = results["theorem1"] == {"passed": 1000, "failed": 0} and elapsed < 60
    record(1, "Theorem 1 fuzz, 1000 polynomials x 5 shift pairs", ok,
           f"{report.failures} failures, {elapsed:.1f}s")


def test_2_lemma1_exactness():
    failures = 0
    for P in sample_polynomials(200, "lemma1"):
        failures += sum(poly_derivative(b_poly(P, k)) != (k + 1) * b_poly(P, k + 1) for k in range(P.m))
    record(2, "Lemma 1: b_k' == (k+1) b_{k+1}, 200 polynomials", failures == 0, f"{failures} failures")


def test_3_lemma2_exactness():
    failures = checked = 0
    for P in sample_polynomials(200, "lemma2"):
        for k in range(1, P.m + 1):
            g = f_poly(P, k)
            for n in range(P.m - k + 2):
                checked += 1
                failures += f_derivative_closed(P, k, n) != g
                g = poly_derivative(g)
    record(3, "Lemma 2: closed-form n-th derivative of f_k, 200 polynomials", failures == 0,
           f"{checked} (k,n) pairs, {failures} failures")


def test_4_lemma3_certificate():
    failures = checked = 0
    for P in sample_polynomials(200, "lemma3"):
        for k in range(1, P.m + 1):
            for n in range(P.m - k + 1):
                g = f_derivative_closed(P, k, n)
                c = count_positive_zeros(g)
                checked += 1
                failures += c > 1 or (g[0] < 0 and c != 1)
    record(4, "Lemma 3: at most one positive zero, exactly one when value at 0 < 0", failures == 0,
           f"{checked} derivatives, {failures} failures")


def test_5_worked_instance():
    P = AdmissiblePolynomial([1, 1, 1, 1])
    ok = shift_profile(P, 1).values == (4, 6, 4, 1)
    ok &= shift_profile(P, 3).values == (40, 34, 10, 1)
    prof = threshold_profile(P, Fraction(1, 2**40))
    z1, z2, z3 = prof.thresholds
    ok &= z1.kind is ThresholdKind.INTERVAL
    lo, hi = z1.interval.lo, z1.interval.hi
    ok &= hi - lo <= Fraction(1, 2**40) and 1 < lo and (lo - 1) ** 2 < 2 < (hi - 1) ** 2
    ok &= Fraction("2.414213562") < lo < hi < Fraction("2.414213563")
    ok &= z2.kind is ThresholdKind.EXACT and z2.value == Fraction(1, 3)
    ok &= z3.kind is ThresholdKind.ZERO_BOUNDARY
    ok &= mode_range_at(P, 1) == ModeRange(1, 1)
    ok &= mode_range_at(P, Fraction(1, 3)) == ModeRange(1, 2)
    ok &= mode_range_at(P, 3) == ModeRange(0, 0)
    record(5, "Worked instance P = 1+x+x^2+x^3", bool(ok), f"z_1 in ({float(lo):.12f}, {float(hi):.12f})")


def test_6_cross_oracle_mode_agreement():
    report, results = fuzz_counts(("mode_agreement",), 200)
    record(6, "Max scan == sign test == mode curve, 200 polynomials x 20 shifts",
           results["mode_agreement"] == {"passed": 200, "failed": 0}, f"{report.failures} failures")


def test_7_cited_results_fuzz():
    props = ("unimodal_shift", "log_concave_shift", "ratio_monotone_shift")
    report, results = fuzz_counts(props, 500)
    ok = all(results[p] == {"passed": 500, "failed": 0} for p in props)
    record(7, "Unimodal (d>0), log-concave (c>=1), ratio monotone (c=1), 500 trials each", ok,
           f"{report.failures} failures")


def test_8_threshold_ordering():
    report, results = fuzz_counts(("threshold_order",), 200)
    record(8, "z_1 >= ... >= z_m certified at default precision, 200 polynomials",
           results["threshold_order"] == {"passed": 200, "failed": 0}, f"{report.failures} failures")


def _cli_fuzz(jobs):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(["fuzz", "--seed", str(SEED), "--trials", "200", "--jobs", str(jobs)])
    return code, buf.getvalue().encode()


def test_9_determinism():
    code1, first = _cli_fuzz(1)
    code2, second = _cli_fuzz(1)
    code3, threaded = _cli_fuzz(4)
    ok = first == second == threaded and code1 == code2 == code3 == 0
    record(9, "fuzz report byte-identical across reruns and thread counts 1 and 4", ok,
           f"{len(first)} bytes")
