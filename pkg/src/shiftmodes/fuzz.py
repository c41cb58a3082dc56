"""Seeded randomized checks of the mode theorem, the lemmas and related results.

Reproducibility: every (seed, trial, property) triple gets its own
``random.Random`` (MT19937) instance, seeded with the integer formed from
the first 16 bytes of ``sha256(f"{seed}:{trial}:{property}")``.  Integers
are drawn only through :func:`_below`, a rejection sampler over
``getrandbits``, so the stream does not depend on ``randrange`` internals
or on how trials are scheduled across threads.
"""

from __future__ import annotations

import hashlib
import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .numeric import format_rational, poly_derivative
from .sequences import is_log_concave, is_ratio_monotone, is_unimodal, mode_range
from .shift import (
    AdmissiblePolynomial,
    b_poly,
    f_derivative_closed,
    f_poly,
    modes_from_signs,
    shift_profile,
    verify_theorem1,
)
from .thresholds import (
    DEFAULT_PRECISION,
    ThresholdKind,
    count_positive_zeros,
    mode_curve,
)

__all__ = ["PROPERTIES", "FuzzConfig", "FuzzReport", "run_fuzz", "random_polynomial"]

PROPERTIES = (
    "theorem1",
    "unimodal_shift",
    "log_concave_shift",
    "ratio_monotone_shift",
    "lemma1",
    "lemma2",
    "lemma3_count",
    "threshold_order",
    "mode_agreement",
)

MAX_COEFF = 20
MAX_SHIFT = 10
MAX_DENOMINATOR = 64


def _rng(seed: int, trial: int, prop: str) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{trial}:{prop}".encode()).digest()
    return random.Random(int.from_bytes(digest[:16], "big"))


def _below(rng: random.Random, n: int) -> int:
    """Uniform integer in ``[0, n)``."""
    bits = n.bit_length()
    while True:
        r = rng.getrandbits(bits)
        if r < n:
            return r


def random_polynomial(rng: random.Random, max_degree: int) -> AdmissiblePolynomial:
    m = 1 + _below(rng, max_degree)
    coeffs = sorted(_below(rng, MAX_COEFF + 1) for _ in range(m + 1))
    if coeffs[-1] == 0:
        coeffs[-1] = 1 + _below(rng, MAX_COEFF)
    return AdmissiblePolynomial(coeffs)


def random_shift(rng: random.Random, lo=0, hi=MAX_SHIFT) -> Fraction:
    """Rational in ``(lo, hi]`` with denominator at most 64."""
    q = 1 + _below(rng, MAX_DENOMINATOR)
    first = (Fraction(lo) * q).__floor__() + 1
    last = (Fraction(hi) * q).__floor__()
    return Fraction(first + _below(rng, last - first + 1), q)


def _shift_pair(rng):
    while True:
        d1, d2 = random_shift(rng), random_shift(rng)
        if d1 != d2:
            return min(d1, d2), max(d1, d2)


class _Failure(Exception):
    def __init__(self, detail, shifts=()):
        super().__init__(detail)
        self.detail = detail
        self.shifts = list(shifts)


def _check_theorem1(P, rng):
    for _ in range(5):
        d1, d2 = _shift_pair(rng)
        rep = verify_theorem1(P, d1, d2)
        if not rep.holds:
            raise _Failure(
                f"modes {tuple(rep.modes_d1)} at d1 vs {tuple(rep.modes_d2)} at d2",
                [d1, d2],
            )


def _check_unimodal(P, rng):
    d = random_shift(rng)
    if not is_unimodal(shift_profile(P, d).values):
        raise _Failure("shifted profile not unimodal", [d])


def _check_log_concave(P, rng):
    # the boundary c = 1 itself is drawn one time in eight
    c = Fraction(1) if _below(rng, 8) == 0 else random_shift(rng, 1, MAX_SHIFT)
    if not is_log_concave(shift_profile(P, c).values):
        raise _Failure("shifted profile not log-concave", [c])


def _check_ratio_monotone(P, rng):
    if not is_ratio_monotone(shift_profile(P, 1).values):
        raise _Failure("P(x+1) not ratio monotone", [Fraction(1)])


def _check_lemma1(P, rng):
    for k in range(P.m):
        if poly_derivative(b_poly(P, k)) != (k + 1) * b_poly(P, k + 1):
            raise _Failure(f"b_{k}' != {k + 1} b_{k + 1}")


def _check_lemma2(P, rng):
    for k in range(1, P.m + 1):
        g = f_poly(P, k)
        for n in range(P.m - k + 2):
            if f_derivative_closed(P, k, n) != g:
                raise _Failure(f"closed form differs from f_{k}^({n})")
            g = poly_derivative(g)


def _check_lemma3(P, rng):
    for k in range(1, P.m + 1):
        for n in range(P.m - k + 1):
            g = f_derivative_closed(P, k, n)
            c = count_positive_zeros(g)
            if c > 1 or (g[0] < 0 and c != 1):
                raise _Failure(f"f_{k}^({n}) has {c} positive zeros")


def _check_threshold_order(P, rng):
    mode_curve(P, DEFAULT_PRECISION)


def _probe_shifts(curve, rng, count=20):
    shifts = []
    for bp in curve.breakpoints:
        z = bp.threshold
        if z.kind is ThresholdKind.EXACT:
            shifts.append(z.value)
        eps = Fraction(1, 1 + _below(rng, MAX_DENOMINATOR))
        approx = z.approximation()
        shifts.append(approx + eps)
        if approx - eps > 0:
            shifts.append(approx - eps)
    while len(shifts) < count:
        shifts.append(random_shift(rng))
    return shifts[:count]


def _check_mode_agreement(P, rng):
    curve = mode_curve(P, DEFAULT_PRECISION)
    for d in _probe_shifts(curve, rng):
        direct = mode_range(shift_profile(P, d).values)
        signs = modes_from_signs(P, d)
        looked_up = curve.modes_at(d)
        if not direct == signs == looked_up:
            raise _Failure(
                f"max scan {tuple(direct)}, signs {tuple(signs)}, curve {tuple(looked_up)}",
                [d],
            )


_CHECKS = {
    "theorem1": _check_theorem1,
    "unimodal_shift": _check_unimodal,
    "log_concave_shift": _check_log_concave,
    "ratio_monotone_shift": _check_ratio_monotone,
    "lemma1": _check_lemma1,
    "lemma2": _check_lemma2,
    "lemma3_count": _check_lemma3,
    "threshold_order": _check_threshold_order,
    "mode_agreement": _check_mode_agreement,
}


@dataclass(frozen=True)
class FuzzConfig:
    seed: int
    trials: int
    max_degree: int = 12
    properties: tuple[str, ...] = PROPERTIES

    def __post_init__(self):
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.max_degree < 1:
            raise ValueError("max_degree must be >= 1")
        if not self.properties:
            raise ValueError("at least one property is required")
        unknown = [p for p in self.properties if p not in _CHECKS]
        if unknown:
            raise ValueError(f"unknown properties: {', '.join(unknown)}")


@dataclass
class FuzzReport:
    config: FuzzConfig
    passed: dict = field(default_factory=dict)
    failed: dict = field(default_factory=dict)
    first_counterexample: dict | None = None

    @property
    def failures(self) -> int:
        return sum(self.failed.values())

    def to_dict(self) -> dict:
        cfg = self.config
        return {
            "seed": cfg.seed,
            "trials": cfg.trials,
            "max_degree": cfg.max_degree,
            "properties": list(cfg.properties),
            "results": {
                p: {"passed": self.passed[p], "failed": self.failed[p]}
                for p in cfg.properties
            },
            "failures": self.failures,
            "first_counterexample": self.first_counterexample,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _run_trial(cfg: FuzzConfig, trial: int):
    P = random_polynomial(_rng(cfg.seed, trial, "polynomial"), cfg.max_degree)
    outcomes = []
    for prop in cfg.properties:
        rng = _rng(cfg.seed, trial, prop)
        try:
            _CHECKS[prop](P, rng)
        except _Failure as exc:
            outcomes.append((prop, exc.detail, exc.shifts))
        except Exception as exc:  # any crash on an admissible input is a defect
            outcomes.append((prop, f"{type(exc).__name__}: {exc}", []))
        else:
            outcomes.append((prop, None, None))
    return P, outcomes


def run_fuzz(config: FuzzConfig, jobs: int = 1) -> FuzzReport:
    """Run all trials; the report is identical for any ``jobs``."""
    report = FuzzReport(config, {p: 0 for p in config.properties},
                        {p: 0 for p in config.properties})
    trials = range(config.trials)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda t: _run_trial(config, t), trials))
    else:
        results = [_run_trial(config, t) for t in trials]

    for trial, (P, outcomes) in enumerate(results):
        for prop, detail, shifts in outcomes:
            if detail is None:
                report.passed[prop] += 1
                continue
            report.failed[prop] += 1
            if report.first_counterexample is None:
                report.first_counterexample = {
                    "trial": trial,
                    "property": prop,
                    "coeffs": [format_rational(a) for a in P.coeffs],
                    "shifts": [format_rational(d) for d in shifts],
                    "detail": detail,
                }
    return report
