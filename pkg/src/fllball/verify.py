"""Exhaustive conformance suites comparing closed forms with enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import analytic, martingale, metric
from .words import Word

SUITES = ("ball", "expect", "martingale")


@dataclass
class SuiteResult:
    suite: str
    m: int
    n_max: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: str):
        self.checked += 1
        if ok:
            return
        if len(self.failures) < 50:
            self.failures.append(message)
        elif len(self.failures) == 50:
            self.failures.append("...")

    def render(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.suite}: {status} ({self.checked} identities checked, m={self.m}, n<={self.n_max})"]
        lines += [f"  note: {s}" for s in self.notes]
        lines += [f"  failure: {s}" for s in self.failures[:20]]
        return "\n".join(lines)


def verify_ball(m: int, n_max: int) -> SuiteResult:
    """Closed-form |L_1(x)| against ball enumeration for every word."""
    res = SuiteResult("ball", m, n_max)
    for n in range(1, n_max + 1):
        for x in product(range(m), repeat=n):
            w = Word(x, m)
            formula = analytic.ball_size_formula(w).total
            enumerated = len(metric.fll_ball(w, 1))
            res.check(formula == enumerated, f"{w}: formula {formula} != enumeration {enumerated}")
    return res


def verify_expect(m: int, n_max: int) -> SuiteResult:
    """Exhaustive means against every closed-form expectation."""
    res = SuiteResult("expect", m, n_max)
    for n in range(1, n_max + 1):
        means = analytic.exhaustive_means(n, m)
        for which in analytic.STATISTICS:
            value, from_formula = analytic.expectation(which, n, m)
            if not from_formula:
                res.notes.append(f"DomainTooSmall: {which} at n={n} has no closed form; skipped")
                continue
            res.check(means[which] == value, f"E[{which}] n={n}: exhaustive {means[which]} != closed {value}")
        if n >= 2:
            res.check(
                analytic.expected_ball_size_from_components(n, m) == analytic.expected_ball_size(n, m),
                f"n={n}: component assembly disagrees with the mean ball-size closed form",
            )
            res.check(
                martingale.g_mn(0, n, m) + 2 == analytic.expected_ball_size(n, m),
                f"n={n}: g(0) + 2 != E|L_1|",
            )
    return res


def verify_martingale(m: int, n_max: int) -> SuiteResult:
    res = SuiteResult("martingale", m, n_max)
    for n in range(1, n_max + 1):
        if m == 2:
            _verify_binary(res, n)
        elif n >= 2:
            _verify_mary(res, n, m)
    return res


def _verify_binary(res: SuiteResult, n: int):
    @lru_cache(maxsize=None)
    def brute(prefix):
        return martingale.z_bruteforce(prefix, n, 2, "binary_f")

    half_n = Fraction(n, 2)
    for x in product(range(2), repeat=n):
        w = Word(x, 2)
        z = []
        for i in range(n + 1):
            closed = martingale.z_binary(x[:i], i, n)
            res.check(closed == brute(x[:i]), f"{w} i={i}: closed Z_i != brute force")
            z.append(closed)
        res.check(z[1] == z[0], f"{w}: Z_1 != Z_0")
        for i in range(2, n + 1):
            res.check(abs(z[i] - z[i - 1]) <= half_n, f"{w} i={i}: increment exceeds n/2")
        f = analytic.f_n(w, n)
        res.check(z[n] == f, f"{w}: Z_n != f_n")
        res.check(f + half_n + 1 == analytic.ball_size_formula(w).total, f"{w}: f_n + n/2 + 1 != |L_1|")


def _verify_mary(res: SuiteResult, n: int, m: int):
    @lru_cache(maxsize=None)
    def brute(prefix):
        return martingale.z_bruteforce(prefix, n, m, "mary_f")

    cap = n * (m + Fraction(1, m))
    for x in product(range(m), repeat=n):
        z = [brute(x[:i]) for i in range(n + 1)]
        res.check(z[1] == z[0], f"{x}: Z_1 != Z_0")
        for i in range(1, n + 1):
            lo, hi = martingale.z_mary_bounds(x[:i], i, n, m)
            res.check(lo <= z[i] <= hi, f"{x} i={i}: Z_i outside [{lo}, {hi}]")
            res.check(abs(z[i] - z[i - 1]) <= cap, f"{x} i={i}: increment exceeds n(m + 1/m)")


_RUNNERS = {"ball": verify_ball, "expect": verify_expect, "martingale": verify_martingale}


def run_suites(m: int, n_max: int, suite: str = "all") -> list[SuiteResult]:
    names = SUITES if suite == "all" else (suite,)
    return [_RUNNERS[name](m, n_max) for name in names]
