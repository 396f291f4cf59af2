"""Closed forms for radius-one FLL balls, evaluated in exact arithmetic.

Rationals are :class:`fractions.Fraction`.  Every closed-form expectation has
an exhaustive counterpart in this module so the two can be compared exactly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import DomainTooSmall, NotBinary, SpaceTooLarge
from .words import Word, _rho, _segment_lengths

MAX_EXHAUSTIVE = 10**7

STATISTICS = ("rho", "a", "sum_s", "sum_s2", "h", "t", "ball")


@dataclass(frozen=True)
class BallSizeBreakdown:
    """Terms of the radius-one ball-size formula, each multiplied by two."""

    rho_term: int
    constant_term: int
    s_squared_term: int
    s_linear_term: int
    a_term: int
    total: int

    @classmethod
    def from_terms(cls, rho_term, constant_term, s_squared_term, s_linear_term, a_term):
        doubled = rho_term + constant_term + s_squared_term + s_linear_term + a_term
        if doubled % 2:
            raise ArithmeticError("ball-size formula produced a half-integer")
        return cls(rho_term, constant_term, s_squared_term, s_linear_term, a_term, doubled // 2)


def _ball_size_doubled(x: Sequence[int], m: int) -> int:
    n = len(x)
    segs = _segment_lengths(x)
    return (
        2 * _rho(x) * (m * n - n - 1)
        + 4
        - sum(s * s for s in segs)
        + 3 * sum(segs)
        - 2 * len(segs)
    )


def ball_size(x: Sequence[int], m: int) -> int:
    """|L_1(x)| from the closed form, on a raw symbol sequence (no validation)."""
    return _ball_size_doubled(x, m) // 2


def ball_size_formula(x: Word) -> BallSizeBreakdown:
    n, m = x.n, x.m
    segs = _segment_lengths(x.symbols)
    return BallSizeBreakdown.from_terms(
        rho_term=2 * _rho(x.symbols) * (m * n - n - 1),
        constant_term=4,
        s_squared_term=-sum(s * s for s in segs),
        s_linear_term=3 * sum(segs),
        a_term=-2 * len(segs),
    )


def _f_mn_doubled(y: Sequence[int], n: int, m: int) -> int:
    segs = _segment_lengths(y)
    return 2 * _rho(y) * (m * n - n - 1) - sum(s * s for s in segs) + 3 * sum(segs) - 2 * len(segs)


def _f_n_doubled(y: Sequence[int], n: int) -> int:
    segs = _segment_lengths(y)
    return 2 * _rho(y) * n - sum(s * s for s in segs)


def f_n(y: Word, ambient_n: int) -> Fraction:
    """rho(y) * n - (1/2) * sum s_i^2 for a binary word y; n is free of len(y)."""
    if y.m != 2:
        raise NotBinary(f"f_n is defined on binary words, got m={y.m}")
    return Fraction(_f_n_doubled(y.symbols, ambient_n), 2)


def f_mn(y: Word, ambient_n: int, m: int | None = None) -> Fraction:
    m = y.m if m is None else m
    return Fraction(_f_mn_doubled(y.symbols, ambient_n, m), 2)


# -- closed-form expectations over uniform Z_m^n ----------------------------

def _require(n: int, m: int, n_min: int = 2):
    if m < 2:
        raise DomainTooSmall(f"m must be >= 2, got {m}")
    if n < n_min:
        raise DomainTooSmall(f"closed form requires n >= {n_min}, got n={n}")


def expected_h(n: int, m: int) -> Fraction:
    _require(n, m, 1)
    return 2 - Fraction(1, m ** (n - 1))


def expected_t(n: int, m: int) -> Fraction:
    # h and t are exchanged by reversal, which preserves the uniform measure
    return expected_h(n, m)


def expected_rho(n: int, m: int) -> Fraction:
    _require(n, m)
    return n - Fraction(n - 1, m)


def expected_a(n: int, m: int) -> Fraction:
    _require(n, m)
    return 1 + Fraction((n - 2) * (m - 1) * (m - 2), m * m) + Fraction(n - 1, m)


def expected_sum_s(n: int, m: int) -> Fraction:
    _require(n, m)
    return n + Fraction((n - 2) * (m - 1) * (m - 2), m * m)


def expected_sum_s2(n: int, m: int) -> Fraction:
    """E[sum s_i^2], including the 2/m^n term."""
    _require(n, m)
    mn = Fraction(1, m**n)
    return (
        Fraction(n * (4 * m * m - 3 * m + 2), m * m)
        + Fraction(6 * m - 4, m * m)
        - 4
        - Fraction(2, m - 1) * (1 - mn)
        + 2 * mn
    )


def expected_ball_size(n: int, m: int) -> Fraction:
    _require(n, m)
    q = m ** (n - 1)
    return n * n * (m + Fraction(1, m) - 2) + 2 - Fraction(n, m) + Fraction(q - 1, q * (m - 1))


def expected_ball_size_from_components(n: int, m: int) -> Fraction:
    """Same expectation assembled from the component expectations by linearity."""
    return (
        (m * n - n - 1) * expected_rho(n, m)
        - expected_sum_s2(n, m) / 2
        + Fraction(3, 2) * expected_sum_s(n, m)
        - expected_a(n, m)
        + 2
    )


_CLOSED_FORMS = {
    "rho": expected_rho,
    "a": expected_a,
    "sum_s": expected_sum_s,
    "sum_s2": expected_sum_s2,
    "h": expected_h,
    "t": expected_t,
    "ball": expected_ball_size,
}


def expectation(which: str, n: int, m: int) -> tuple[Fraction, bool]:
    """Expected value of a statistic; falls back to enumeration below the formula domain.

    Returns ``(value, from_formula)``.
    """
    if which not in _CLOSED_FORMS:
        raise KeyError(f"unknown statistic {which!r}; choose from {', '.join(STATISTICS)}")
    try:
        return _CLOSED_FORMS[which](n, m), True
    except DomainTooSmall:
        if n < 1 or m < 2:
            raise
        return exhaustive_means(n, m)[which], False


# -- exhaustive oracles ------------------------------------------------------

def _guard(n: int, m: int):
    if m**n > MAX_EXHAUSTIVE:
        raise SpaceTooLarge(f"m^n = {m}^{n} exceeds the enumeration limit {MAX_EXHAUSTIVE}")


@dataclass
class ExhaustiveBallStats:
    n: int
    m: int
    mean: Fraction
    min: int
    max: int
    histogram: dict[int, int] = field(default_factory=dict)

    def histogram_csv(self) -> str:
        lines = ["size,count"]
        lines += [f"{k},{v}" for k, v in sorted(self.histogram.items())]
        return "\n".join(lines)


def exhaustive_ball_stats(n: int, m: int) -> ExhaustiveBallStats:
    """Mean, extremes and histogram of |L_1| over all of Z_m^n via the closed form."""
    _guard(n, m)
    hist: Counter[int] = Counter()
    for x in product(range(m), repeat=n):
        hist[ball_size(x, m)] += 1
    total = sum(k * v for k, v in hist.items())
    return ExhaustiveBallStats(
        n=n,
        m=m,
        mean=Fraction(total, m**n),
        min=min(hist),
        max=max(hist),
        histogram=dict(sorted(hist.items())),
    )


def exhaustive_means(n: int, m: int) -> dict[str, Fraction]:
    """Exact mean of every statistic in ``STATISTICS`` over all of Z_m^n."""
    _guard(n, m)
    sums = dict.fromkeys(STATISTICS, 0)
    for x in product(range(m), repeat=n):
        segs = _segment_lengths(x)
        rho = _rho(x)
        sums["rho"] += rho
        sums["a"] += len(segs)
        sums["sum_s"] += sum(segs)
        sums["sum_s2"] += sum(s * s for s in segs)
        sums["h"] += segs[0]
        sums["t"] += segs[-1]
        sums["ball"] += _ball_size_doubled(x, m)
    total = m**n
    means = {k: Fraction(v, total) for k, v in sums.items()}
    means["ball"] /= 2
    return means
