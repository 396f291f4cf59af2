"""Doob martingale of the radius-one ball size and Azuma tail bounds.

Exposing the symbols of a uniform word one at a time gives the martingale
``Z_i = E[f(x) | x_1..x_i]``, where ``f`` is ``f_n`` (binary) or ``f_mn``
(m-ary) and ``|L_1(x)|`` is an affine function of ``f``.  For binary words
``Z_i`` has an explicit closed form; for larger alphabets only a two-sided
bound is available, with an exhaustive conditional expectation as the oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .analytic import MAX_EXHAUSTIVE, _f_mn_doubled, _f_n_doubled
from .errors import (
    DomainTooSmall,
    IndexOutOfRange,
    NotBinary,
    PrefixLengthMismatch,
    SpaceTooLarge,
)
from .words import Word, _head_segment, _tail_segment

TARGETS = ("binary_f", "mary_f")


def _symbols(prefix) -> tuple[int, ...]:
    if prefix is None:
        return ()
    if isinstance(prefix, Word):
        return prefix.symbols
    return tuple(prefix)


def _half_pow(e: int) -> Fraction:
    # 1 / 2^e, valid for negative e as well
    return Fraction(1, 2) ** e


# -- binary case -------------------------------------------------------------

def z_binary(prefix: Word | None, i: int, ambient_n: int) -> Fraction:
    """Closed-form Z_i for a uniform binary word of length ``ambient_n``."""
    n = ambient_n
    x = _symbols(prefix)
    if isinstance(prefix, Word) and prefix.m != 2:
        raise NotBinary(f"z_binary needs a binary prefix, got m={prefix.m}")
    if len(x) != i:
        raise PrefixLengthMismatch(f"prefix has length {len(x)}, expected i={i}")
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"i must lie in [0, {n}], got {i}")
    if i == 0:
        return Fraction(n * n, 2) - n + 2 - _half_pow(n - 1)
    return (
        Fraction(_f_n_doubled(x, n), 2)
        + Fraction(n * n - i * n, 2)
        + 2
        - Fraction(3 * (n - i), 2)
        - _half_pow(n - i - 1)
        - _tail_segment(x) * (1 - _half_pow(n - i))
    )


def z_increment_binary(x: Word, i: int) -> Fraction:
    """Z_i - Z_{i-1} along the binary word x (ambient length n = len(x))."""
    if x.m != 2:
        raise NotBinary(f"z_increment_binary needs a binary word, got m={x.m}")
    n = x.n
    if not 2 <= i <= n:
        raise IndexOutOfRange(f"increment index must lie in [2, {n}], got {i}")
    magnitude = Fraction(n, 2) - _tail_segment(x.symbols[: i - 1]) * (1 - _half_pow(n - i + 1))
    if x[i - 2] != x[i - 1]:
        return magnitude
    return -magnitude


def f_partition_binary(y: Word, i: int, ambient_n: int) -> Fraction:
    """Rebuild f_n(y) from its two parts split after position i."""
    if y.m != 2:
        raise NotBinary(f"f_partition_binary needs a binary word, got m={y.m}")
    if not 1 <= i <= y.n - 1:
        raise IndexOutOfRange(f"split point must lie in [1, {y.n - 1}], got {i}")
    u, v = y.symbols[:i], y.symbols[i:]
    total = Fraction(_f_n_doubled(u, ambient_n) + _f_n_doubled(v, ambient_n), 2)
    if u[-1] == v[0]:
        return total - ambient_n
    return total - _tail_segment(u) * _head_segment(v)


# -- m-ary case --------------------------------------------------------------

def f_partition_mary_bounds(y: Word, i: int, ambient_n: int) -> tuple[Fraction, Fraction]:
    """Bounds on f_mn(y) from its two parts; exact when y_i == y_{i+1}."""
    m, n = y.m, ambient_n
    if m < 3 or y.n < 3 or n < 2:
        raise DomainTooSmall(f"needs m > 2, len(y) > 2 and n > 1; got m={m}, len={y.n}, n={n}")
    if not 1 <= i <= y.n - 1:
        raise IndexOutOfRange(f"split point must lie in [1, {y.n - 1}], got {i}")
    u, v = y.symbols[:i], y.symbols[i:]
    total = Fraction(_f_mn_doubled(u, n, m) + _f_mn_doubled(v, n, m), 2)
    if u[-1] == v[0]:
        exact = total - m * n + n + 1
        return exact, exact
    return total + 1 - _tail_segment(u) * _head_segment(v), total


def g_mn(i: int, n: int, m: int) -> Fraction:
    """E[f_mn] over a uniform suffix of length n - i (ambient length n).

    The closed form also holds at i = n - 1, where it reduces to mn - n - 1.
    """
    if m < 2:
        raise DomainTooSmall(f"m must be >= 2, got {m}")
    if not 0 <= i <= n - 1:
        raise IndexOutOfRange(f"i must lie in [0, {n - 1}], got {i}")
    r = m ** (n - i)
    return (
        n * (n - i) * (m + Fraction(1, m) - 2)
        - Fraction(n, m)
        + Fraction(1, m - 1)
        - Fraction(1, (m - 1) * r)
        + i
        - Fraction(1, r)
    )


def z0_mary(n: int, m: int) -> Fraction:
    return g_mn(0, n, m)


def z_mary_bounds(prefix: Word, i: int, n: int, m: int | None = None) -> tuple[Fraction, Fraction]:
    """Two-sided bound on Z_i for the m-ary martingale.

    For 1 < i < n this is the sandwich obtained from the partition bounds; at
    i = 1 and i = n the value is known exactly (Z_1 = Z_0, Z_n = f_mn).
    """
    x = _symbols(prefix)
    if m is None:
        if not isinstance(prefix, Word):
            raise ValueError("m is required when the prefix is not a Word")
        m = prefix.m
    if n < 2 or m < 2:
        raise DomainTooSmall(f"needs n > 1 and m >= 2, got n={n}, m={m}")
    if len(x) != i:
        raise PrefixLengthMismatch(f"prefix has length {len(x)}, expected i={i}")
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"i must lie in [1, {n}], got {i}")
    if i == 1:
        z0 = z0_mary(n, m)
        return z0, z0
    f_prefix = Fraction(_f_mn_doubled(x, n, m), 2)
    if i == n:
        return f_prefix, f_prefix
    base = f_prefix + g_mn(i, n, m) - n + Fraction(n, m)
    upper = base + Fraction(1, m)
    lower = base + 1 - Fraction(m - 1, m) * _tail_segment(x) * (2 - Fraction(1, m ** (n - i - 1)))
    return lower, upper


# -- exhaustive oracle -------------------------------------------------------

def z_bruteforce(prefix: Word | Sequence[int] | None, ambient_n: int, m: int, target: str = "mary_f") -> Fraction:
    """Exact E[f(x) | prefix] by enumerating every suffix with uniform weight."""
    if target not in TARGETS:
        raise ValueError(f"target must be one of {TARGETS}, got {target!r}")
    if target == "binary_f" and m != 2:
        raise NotBinary(f"binary_f target needs m=2, got m={m}")
    x = _symbols(prefix)
    n = ambient_n
    k = n - len(x)
    if k < 0:
        raise PrefixLengthMismatch(f"prefix longer than ambient length {n}")
    count = m**k
    if count > MAX_EXHAUSTIVE:
        raise SpaceTooLarge(f"{count} suffixes exceed the enumeration limit {MAX_EXHAUSTIVE}")
    if target == "binary_f":
        total = sum(_f_n_doubled(x + s, n) for s in product(range(2), repeat=k))
    else:
        total = sum(_f_mn_doubled(x + s, n, m) for s in product(range(m), repeat=k))
    return Fraction(total, 2 * count)


# -- traces ------------------------------------------------------------------

@dataclass(frozen=True)
class MartingaleTrace:
    word: Word
    ambient_n: int
    z_values: tuple[Fraction, ...]

    @property
    def increments(self) -> tuple[Fraction, ...]:
        z = self.z_values
        return tuple(z[k] - z[k - 1] for k in range(1, len(z)))

    def to_csv(self) -> str:
        lines = ["i,Z_i,increment"]
        z = self.z_values
        for k, value in enumerate(z):
            inc = "" if k == 0 else str(value - z[k - 1])
            lines.append(f"{k},{value},{inc}")
        return "\n".join(lines)


def martingale_trace(word: Word, method: str = "formula") -> MartingaleTrace:
    """Z_0..Z_n along ``word``.

    ``formula`` uses the binary closed form; ``bruteforce`` enumerates
    suffixes (f_n for binary words, f_mn otherwise).
    """
    n, m = word.n, word.m
    if method == "formula":
        if m != 2:
            raise NotBinary("no closed form for Z_i when m > 2; use method='bruteforce'")
        z = [z_binary(word.symbols[:i], i, n) for i in range(n + 1)]
    elif method == "bruteforce":
        target = "binary_f" if m == 2 else "mary_f"
        z = [z_bruteforce(word.symbols[:i], n, m, target) for i in range(n + 1)]
    else:
        raise ValueError(f"unknown method {method!r}")
    return MartingaleTrace(word=word, ambient_n=n, z_values=tuple(z))


# -- Azuma -------------------------------------------------------------------

def increment_caps(n: int, m: int) -> list[float]:
    """Bounded-difference caps c_1..c_n: c_1 = 0, then n/2 (binary) or n(m + 1/m)."""
    cap = n / 2 if m == 2 else n * (m + 1 / m)
    return [0.0] + [cap] * (n - 1)


def azuma_bound(increment_caps: Sequence[float], lam: float) -> float:
    """exp(-lam^2 / (2 sum c_i^2)), clamped to [0, 1].

    With every cap zero the martingale is constant, so any positive deviation
    is impossible and the bound is 0.
    """
    if lam < 0:
        raise ValueError(f"lambda must be >= 0, got {lam}")
    if lam == 0:
        return 1.0
    denom = 2.0 * math.fsum(c * c for c in increment_caps)
    if denom == 0.0:
        return 0.0
    return min(1.0, max(0.0, math.exp(-lam * lam / denom)))


@dataclass(frozen=True)
class TailBound:
    n: int
    m: int
    c: float
    lam: float
    probability_bound: float

    @property
    def scale(self) -> float:
        """Deviation per unit of c, in ball-size units."""
        return self.lam / self.c if self.c else deviation_scale(self.n, self.m)

    def render(self) -> str:
        return f"lambda={self.lam:.2f} bound={self.probability_bound:.5g}"


def deviation_scale(n: int, m: int) -> float:
    """n sqrt(n-1), times (m + 1/m) for m > 2."""
    base = n * math.sqrt(n - 1)
    return base if m == 2 else (m + 1 / m) * base


def tail_exponent(c: float, m: int) -> float:
    return -2.0 * c * c if m == 2 else -c * c / 2.0


def tail_bound(n: int, m: int, c: float) -> TailBound:
    """Azuma bound on Pr(| |L_1(x)| - E | >= lambda) per tail, for n > 3."""
    if n <= 3:
        raise DomainTooSmall(f"concentration bounds assume n > 3, got n={n}")
    if m < 2:
        raise DomainTooSmall(f"m must be >= 2, got {m}")
    if c < 0:
        raise ValueError(f"c must be >= 0, got {c}")
    return TailBound(
        n=n,
        m=m,
        c=float(c),
        lam=c * deviation_scale(n, m),
        probability_bound=math.exp(tail_exponent(c, m)),
    )
