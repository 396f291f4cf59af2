"""Deletion/insertion spheres, the FLL distance and FLL balls by enumeration.

Everything here follows the definitions literally and is meant as the ground
truth the closed forms in :mod:`fllball.analytic` are checked against.
"""

from __future__ import annotations

from itertools import product
from math import comb
from typing import Iterable, Iterator

from .errors import AlphabetMismatch, LengthMismatch, RadiusTooLarge
from .words import Word, format_word

Symbols = tuple[int, ...]


class WordSet:
    """A sorted, duplicate-free collection of words of one length and alphabet."""

    __slots__ = ("_words", "m", "length")

    def __init__(self, symbol_tuples: Iterable[Symbols], m: int):
        words = sorted(set(symbol_tuples))
        lengths = {len(w) for w in words}
        if len(lengths) > 1:
            raise LengthMismatch(f"word set mixes lengths {sorted(lengths)}")
        self.m = m
        self.length = lengths.pop() if lengths else None
        self._words = tuple(words)

    def __len__(self) -> int:
        return len(self._words)

    def __iter__(self) -> Iterator[Word]:
        for s in self._words:
            yield Word(s, self.m)

    def __contains__(self, item) -> bool:
        symbols = item.symbols if isinstance(item, Word) else tuple(item)
        lo, hi = 0, len(self._words)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._words[mid] < symbols:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(self._words) and self._words[lo] == symbols

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordSet):
            return NotImplemented
        return self.m == other.m and self._words == other._words

    def __repr__(self) -> str:
        return f"WordSet(size={len(self)}, m={self.m}, length={self.length})"

    @property
    def symbol_tuples(self) -> tuple[Symbols, ...]:
        return self._words

    def issubset(self, other: "WordSet") -> bool:
        return set(self._words) <= set(other._words)

    def to_text(self) -> str:
        """Newline-separated words in lexicographic order."""
        return "\n".join(format_word(w) for w in self)


# -- raw set operations on tuples -------------------------------------------

def _delete_one(words: Iterable[Symbols]) -> set[Symbols]:
    out = set()
    for x in words:
        for i in range(len(x)):
            # deleting any symbol of a run gives the same word
            if i == 0 or x[i] != x[i - 1]:
                out.add(x[:i] + x[i + 1 :])
    return out


def _insert_one(words: Iterable[Symbols], m: int) -> set[Symbols]:
    out = set()
    alphabet = range(m)
    for x in words:
        for i in range(len(x) + 1):
            head, tail = x[:i], x[i:]
            for s in alphabet:
                out.add(head + (s,) + tail)
    return out


def _subsequences(x: Symbols, t: int) -> set[Symbols]:
    current = {x}
    for _ in range(t):
        current = _delete_one(current)
    return current


def _supersequences(words: Iterable[Symbols], t: int, m: int) -> set[Symbols]:
    current = set(words)
    for _ in range(t):
        current = _insert_one(current, m)
    return current


def _check_pair(x: Word, y: Word):
    if x.m != y.m:
        raise AlphabetMismatch(f"alphabet sizes differ: {x.m} vs {y.m}")
    if x.n != y.n:
        raise LengthMismatch(f"lengths differ: {x.n} vs {y.n}")


# -- public operations -------------------------------------------------------

def deletion_sphere(x: Word, t: int) -> WordSet:
    """D_t(x): all subsequences of length n - t."""
    if t < 0 or t >= x.n:
        raise RadiusTooLarge(f"deletion radius must satisfy 0 <= t < n={x.n}, got {t}")
    return WordSet(_subsequences(x.symbols, t), x.m)


def insertion_sphere(x: Word, t: int) -> WordSet:
    """I_t(x): all supersequences of length n + t over Z_m."""
    if t < 0:
        raise RadiusTooLarge(f"insertion radius must be >= 0, got {t}")
    return WordSet(_supersequences([x.symbols], t, x.m), x.m)


def insertion_count(n: int, r: int, m: int) -> int:
    """Size of any insertion r-sphere around a length-n word; independent of the word."""
    return sum(comb(n + r, i) * (m - 1) ** i for i in range(r + 1))


def lcs_length(x: Symbols, y: Symbols) -> int:
    """Length of a longest common subsequence, two-row DP."""
    if len(x) < len(y):
        x, y = y, x
    prev = [0] * (len(y) + 1)
    for a in x:
        cur = [0]
        for j, b in enumerate(y):
            if a == b:
                cur.append(prev[j] + 1)
            else:
                cur.append(cur[j] if cur[j] > prev[j + 1] else prev[j + 1])
        prev = cur
    return prev[-1]


def fll_distance(x: Word, y: Word) -> int:
    """d_l(x, y) = n - LCS(x, y)."""
    _check_pair(x, y)
    return x.n - lcs_length(x.symbols, y.symbols)


def fll_distance_definitional(x: Word, y: Word) -> int:
    """Smallest t with D_t(x) and D_t(y) intersecting, grown one t at a time."""
    _check_pair(x, y)
    dx, dy = {x.symbols}, {y.symbols}
    for t in range(x.n + 1):
        if dx & dy:
            return t
        dx, dy = _delete_one(dx), _delete_one(dy)
    # unreachable: D_n of both words is {()}
    raise RadiusTooLarge("distance exceeded word length")


def fll_ball(x: Word, t: int) -> WordSet:
    """L_t(x): every length-n word within FLL distance t of x."""
    n, m = x.n, x.m
    if t < 0 or t > n:
        raise RadiusTooLarge(f"ball radius must satisfy 0 <= t <= n={n}, got {t}")
    if t == 0:
        return WordSet([x.symbols], m)
    if t == n:
        return WordSet(product(range(m), repeat=n), m)
    if t == 1:
        members = {x.symbols}
        for center in _delete_one([x.symbols]):
            members |= _insert_one([center], m)
        return WordSet(members, m)
    members = set()
    for center in _subsequences(x.symbols, t):
        members |= _supersequences([center], t, m)
    return WordSet(members, m)


def fll_ball_size(x: Word, t: int = 1) -> int:
    return len(fll_ball(x, t))
