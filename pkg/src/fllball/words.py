"""Words over Z_m and their run / alternating-segment statistics.

A word is stored as a tuple of ints together with its alphabet size.  All
statistics are recomputed on demand; the words we deal with are short.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .errors import AlphabetTooSmall, EmptyWord, SymbolOutOfRange

MAX_ALPHABET = 1 << 16


@dataclass(frozen=True, order=True)
class Word:
    """An immutable m-ary word.

    Ordering is lexicographic on ``symbols`` and then on ``m``, which gives
    word sets a deterministic canonical order.
    """

    symbols: tuple[int, ...]
    m: int

    def __post_init__(self):
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))
        if self.m < 2:
            raise AlphabetTooSmall(f"alphabet size must be >= 2, got {self.m}")
        if self.m > MAX_ALPHABET:
            raise AlphabetTooSmall(f"alphabet size must be <= {MAX_ALPHABET}, got {self.m}")
        if not self.symbols:
            raise EmptyWord("words must have length >= 1")
        for s in self.symbols:
            if not 0 <= s < self.m:
                raise SymbolOutOfRange(f"symbol {s} is not in Z_{self.m}")

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, index):
        return self.symbols[index]

    def __str__(self) -> str:
        return format_word(self)

    @property
    def n(self) -> int:
        return len(self.symbols)

    def segment(self, i: int, j: int) -> "Word":
        """Return the subword x_[i, j] using 1-based inclusive indices."""
        if not 1 <= i <= j <= self.n:
            raise IndexError(f"invalid segment [{i}, {j}] of a length-{self.n} word")
        return Word(self.symbols[i - 1 : j], self.m)

    def profile(self) -> "SegmentProfile":
        return profile(self)


@dataclass(frozen=True)
class SegmentProfile:
    rho: int
    a: int
    segment_lengths: tuple[int, ...]
    h: int
    t: int
    run_lengths: tuple[int, ...]

    @property
    def sum_s(self) -> int:
        return sum(self.segment_lengths)

    @property
    def sum_s2(self) -> int:
        return sum(s * s for s in self.segment_lengths)

    def render(self) -> str:
        s = ",".join(str(v) for v in self.segment_lengths)
        return f"rho={self.rho} a={self.a} s=[{s}] h={self.h} t={self.t}"


def make_word(symbols: Sequence[int], m: int) -> Word:
    return Word(tuple(int(s) for s in symbols), int(m))


def parse_word(text: str, m: int) -> Word:
    """Parse ``"001100101"`` (m <= 10) or ``"12,0,7"`` (any m)."""
    text = text.strip()
    if "," in text or m > 10:
        parts = [p.strip() for p in text.split(",") if p.strip()]
        symbols = [int(p) for p in parts]
    else:
        if not text.isdigit() and text:
            raise SymbolOutOfRange(f"cannot parse {text!r} as a word over Z_{m}")
        symbols = [int(ch) for ch in text]
    return make_word(symbols, m)


def format_word(w: Word) -> str:
    if w.m <= 10:
        return "".join(str(s) for s in w.symbols)
    return ",".join(str(s) for s in w.symbols)


def all_words(n: int, m: int) -> Iterator[Word]:
    """Every word of Z_m^n in lexicographic order."""
    for symbols in product(range(m), repeat=n):
        yield Word(symbols, m)


# -- raw statistics on symbol tuples ---------------------------------------
# These skip validation and are the hot path for enumeration and sampling.

def _run_lengths(x: Sequence[int]) -> list[int]:
    runs = []
    count = 1
    for k in range(1, len(x)):
        if x[k] == x[k - 1]:
            count += 1
        else:
            runs.append(count)
            count = 1
    runs.append(count)
    return runs


def _segment_lengths(x: Sequence[int]) -> list[int]:
    # A segment breaks at k either because x_k == x_{k-1} (next segment starts
    # at k) or because x_k != x_{k-2} (next segment starts at k-1, sharing
    # one symbol with the previous one).
    lengths = []
    start = 0
    for k in range(1, len(x)):
        if x[k] == x[k - 1]:
            lengths.append(k - start)
            start = k
        elif k - start >= 2 and x[k] != x[k - 2]:
            lengths.append(k - start)
            start = k - 1
    lengths.append(len(x) - start)
    return lengths


def _rho(x: Sequence[int]) -> int:
    return 1 + sum(1 for k in range(1, len(x)) if x[k] != x[k - 1])


def _tail_segment(x: Sequence[int]) -> int:
    """Length of the last alternating segment, t(x)."""
    n = len(x)
    if n == 1:
        return 1
    if x[-1] == x[-2]:
        return 1
    k = n - 2
    while k >= 1 and x[k - 1] != x[k] and x[k - 1] == x[k + 1]:
        k -= 1
    return n - k


def _head_segment(x: Sequence[int]) -> int:
    """Length of the first alternating segment, h(x)."""
    return _tail_segment(x[::-1])


def _is_alternating(x: Sequence[int]) -> bool:
    if len(x) == 1:
        return True
    a, b = x[0], x[1]
    if a == b:
        return False
    return all(s == (a if k % 2 == 0 else b) for k, s in enumerate(x))


# -- public operations -------------------------------------------------------

def profile(w: Word) -> SegmentProfile:
    runs = _run_lengths(w.symbols)
    segs = _segment_lengths(w.symbols)
    return SegmentProfile(
        rho=len(runs),
        a=len(segs),
        segment_lengths=tuple(segs),
        h=segs[0],
        t=segs[-1],
        run_lengths=tuple(runs),
    )


def brute_force_profile(w: Word) -> SegmentProfile:
    """Profile computed from the definitions, for use as a test oracle.

    Every interval [i, j] is tested for the form abab... directly and only the
    inclusion-maximal ones are kept.  Quartic in n; keep n small.
    """
    x = w.symbols
    n = len(x)
    alternating = [(i, j) for i in range(n) for j in range(i, n) if _is_alternating(x[i : j + 1])]
    maximal = [
        (i, j)
        for (i, j) in alternating
        if not any((k, l) != (i, j) and k <= i and j <= l for (k, l) in alternating)
    ]
    maximal.sort()
    segs = tuple(j - i + 1 for i, j in maximal)

    runs = []
    i = 0
    while i < n:
        j = i
        while j + 1 < n and x[j + 1] == x[i]:
            j += 1
        runs.append(j - i + 1)
        i = j + 1

    return SegmentProfile(
        rho=len(runs),
        a=len(segs),
        segment_lengths=segs,
        h=segs[0],
        t=segs[-1],
        run_lengths=tuple(runs),
    )


def shift_word(w: Word, k: int) -> Word:
    return Word(tuple((s + k) % w.m for s in w.symbols), w.m)


def reverse_word(w: Word) -> Word:
    return Word(w.symbols[::-1], w.m)


def h(w: Word) -> int:
    return _head_segment(w.symbols)


def t(w: Word) -> int:
    return _tail_segment(w.symbols)
