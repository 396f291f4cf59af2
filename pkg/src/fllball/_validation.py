"""Input coercion for the estimator layer."""

from __future__ import annotations

import numpy as np
from sklearn.utils import check_array

from .errors import AlphabetTooSmall, LengthMismatch, SymbolOutOfRange
from .words import Word, parse_word


def check_words(X, m: int) -> np.ndarray:
    """Coerce words to a 2-D int64 array of shape (n_samples, n).

    Accepts a 2-D integer array-like, a sequence of :class:`Word`, or a
    sequence of word strings (digits for m <= 10, comma-separated otherwise).
    """
    if m < 2:
        raise AlphabetTooSmall(f"alphabet size must be >= 2, got {m}")
    if isinstance(X, (str, Word)):
        raise TypeError("expected a collection of words, got a single word")
    if len(X) and isinstance(X[0], Word):
        if any(w.m != m for w in X):
            raise SymbolOutOfRange(f"words do not all use alphabet Z_{m}")
        rows = [w.symbols for w in X]
    elif len(X) and isinstance(X[0], str):
        rows = [parse_word(s, m).symbols for s in X]
    else:
        rows = X
    if len(rows) and len({len(r) for r in rows}) > 1:
        raise LengthMismatch("all words must have the same length")
    arr = check_array(rows, dtype=np.int64, ensure_min_samples=1)
    if arr.size and (arr.min() < 0 or arr.max() >= m):
        raise SymbolOutOfRange(f"symbols must lie in [0, {m - 1}]")
    return arr
