"""scikit-learn compatible wrappers.

Rows of ``X`` are words over Z_m (see :func:`fllball._validation.check_words`),
so these compose with pipelines, ``clone`` and ``get_params``.
"""

from __future__ import annotations

from collections import Counter

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from . import metric
from ._validation import check_words
from .analytic import _ball_size_doubled, expected_ball_size
from .errors import DomainTooSmall, FormulaUnavailable
from .martingale import azuma_bound, deviation_scale, increment_caps
from .montecarlo import DEFAULT_C_GRID, tail_rows
from .words import Word, _rho, _segment_lengths

PROFILE_FEATURES = ("rho", "a", "sum_s", "sum_s2", "h", "t")


class SegmentProfileTransformer(TransformerMixin, BaseEstimator):
    """Map each word to its run / alternating-segment statistics."""

    def __init__(self, m=2):
        self.m = m

    def fit(self, X, y=None):
        X = check_words(X, self.m)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        X = check_words(X, self.m)
        out = np.empty((X.shape[0], len(PROFILE_FEATURES)), dtype=np.int64)
        for k, row in enumerate(X.tolist()):
            segs = _segment_lengths(row)
            out[k] = (_rho(row), len(segs), sum(segs), sum(s * s for s in segs), segs[0], segs[-1])
        return out

    def get_feature_names_out(self, input_features=None):
        return np.array(PROFILE_FEATURES, dtype=object)


class BallSizeTransformer(TransformerMixin, BaseEstimator):
    """Map each word to the size of its FLL ball.

    ``method="formula"`` uses the closed form (radius one only);
    ``"enumerate"`` builds the ball explicitly.
    """

    def __init__(self, m=2, radius=1, method="formula"):
        self.m = m
        self.radius = radius
        self.method = method

    def fit(self, X, y=None):
        if self.method not in ("formula", "enumerate"):
            raise ValueError(f"method must be 'formula' or 'enumerate', got {self.method!r}")
        if self.method == "formula" and self.radius != 1:
            raise FormulaUnavailable("closed form is only known for radius 1")
        X = check_words(X, self.m)
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        check_is_fitted(self, "n_features_in_")
        X = check_words(X, self.m)
        if self.method == "formula":
            sizes = [_ball_size_doubled(row, self.m) // 2 for row in X.tolist()]
        else:
            sizes = [len(metric.fll_ball(Word(tuple(row), self.m), self.radius)) for row in X.tolist()]
        return np.asarray(sizes, dtype=np.int64).reshape(-1, 1)

    def get_feature_names_out(self, input_features=None):
        return np.array([f"ball_size_r{self.radius}"], dtype=object)


class BallSizeConcentration(BaseEstimator):
    """Empirical distribution of |L_1| over a sample of words, set against Azuma.

    After ``fit`` the estimator holds the histogram, the sample and exact
    means, and one tail row per threshold in ``c_grid``.
    """

    def __init__(self, m=2, c_grid=DEFAULT_C_GRID):
        self.m = m
        self.c_grid = c_grid

    def fit(self, X, y=None):
        X = check_words(X, self.m)
        n = X.shape[1]
        if n <= 3:
            raise DomainTooSmall(f"concentration bounds assume n > 3, got n={n}")
        sizes = [_ball_size_doubled(row, self.m) // 2 for row in X.tolist()]
        self.n_features_in_ = n
        self.histogram_ = dict(sorted(Counter(sizes).items()))
        self.mean_ = float(np.mean(sizes))
        self.expected_mean_ = float(expected_ball_size(n, self.m))
        self.scale_ = deviation_scale(n, self.m)
        self.tail_table_ = tail_rows(self.histogram_, n, self.m, sorted(self.c_grid))
        return self

    def score_samples(self, X):
        """Signed deviation from the exact mean, in units of c."""
        check_is_fitted(self, "histogram_")
        sizes = BallSizeTransformer(m=self.m).fit_transform(X).ravel()
        return (sizes - self.expected_mean_) / self.scale_

    def bound_samples(self, X):
        """Azuma bound on the probability of a one-sided deviation at least this large."""
        c = np.abs(self.score_samples(X))
        caps = increment_caps(self.n_features_in_, self.m)
        return np.array([azuma_bound(caps, ci * self.scale_) for ci in c])
