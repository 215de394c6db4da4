"""Global thresholding with Otsu's method.

The threshold is picked by exhaustively scoring all 256 candidate cuts with
the between-class variance w0*w1*(mu0 - mu1)^2, which is maximized exactly
when the intra-class variance is minimized. Class 0 holds the pixels <= t,
class 1 the pixels > t. Scores are compared in exact integer arithmetic
(cross-multiplied rationals) so the selected threshold never depends on
floating-point rounding; ties go to the smallest t.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .validation import check_gray_image


def histogram(img: np.ndarray) -> np.ndarray:
    """Exact per-intensity pixel counts; counts[v] pixels have value v."""
    arr = check_gray_image(img)
    return np.bincount(arr.ravel(), minlength=256).astype(np.int64)


def otsu_threshold(hist) -> int:
    """Threshold maximizing the between-class variance of a 256-bin histogram.

    Candidates whose split leaves a class empty score zero. If the histogram
    is populated at a single intensity (both classes degenerate for every
    cut), that intensity is returned.
    """
    counts = np.asarray(hist)
    if counts.shape != (256,):
        raise ValueError(f"histogram must have 256 bins, got shape {counts.shape}")
    if (counts < 0).any():
        raise ValueError("histogram counts must be nonnegative")
    counts = [int(c) for c in counts]
    total = sum(counts)
    if total == 0:
        raise ValueError("empty histogram: total count must be >= 1")

    populated = [v for v in range(256) if counts[v] > 0]
    if len(populated) == 1:
        return populated[0]

    grand_sum = sum(v * c for v, c in enumerate(counts))
    best_t = 0
    best_num, best_den = -1, 1  # between-class variance as num/den, scaled by total^2
    c0 = 0
    s0 = 0
    for t in range(256):
        c0 += counts[t]
        s0 += t * counts[t]
        c1 = total - c0
        if c0 == 0 or c1 == 0:
            num, den = 0, 1
        else:
            diff = s0 * c1 - (grand_sum - s0) * c0
            num, den = diff * diff, c0 * c1
        if num * best_den > best_num * den:
            best_num, best_den = num, den
            best_t = t
    return best_t


def apply_threshold(img: np.ndarray, threshold: int) -> np.ndarray:
    """Boolean mask of the pixels strictly above the threshold."""
    arr = check_gray_image(img)
    t = int(threshold)
    if not 0 <= t <= 255:
        raise ValueError(f"threshold must lie in [0, 255], got {threshold!r}")
    return arr > t


class OtsuBinarizer(BaseEstimator, TransformerMixin):
    """Gray image -> boolean foreground mask at the Otsu threshold."""

    def fit(self, X=None, y=None):
        return self

    def transform(self, X):
        if isinstance(X, np.ndarray) and X.ndim == 2:
            return self._binarize(X)
        return [self._binarize(x) for x in X]

    def _binarize(self, img):
        return apply_threshold(img, otsu_threshold(histogram(img)))
