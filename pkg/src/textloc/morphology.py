"""Binary dilation with rectangular (or arbitrary odd) structuring elements."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .validation import check_mask, check_structuring_element


def rectangle(width: int, height: int) -> np.ndarray:
    """Full-rectangle structuring element of odd width x height."""
    w, h = int(width), int(height)
    if w < 1 or h < 1:
        raise ValueError(f"structuring element sides must be >= 1, got {w}x{h}")
    if w % 2 == 0 or h % 2 == 0:
        raise ValueError(f"structuring element dimensions must be odd, got {w}x{h}")
    return np.ones((h, w), dtype=bool)


def dilate(mask: np.ndarray, se: np.ndarray) -> np.ndarray:
    """Binary dilation: output(p) is set iff the element placed with its
    origin at p covers at least one foreground pixel.

    Out-of-bounds samples are background; dimensions are preserved. With any
    element containing its origin the result is a superset of the input.
    """
    arr = check_mask(mask)
    element = check_structuring_element(se)
    eh, ew = element.shape
    if eh == 1 and ew == 1:
        return arr.copy()
    ry, rx = eh // 2, ew // 2
    h, w = arr.shape
    padded = np.zeros((h + 2 * ry, w + 2 * rx), dtype=bool)
    padded[ry : ry + h, rx : rx + w] = arr
    out = np.zeros((h, w), dtype=bool)
    for dy in range(eh):
        for dx in range(ew):
            if element[dy, dx]:
                out |= padded[dy : dy + h, dx : dx + w]
    return out


class BinaryDilator(BaseEstimator, TransformerMixin):
    """Dilation stage with a scikit-learn transformer API.

    Parameters
    ----------
    element : tuple of int
        (width, height) of a full-rectangle structuring element.
    """

    def __init__(self, element=(3, 3)):
        self.element = element

    def fit(self, X=None, y=None):
        self._make_element()
        return self

    def transform(self, X):
        se = self._make_element()
        if isinstance(X, np.ndarray) and X.ndim == 2:
            return dilate(X, se)
        return [dilate(x, se) for x in X]

    def _make_element(self):
        w, h = self.element
        return rectangle(w, h)
