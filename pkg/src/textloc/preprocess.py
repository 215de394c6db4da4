"""Impulse-noise removal by median filtering."""

from __future__ import annotations

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view
from sklearn.base import BaseEstimator, TransformerMixin

from .validation import check_gray_image, check_odd_window


def median_filter(img: np.ndarray, window: int = 3) -> np.ndarray:
    """Replace each pixel with the median of its window x window neighborhood.

    Out-of-bounds samples replicate the nearest edge pixel, so the output has
    the input's dimensions. The window must be odd; the sample count is then
    odd too and the median is always one of the neighborhood values.

    Parameters
    ----------
    img : np.ndarray
        2-D uint8 image.
    window : int
        Odd kernel side length; ``window=1`` is the identity.
    """
    arr = check_gray_image(img)
    w = check_odd_window(window)
    if w == 1:
        return arr.copy()
    r = w // 2
    padded = np.pad(arr, r, mode="edge")
    windows = sliding_window_view(padded, (w, w))
    # odd sample count: np.median selects the middle order statistic exactly
    med = np.median(windows.reshape(arr.shape[0], arr.shape[1], w * w), axis=2)
    return med.astype(np.uint8)


class MedianSmoother(BaseEstimator, TransformerMixin):
    """Stateless median-filter stage with a scikit-learn transformer API.

    Parameters
    ----------
    window : int
        Odd neighborhood side length, default 3.
    """

    def __init__(self, window: int = 3):
        self.window = window

    def fit(self, X=None, y=None):
        check_odd_window(self.window)
        return self

    def transform(self, X):
        """Filter one 2-D image or a sequence of them."""
        if isinstance(X, np.ndarray) and X.ndim == 2:
            return median_filter(X, self.window)
        return [median_filter(x, self.window) for x in X]
