"""Sobel gradients and edge emphasis.

The two 3x3 Sobel kernels measure the horizontal (gx) and vertical (gy)
intensity derivatives. Their responses combine into a gradient magnitude,
either exact (sqrt(gx^2 + gy^2), rounded half-up) or the cheaper
approximation |gx| + |gy|, and the magnitude map is rescaled onto the full
8-bit range so the sharpest transitions become the brightest pixels.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin

from .validation import check_gray_image, check_kernel3x3, check_plane

SOBEL_GX = np.array([[-1, 0, 1], [-2, 0, 2], [-1, 0, 1]], dtype=np.int64)
SOBEL_GY = SOBEL_GX.T.copy()

MAGNITUDE_MODES = ("exact", "approx")


@dataclass(frozen=True)
class GradientMap:
    """Signed per-pixel Sobel responses plus their nonnegative magnitude."""

    gx: np.ndarray
    gy: np.ndarray
    magnitude: np.ndarray

    @property
    def shape(self):
        return self.gx.shape


def convolve3x3(img: np.ndarray, kernel) -> np.ndarray:
    """Correlate an image with a 3x3 integer kernel, replicating borders.

    The coefficient at (+1, +1) multiplies the pixel down-right of center.
    Arithmetic is exact int64 with no clamping. Accepts any 2-D integer
    array, not just uint8, so linear combinations of images stay exact.
    """
    arr = np.asarray(img)
    if arr.ndim != 2:
        raise ValueError(f"image must be 2-D, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError(f"image must have an integer dtype, got {arr.dtype}")
    k = check_kernel3x3(kernel)
    padded = np.pad(arr.astype(np.int64), 1, mode="edge")
    h, w = arr.shape
    out = np.zeros((h, w), dtype=np.int64)
    for dy in range(3):
        for dx in range(3):
            c = int(k[dy, dx])
            if c:
                out += c * padded[dy : dy + h, dx : dx + w]
    return out


def gradient_magnitude(gx: np.ndarray, gy: np.ndarray, mode: str = "approx") -> np.ndarray:
    """Combine directional responses into a nonnegative magnitude plane.

    ``exact`` computes sqrt(gx^2 + gy^2) and rounds half-up to an integer;
    ``approx`` computes |gx| + |gy| in exact integer arithmetic.
    """
    gx = check_plane(gx, "gx")
    gy = check_plane(gy, "gy")
    if gx.shape != gy.shape:
        raise ValueError(f"gx/gy dimension mismatch: {gx.shape} vs {gy.shape}")
    if mode == "approx":
        return np.abs(gx) + np.abs(gy)
    if mode == "exact":
        mag = np.sqrt(gx.astype(np.float64) ** 2 + gy.astype(np.float64) ** 2)
        return np.floor(mag + 0.5).astype(np.int64)
    raise ValueError(f"mode must be one of {MAGNITUDE_MODES}, got {mode!r}")


def sobel_gradients(img: np.ndarray, mode: str = "approx") -> GradientMap:
    """Apply both Sobel kernels and fill the magnitude per the chosen mode."""
    arr = check_gray_image(img)
    gx = convolve3x3(arr, SOBEL_GX)
    gy = convolve3x3(arr, SOBEL_GY)
    return GradientMap(gx=gx, gy=gy, magnitude=gradient_magnitude(gx, gy, mode))


def edge_emphasize(magnitude: np.ndarray) -> np.ndarray:
    """Rescale a nonnegative magnitude plane linearly onto [0, 255].

    Rounding is half-up, computed in integer arithmetic:
    out = (2*255*v + m) // (2*m) for m = max(magnitude). An all-zero plane
    maps to an all-zero image.
    """
    mag = check_plane(magnitude, "magnitude")
    if (mag < 0).any():
        raise ValueError("magnitude values must be nonnegative")
    m = int(mag.max())
    if m == 0:
        return np.zeros(mag.shape, dtype=np.uint8)
    scaled = (510 * mag + m) // (2 * m)
    return scaled.astype(np.uint8)


class EdgeEmphasizer(BaseEstimator, TransformerMixin):
    """Gray image -> emphasized Sobel edge image, as a transformer.

    Parameters
    ----------
    magnitude : str
        ``"approx"`` (|gx| + |gy|, default) or ``"exact"``.
    """

    def __init__(self, magnitude: str = "approx"):
        self.magnitude = magnitude

    def fit(self, X=None, y=None):
        if self.magnitude not in MAGNITUDE_MODES:
            raise ValueError(f"magnitude must be one of {MAGNITUDE_MODES}, got {self.magnitude!r}")
        return self

    def transform(self, X):
        if isinstance(X, np.ndarray) and X.ndim == 2:
            return self._emphasize(X)
        return [self._emphasize(x) for x in X]

    def _emphasize(self, img):
        return edge_emphasize(sobel_gradients(img, self.magnitude).magnitude)
