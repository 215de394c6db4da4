"""Input validation helpers.

Every public entry point funnels its array arguments through these checks so
that shape/dtype errors surface with a consistent message instead of deep in
a numpy kernel.
"""

from __future__ import annotations

import numpy as np


def check_gray_image(img, name: str = "image") -> np.ndarray:
    """Validate an 8-bit single-channel image; returns a uint8 array."""
    arr = np.asarray(img)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D (h, w), got shape {arr.shape}")
    if arr.size == 0:
        raise ValueError(f"{name} must have at least one pixel")
    if arr.dtype == np.uint8:
        return arr
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError(f"{name} must have an integer dtype, got {arr.dtype}")
    if arr.min() < 0 or arr.max() > 255:
        raise ValueError(f"{name} values must lie in [0, 255]")
    return arr.astype(np.uint8)


def check_rgb_image(img, name: str = "image") -> np.ndarray:
    """Validate an 8-bit interleaved RGB image; returns a uint8 array."""
    arr = np.asarray(img)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise ValueError(f"{name} must be 3-D (h, w, 3), got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise ValueError(f"{name} must have at least one pixel")
    if arr.dtype == np.uint8:
        return arr
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError(f"{name} must have an integer dtype, got {arr.dtype}")
    if arr.min() < 0 or arr.max() > 255:
        raise ValueError(f"{name} values must lie in [0, 255]")
    return arr.astype(np.uint8)


def check_mask(mask, name: str = "mask") -> np.ndarray:
    """Validate a binary foreground mask; returns a bool array."""
    arr = np.asarray(mask)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D (h, w), got shape {arr.shape}")
    if arr.dtype == np.bool_:
        return arr
    if np.issubdtype(arr.dtype, np.integer) and np.isin(arr, (0, 1)).all():
        return arr.astype(bool)
    raise ValueError(f"{name} must be boolean or contain only 0/1")


def check_plane(plane, name: str = "plane") -> np.ndarray:
    """Validate a signed integer response plane; returns an int64 array."""
    arr = np.asarray(plane)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D (h, w), got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError(f"{name} must have an integer dtype, got {arr.dtype}")
    return arr.astype(np.int64)


def check_kernel3x3(kernel, name: str = "kernel") -> np.ndarray:
    """Validate a 3x3 integer kernel; returns an int64 array."""
    arr = np.asarray(kernel)
    if arr.shape != (3, 3):
        raise ValueError(f"{name} must be 3x3, got shape {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError(f"{name} must have an integer dtype, got {arr.dtype}")
    return arr.astype(np.int64)


def check_odd_window(window, name: str = "window") -> int:
    """Validate an odd, positive kernel side length."""
    w = int(window)
    if w != window:
        raise ValueError(f"{name} must be an integer, got {window!r}")
    if w < 1:
        raise ValueError(f"{name} must be >= 1, got {w}")
    if w % 2 == 0:
        raise ValueError(f"{name} must be odd, got {w}")
    return w


def check_structuring_element(se, name: str = "structuring element") -> np.ndarray:
    """Validate a structuring element: 2-D boolean, odd sides, origin set."""
    arr = np.asarray(se)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {arr.shape}")
    arr = arr.astype(bool)
    h, w = arr.shape
    if h % 2 == 0 or w % 2 == 0:
        raise ValueError(f"{name} dimensions must be odd, got {w}x{h}")
    if not arr[h // 2, w // 2]:
        raise ValueError(f"{name} origin (center cell) must be set")
    return arr


def check_ratio(value, name: str, *, closed_low: bool = True, closed_high: bool = True) -> float:
    """Validate a dimensionless ratio in the unit interval."""
    v = float(value)
    low_ok = v >= 0.0 if closed_low else v > 0.0
    high_ok = v <= 1.0 if closed_high else v < 1.0
    if not (low_ok and high_ok):
        lo = "[0" if closed_low else "(0"
        hi = "1]" if closed_high else "1)"
        raise ValueError(f"{name} must lie in {lo}, {hi}, got {value!r}")
    return v
