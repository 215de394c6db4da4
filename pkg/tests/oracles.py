"""Independent reference implementations used to cross-check the package.

Everything here is deliberately naive (per-pixel loops, from-scratch scans,
exact rational arithmetic) and shares no code with the shipped kernels.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def correlate3x3_naive(img, kernel) -> np.ndarray:
    """Triple-loop 3x3 correlation with replicate borders, exact int64."""
    arr = np.asarray(img, dtype=np.int64)
    k = np.asarray(kernel, dtype=np.int64)
    h, w = arr.shape
    out = np.zeros((h, w), dtype=np.int64)
    for y in range(h):
        for x in range(w):
            acc = 0
            for dy in (-1, 0, 1):
                for dx in (-1, 0, 1):
                    ny = min(max(y + dy, 0), h - 1)
                    nx = min(max(x + dx, 0), w - 1)
                    acc += int(k[dy + 1, dx + 1]) * int(arr[ny, nx])
            out[y, x] = acc
    return out


def median_brute(img, window: int) -> np.ndarray:
    """Gather each neighborhood explicitly and take sorted()[middle]."""
    arr = np.asarray(img)
    h, w = arr.shape
    r = window // 2
    out = np.zeros_like(arr)
    for y in range(h):
        for x in range(w):
            vals = []
            for dy in range(-r, r + 1):
                for dx in range(-r, r + 1):
                    ny = min(max(y + dy, 0), h - 1)
                    nx = min(max(x + dx, 0), w - 1)
                    vals.append(int(arr[ny, nx]))
            vals.sort()
            out[y, x] = vals[len(vals) // 2]
    return out


def otsu_exhaustive(hist) -> int:
    """Exhaustive 256-threshold scan minimizing the intra-class variance.

    For each cut the class sums are recomputed from scratch and the
    equivalent objective s0^2/c0 + s1^2/c1 is maximized with exact integer
    cross-multiplication; ties go to the smallest threshold. A
    single-intensity histogram returns that intensity.
    """
    h = np.asarray(hist, dtype=np.int64)
    total = int(h.sum())
    if total == 0:
        raise ValueError("empty histogram")
    populated = np.nonzero(h)[0]
    if len(populated) == 1:
        return int(populated[0])
    weighted = h * np.arange(256, dtype=np.int64)
    best_t, best_num, best_den = 0, -1, 1
    for t in range(256):
        c0 = int(h[: t + 1].sum())
        c1 = total - c0
        if c0 == 0 or c1 == 0:
            num, den = 0, 1
        else:
            s0 = int(weighted[: t + 1].sum())
            s1 = int(weighted[t + 1 :].sum())
            num = s0 * s0 * c1 + s1 * s1 * c0
            den = c0 * c1
        if num * best_den > best_num * den:
            best_t, best_num, best_den = t, num, den
    return best_t


def otsu_between_class_fraction(hist) -> int:
    """Direct between-class-variance maximization with Fraction arithmetic."""
    h = [int(c) for c in np.asarray(hist)]
    total = sum(h)
    if total == 0:
        raise ValueError("empty histogram")
    populated = [v for v, c in enumerate(h) if c]
    if len(populated) == 1:
        return populated[0]
    best_t, best = 0, Fraction(-1)
    for t in range(256):
        c0 = sum(h[: t + 1])
        c1 = total - c0
        if c0 == 0 or c1 == 0:
            score = Fraction(0)
        else:
            s0 = sum(v * h[v] for v in range(t + 1))
            s1 = sum(v * h[v] for v in range(t + 1, 256))
            mu0 = Fraction(s0, c0)
            mu1 = Fraction(s1, c1)
            score = Fraction(c0 * c1, total * total) * (mu0 - mu1) ** 2
        if score > best:
            best, best_t = score, t
    return best_t


def dilate_probe(mask, se) -> np.ndarray:
    """Per-pixel probe: set iff the element over p covers a foreground pixel."""
    arr = np.asarray(mask, dtype=bool)
    element = np.asarray(se, dtype=bool)
    h, w = arr.shape
    eh, ew = element.shape
    ry, rx = eh // 2, ew // 2
    out = np.zeros((h, w), dtype=bool)
    for y in range(h):
        for x in range(w):
            hit = False
            for dy in range(eh):
                for dx in range(ew):
                    if not element[dy, dx]:
                        continue
                    ny, nx = y + dy - ry, x + dx - rx
                    if 0 <= ny < h and 0 <= nx < w and arr[ny, nx]:
                        hit = True
                        break
                if hit:
                    break
            out[y, x] = hit
    return out


def flood_components(mask) -> list:
    """Stack-based 8-connected flood fill; returns pixel sets per component."""
    arr = np.asarray(mask, dtype=bool)
    h, w = arr.shape
    seen = np.zeros((h, w), dtype=bool)
    comps = []
    for y in range(h):
        for x in range(w):
            if not arr[y, x] or seen[y, x]:
                continue
            stack = [(y, x)]
            seen[y, x] = True
            pixels = []
            while stack:
                cy, cx = stack.pop()
                pixels.append((cy, cx))
                for dy in (-1, 0, 1):
                    for dx in (-1, 0, 1):
                        ny, nx = cy + dy, cx + dx
                        if 0 <= ny < h and 0 <= nx < w and arr[ny, nx] and not seen[ny, nx]:
                            seen[ny, nx] = True
                            stack.append((ny, nx))
            comps.append(frozenset(pixels))
    return comps


def pixel_intersection_area(a, b) -> int:
    """Count the integer pixels covered by both rects by explicit rastering."""
    count = 0
    for y in range(a.y, a.y + a.h):
        for x in range(a.x, a.x + a.w):
            if b.x <= x < b.x + b.w and b.y <= y < b.y + b.h:
                count += 1
    return count


def make_text_image(shape, bars, bg=235, fg=15):
    """Synthetic 'text' image: 2-px strokes every 4 px inside each bar.

    Returns the uint8 image and the boolean stroke mask.
    """
    img = np.full(shape, bg, dtype=np.uint8)
    strokes = np.zeros(shape, dtype=bool)
    for x, y, w, h in bars:
        for sx in range(x, x + w - 1, 4):
            strokes[y : y + h, sx : min(sx + 2, x + w)] = True
    img[strokes] = fg
    return img, strokes


def coverage_of_strokes(boxes, strokes) -> float:
    """Fraction of stroke pixels covered by the union of the boxes."""
    covered = np.zeros_like(strokes, dtype=bool)
    h, w = strokes.shape
    for b in boxes:
        covered[max(b.y, 0) : min(b.y + b.h, h), max(b.x, 0) : min(b.x + b.w, w)] = True
    total = int(strokes.sum())
    if total == 0:
        return 1.0
    return int((covered & strokes).sum()) / total
