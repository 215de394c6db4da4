"""Region merging and final bounding-box emission.

Merging happens in mask space: surviving component pixels are rasterized onto
a blank canvas, a gap-filling dilation joins nearby fragments, and relabeling
the result yields one text region per connected cluster.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .components import label_components
from .geometry import Rect
from .morphology import dilate
from .validation import check_structuring_element


@dataclass(frozen=True)
class TextRegion:
    """A merged text region: tight box plus the ids of the merged components."""

    box: Rect
    member_labels: frozenset


def rasterize_labels(label_map: np.ndarray, labels) -> np.ndarray:
    """Boolean mask of the pixels carrying any of the given labels."""
    arr = np.asarray(label_map)
    keep = np.zeros(int(arr.max()) + 1 if arr.size else 1, dtype=bool)
    for label in labels:
        keep[label] = True
    return keep[arr]


def merged_mask(components, label_map: np.ndarray, fill_se: np.ndarray) -> np.ndarray:
    """Surviving component pixels after the gap-filling dilation."""
    se = check_structuring_element(fill_se, "fill element")
    canvas = rasterize_labels(label_map, [c.label for c in components])
    return dilate(canvas, se)


def merge_detections(components, label_map: np.ndarray, fill_se: np.ndarray):
    """Merge surviving components into text regions.

    Components whose dilated pixels touch end up in the same region; each
    region's box is the tight bounding box of the dilated cluster, so the
    dilation margin is part of the reported rectangle.

    Returns
    -------
    list of TextRegion
    """
    comps = list(components)
    if not comps:
        return []
    filled = merged_mask(comps, label_map, fill_se)
    region_map, region_comps = label_components(filled)

    # every pixel of an original component lands in exactly one region
    members: dict[int, set] = {rc.label: set() for rc in region_comps}
    for comp in comps:
        ys, xs = np.nonzero(label_map == comp.label)
        region = int(region_map[ys[0], xs[0]])
        members[region].add(comp.label)

    return [
        TextRegion(box=rc.bbox, member_labels=frozenset(members[rc.label]))
        for rc in region_comps
    ]


def localize(regions) -> list[Rect]:
    """Region boxes sorted by (y, x) for deterministic output order."""
    return [r.box for r in sorted(regions, key=lambda r: (r.box.y, r.box.x))]


def render_overlay(image: np.ndarray, boxes, color=(255, 0, 0)) -> np.ndarray:
    """Draw 1-pixel box borders onto an image, returning an RGB copy."""
    arr = np.asarray(image)
    if arr.ndim == 2:
        rgb = np.stack([arr] * 3, axis=2).astype(np.uint8)
    else:
        rgb = arr.astype(np.uint8).copy()
    h, w = rgb.shape[:2]
    col = np.asarray(color, dtype=np.uint8)
    for box in boxes:
        x0, y0 = max(box.x, 0), max(box.y, 0)
        x1, y1 = min(box.x2, w), min(box.y2, h)
        if x0 >= x1 or y0 >= y1:
            continue
        rgb[y0, x0:x1] = col
        rgb[y1 - 1, x0:x1] = col
        rgb[y0:y1, x0] = col
        rgb[y0:y1, x1 - 1] = col
    return rgb
