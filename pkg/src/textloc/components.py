"""8-connected component labeling and false-positive pruning rules.

Labeling is a two-pass raster scan: the first pass assigns provisional labels
and records equivalences in a union-find forest (union by smallest id, path
compression); the second pass renumbers so final labels 1..K appear in
raster-scan first-encounter order. The scan itself runs over flat Python
lists, statistics are gathered with vectorized numpy reductions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import Rect
from .validation import check_mask, check_ratio


@dataclass(frozen=True)
class Component:
    """A labeled 8-connected foreground region.

    ``edge_pixel_count`` counts the region's pixels that are set in the edge
    reference mask handed to :func:`label_components` (the pre-dilation
    binarized edge map in the detection pipeline); ``edge_density`` is that
    count divided by the bounding-box area.
    """

    label: int
    area: int
    bbox: Rect
    edge_pixel_count: int
    edge_density: float


def _find(parent: list, i: int) -> int:
    root = i
    while parent[root] != root:
        root = parent[root]
    while parent[i] != root:
        parent[i], i = root, parent[i]
    return root


def label_components(mask: np.ndarray, edge_mask: np.ndarray | None = None):
    """Label 8-connected foreground regions.

    Parameters
    ----------
    mask : np.ndarray
        2-D boolean foreground mask.
    edge_mask : np.ndarray, optional
        Reference mask for per-component edge statistics. When omitted the
        mask itself is used, so ``edge_pixel_count`` equals the area.

    Returns
    -------
    (np.ndarray, list of Component)
        Label map (0 = background, labels 1..K in raster first-encounter
        order) and the per-component statistics.
    """
    arr = check_mask(mask)
    h, w = arr.shape
    if edge_mask is None:
        edges = arr
    else:
        edges = check_mask(edge_mask, "edge_mask")
        if edges.shape != arr.shape:
            raise ValueError(f"edge_mask shape {edges.shape} != mask shape {arr.shape}")

    ys, xs = np.nonzero(arr)
    label_map = np.zeros((h, w), dtype=np.int64)
    if len(ys) == 0:
        return label_map, []

    prov = [0] * (h * w)
    parent = [0]
    next_label = 1
    for y, x in zip(ys.tolist(), xs.tolist()):
        idx = y * w + x
        west = prov[idx - 1] if x > 0 else 0
        if y > 0:
            up = idx - w
            nw = prov[up - 1] if x > 0 else 0
            north = prov[up]
            ne = prov[up + 1] if x + 1 < w else 0
        else:
            nw = north = ne = 0
        if not (west or nw or north or ne):
            parent.append(next_label)
            prov[idx] = next_label
            next_label += 1
            continue
        roots = {_find(parent, n) for n in (west, nw, north, ne) if n}
        target = min(roots)
        prov[idx] = target
        for r in roots:
            if r != target:
                parent[r] = target

    root_of = [0] * next_label
    for i in range(1, next_label):
        root_of[i] = _find(parent, i)
    ranks = {r: k + 1 for k, r in enumerate(sorted(set(root_of[1:])))}
    lut = np.zeros(next_label, dtype=np.int64)
    for i in range(1, next_label):
        lut[i] = ranks[root_of[i]]
    label_map = lut[np.asarray(prov, dtype=np.int64).reshape(h, w)]

    k = len(ranks)
    labels_at = label_map[ys, xs]
    areas = np.bincount(labels_at, minlength=k + 1)
    min_x = np.full(k + 1, w, dtype=np.int64)
    max_x = np.full(k + 1, -1, dtype=np.int64)
    min_y = np.full(k + 1, h, dtype=np.int64)
    max_y = np.full(k + 1, -1, dtype=np.int64)
    np.minimum.at(min_x, labels_at, xs)
    np.maximum.at(max_x, labels_at, xs)
    np.minimum.at(min_y, labels_at, ys)
    np.maximum.at(max_y, labels_at, ys)
    edge_counts = np.bincount(label_map[edges & arr], minlength=k + 1)

    comps = []
    for label in range(1, k + 1):
        bbox = Rect(
            int(min_x[label]),
            int(min_y[label]),
            int(max_x[label] - min_x[label] + 1),
            int(max_y[label] - min_y[label] + 1),
        )
        count = int(edge_counts[label])
        comps.append(
            Component(
                label=label,
                area=int(areas[label]),
                bbox=bbox,
                edge_pixel_count=count,
                edge_density=count / bbox.area,
            )
        )
    return label_map, comps


def prune_small(components, fraction: float = 0.20):
    """Drop components whose area falls below ``fraction`` of the mean area.

    A component is kept iff area >= fraction * mean(area); an empty input
    yields an empty output.
    """
    check_ratio(fraction, "fraction", closed_low=False, closed_high=False)
    comps = list(components)
    if not comps:
        return []
    mean = sum(c.area for c in comps) / len(comps)
    cutoff = fraction * mean
    return [c for c in comps if c.area >= cutoff]


def prune_low_edge_density(components, min_density: float):
    """Keep only components whose edge density reaches ``min_density``."""
    check_ratio(min_density, "min_density")
    return [c for c in components if c.edge_density >= min_density]
