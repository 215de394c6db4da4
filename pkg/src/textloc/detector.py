"""End-to-end text localization estimator.

The :class:`TextDetector` runs the full stage sequence on a gray or RGB
image: median preprocessing, Sobel edge emphasis, Otsu binarization,
component-bridging dilation, 8-connected labeling, false-positive pruning
(area fraction and edge density), gap-filling merge, and bounding-box
emission. It is stateless; ``fit`` only validates parameters, so the class
clones and composes like any scikit-learn estimator.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from sklearn.base import BaseEstimator

from . import io as tio
from .binarize import apply_threshold, histogram, otsu_threshold
from .components import label_components, prune_low_edge_density, prune_small
from .edge import MAGNITUDE_MODES, edge_emphasize, sobel_gradients
from .localize import localize, merge_detections, merged_mask, render_overlay
from .morphology import dilate, rectangle
from .preprocess import median_filter
from .validation import check_odd_window, check_ratio

SNAPSHOT_SEQUENCE = (
    "gray",
    "median",
    "edges",
    "binary",
    "bridged",
    "components",
    "regions",
    "overlay",
)


class StageError(RuntimeError):
    """A pipeline stage failed; carries the stage name for diagnostics."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"stage '{stage}': {message}")
        self.stage = stage


@dataclass
class PipelineStages:
    """Intermediate artifacts of one detection run, in stage order."""

    input: np.ndarray
    gray: np.ndarray
    median: np.ndarray
    edges: np.ndarray
    threshold: int
    binary: np.ndarray
    bridged: np.ndarray
    label_map: np.ndarray
    components: list
    kept: list
    region_mask: np.ndarray
    regions: list
    boxes: list


@dataclass
class FrameResult:
    """Outcome of one frame in a sequence run."""

    name: str
    boxes: list | None = None
    error: str | None = None


def _run(stage, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except StageError:
        raise
    except Exception as exc:
        raise StageError(stage, str(exc)) from exc


class TextDetector(BaseEstimator):
    """Localize text-like regions in images via Sobel edge emphasis.

    Parameters
    ----------
    median_window : int
        Odd side length of the median preprocessing window (default 3).
    magnitude : str
        Gradient magnitude mode, ``"approx"`` (|gx|+|gy|, default) or
        ``"exact"`` (rounded Euclidean norm).
    bridge_se : tuple of int
        (width, height) of the rectangle that bridges broken components
        before labeling (default (3, 3)).
    fill_se : tuple of int
        (width, height) of the rectangle that fills gaps between surviving
        components before the final boxes are taken (default (5, 1), a
        horizontal bar).
    min_area_fraction : float
        Components smaller than this fraction of the mean component area are
        pruned (default 0.20).
    min_edge_density : float
        Components whose edge-pixel density over their bounding box falls
        below this value are pruned (default 0.10).
    """

    def __init__(
        self,
        median_window: int = 3,
        magnitude: str = "approx",
        bridge_se=(3, 3),
        fill_se=(5, 1),
        min_area_fraction: float = 0.20,
        min_edge_density: float = 0.10,
    ):
        self.median_window = median_window
        self.magnitude = magnitude
        self.bridge_se = bridge_se
        self.fill_se = fill_se
        self.min_area_fraction = min_area_fraction
        self.min_edge_density = min_edge_density

    def _validated(self):
        check_odd_window(self.median_window, "median_window")
        if self.magnitude not in MAGNITUDE_MODES:
            raise ValueError(
                f"magnitude must be one of {MAGNITUDE_MODES}, got {self.magnitude!r}"
            )
        bridge = rectangle(*self.bridge_se)
        fill = rectangle(*self.fill_se)
        check_ratio(
            self.min_area_fraction, "min_area_fraction", closed_low=False, closed_high=False
        )
        check_ratio(self.min_edge_density, "min_edge_density")
        return bridge, fill

    def fit(self, X=None, y=None):
        """Validate parameters; the detector keeps no fitted state."""
        self._validated()
        return self

    def stages(self, image) -> PipelineStages:
        """Run the pipeline on one image and keep every intermediate."""
        bridge, fill = self._validated()
        arr = np.asarray(image)
        gray = _run("grayscale", tio.ensure_gray, arr)
        med = _run("median", median_filter, gray, self.median_window)
        edges = _run(
            "edges", lambda: edge_emphasize(sobel_gradients(med, self.magnitude).magnitude)
        )
        threshold = _run("binarize", lambda: otsu_threshold(histogram(edges)))
        binary = _run("binarize", apply_threshold, edges, threshold)
        bridged = _run("bridge", dilate, binary, bridge)
        label_map, comps = _run("label", label_components, bridged, binary)
        kept = _run("prune", prune_small, comps, self.min_area_fraction)
        kept = _run("prune", prune_low_edge_density, kept, self.min_edge_density)
        region_mask = _run("merge", merged_mask, kept, label_map, fill)
        regions = _run("merge", merge_detections, kept, label_map, fill)
        boxes = _run("localize", localize, regions)
        return PipelineStages(
            input=arr,
            gray=gray,
            median=med,
            edges=edges,
            threshold=threshold,
            binary=binary,
            bridged=bridged,
            label_map=label_map,
            components=comps,
            kept=kept,
            region_mask=region_mask,
            regions=regions,
            boxes=boxes,
        )

    def predict(self, X):
        """Detect text boxes.

        A single 2-D (gray) or 3-D (RGB) uint8 array yields one list of
        :class:`~textloc.geometry.Rect`; any other iterable of images yields
        one list per image.
        """
        if isinstance(X, np.ndarray) and X.ndim in (2, 3):
            return self.stages(X).boxes
        return [self.stages(img).boxes for img in X]

    def transform(self, X):
        """Alias of :meth:`predict` for transformer-style composition."""
        return self.predict(X)


def _component_view(label_map: np.ndarray) -> np.ndarray:
    """Render a label map as an 8-bit image with evenly spread gray levels."""
    k = int(label_map.max())
    if k == 0:
        return np.zeros(label_map.shape, dtype=np.uint8)
    return ((label_map * 255) // k).astype(np.uint8)


def save_snapshots(stages: PipelineStages, directory) -> list[Path]:
    """Write the per-stage snapshot sequence as portable pixmaps.

    Emits, in order: gray, median, edges, binary, bridged, components,
    regions (each P5) and overlay (P6). Returns the written paths.
    """
    root = Path(directory)
    root.mkdir(parents=True, exist_ok=True)
    images = {
        "gray": stages.gray,
        "median": stages.median,
        "edges": stages.edges,
        "binary": stages.binary.astype(np.uint8) * 255,
        "bridged": stages.bridged.astype(np.uint8) * 255,
        "components": _component_view(stages.label_map),
        "regions": stages.region_mask.astype(np.uint8) * 255,
        "overlay": render_overlay(stages.input, stages.boxes),
    }
    written = []
    for i, name in enumerate(SNAPSHOT_SEQUENCE):
        suffix = ".ppm" if images[name].ndim == 3 else ".pgm"
        path = root / f"{i:02d}_{name}{suffix}"
        tio.save_image(images[name], path)
        written.append(path)
    return written


def run_sequence(
    frames,
    detector: TextDetector,
    workers: int = 1,
    strict: bool = False,
    on_stages=None,
):
    """Run the detector over an ordered list of frame paths.

    Frames are processed independently (concurrently when ``workers`` > 1)
    and results are returned in frame order. In lenient mode a failing frame
    yields a :class:`FrameResult` carrying the error; in strict mode the
    failure propagates. ``on_stages(path, stages)``, when given, is invoked
    with every frame's intermediates (e.g. to write debug snapshots).
    """
    detector._validated()
    paths = [Path(p) for p in frames]

    def process(path: Path) -> FrameResult:
        try:
            stages = detector.stages(tio.load_image(path))
            if on_stages is not None:
                on_stages(path, stages)
            return FrameResult(name=path.name, boxes=stages.boxes)
        except Exception as exc:
            if strict:
                raise
            return FrameResult(name=path.name, error=str(exc))

    if workers <= 1:
        return [process(p) for p in paths]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(process, paths))
