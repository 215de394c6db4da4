"""Text localization through Sobel edge emphasis.

The package pairs a functional numpy core (filters, thresholding, morphology,
labeling, evaluation) with scikit-learn style estimators so the pipeline and
its individual stages compose with the wider ecosystem.
"""

from .binarize import OtsuBinarizer, apply_threshold, histogram, otsu_threshold
from .components import Component, label_components, prune_low_edge_density, prune_small
from .detector import (
    FrameResult,
    PipelineStages,
    StageError,
    TextDetector,
    run_sequence,
    save_snapshots,
)
from .edge import (
    SOBEL_GX,
    SOBEL_GY,
    EdgeEmphasizer,
    GradientMap,
    convolve3x3,
    edge_emphasize,
    gradient_magnitude,
    sobel_gradients,
)
from .evaluation import (
    EvalCounts,
    MatchConfig,
    Metrics,
    compute_rates,
    f_measure,
    macro_average,
    match_detections,
    merge_counts,
    precision_recall_f,
)
from .geometry import Rect, intersection_area
from .io import (
    AnnotationError,
    PnmError,
    load_annotations,
    load_frame_sequence,
    load_image,
    save_image,
    to_grayscale,
    write_detections,
)
from .localize import TextRegion, localize, merge_detections, render_overlay
from .morphology import BinaryDilator, dilate, rectangle
from .preprocess import MedianSmoother, median_filter

__version__ = "0.1.0"

__all__ = [
    "AnnotationError",
    "BinaryDilator",
    "Component",
    "EdgeEmphasizer",
    "EvalCounts",
    "FrameResult",
    "GradientMap",
    "MatchConfig",
    "MedianSmoother",
    "Metrics",
    "OtsuBinarizer",
    "PipelineStages",
    "PnmError",
    "Rect",
    "SOBEL_GX",
    "SOBEL_GY",
    "StageError",
    "TextDetector",
    "TextRegion",
    "apply_threshold",
    "compute_rates",
    "convolve3x3",
    "dilate",
    "edge_emphasize",
    "f_measure",
    "gradient_magnitude",
    "histogram",
    "intersection_area",
    "label_components",
    "load_annotations",
    "load_frame_sequence",
    "load_image",
    "localize",
    "macro_average",
    "match_detections",
    "median_filter",
    "merge_counts",
    "merge_detections",
    "otsu_threshold",
    "precision_recall_f",
    "prune_low_edge_density",
    "prune_small",
    "rectangle",
    "render_overlay",
    "run_sequence",
    "save_image",
    "save_snapshots",
    "sobel_gradients",
    "to_grayscale",
    "write_detections",
]
