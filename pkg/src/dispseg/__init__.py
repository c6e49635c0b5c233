"""dispseg: segment grayscale disparity-style images into bounding-boxed objects.

A binarizing threshold sweeps downward from the brightest intensity; binary
connected-component labeling runs at every step and the results are merged
into a stored-object list, so near (bright) objects are found first and
never lost. Ships a compiled labeling kernel with a pure-python fallback.
"""

__version__ = "0.1.0"

from .ccl import (
    CclAlgorithm,
    ComponentStats,
    Connectivity,
    LabelImage,
    LabelOverflowError,
    active_backend,
    available_backends,
    components_with_stats,
    label_components,
    set_backend,
)
from .imgcore import (
    BinaryImage,
    GrayImage,
    PgmDataError,
    PgmError,
    PgmHeaderError,
    PgmMaxvalError,
    Rect,
    binarize,
    load_pgm,
    max_in_rect,
    min_max,
    save_pgm,
)
from .segmenter import (
    DetectedObject,
    SegmentationParams,
    UpdateKind,
    UpdateOutcome,
    classify_candidate,
    containment_ratio,
    intersect,
    parallel_sweep_available,
    segment,
    threshold_schedule,
)
from .synth import (
    FilledCircle,
    FilledRect,
    SceneSpec,
    Shape,
    render,
    three_circles_scene,
    three_rects_scene,
)

__all__ = [
    "__version__",
    "GrayImage",
    "BinaryImage",
    "Rect",
    "PgmError",
    "PgmHeaderError",
    "PgmMaxvalError",
    "PgmDataError",
    "load_pgm",
    "save_pgm",
    "min_max",
    "binarize",
    "max_in_rect",
    "Connectivity",
    "CclAlgorithm",
    "LabelImage",
    "ComponentStats",
    "LabelOverflowError",
    "label_components",
    "components_with_stats",
    "available_backends",
    "active_backend",
    "set_backend",
    "SegmentationParams",
    "DetectedObject",
    "UpdateKind",
    "UpdateOutcome",
    "intersect",
    "containment_ratio",
    "classify_candidate",
    "threshold_schedule",
    "segment",
    "parallel_sweep_available",
    "SceneSpec",
    "Shape",
    "FilledRect",
    "FilledCircle",
    "render",
    "three_rects_scene",
    "three_circles_scene",
]
