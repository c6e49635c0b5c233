"""Threshold-sweep segmentation of grayscale images into bounding-boxed objects.

The sweep moves a binarization cutoff from just below the global maximum
toward the global minimum. Each step labels the thresholded mask and folds
the surviving components into a stored-object list under ordered rules:
near-duplicates of stored objects are dropped as background, disjoint
components are added, components covering several stored centers indicate a
merge and are dropped, and a component engulfing a single stored object
grows it in place. Stored objects are never removed, so nearer (brighter)
objects always survive the sweep.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from .ccl import CclAlgorithm, ComponentStats, Connectivity, components_with_stats
from .imgcore import GrayImage, Rect, binarize, max_in_rect, min_max

__all__ = [
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
]


@dataclass(frozen=True)
class SegmentationParams:
    """Tunables of the sweep; defaults suit 8-bit disparity maps.

    ``threshold_step_size`` is the fraction of the intensity range covered
    per step. ``num_same_iterations_to_stop`` = 0 sweeps the complete range;
    a positive value stops after that many consecutive steps without any
    add or grow. Both bounding-box sides of a candidate must lie within
    [``min_obj_dimension``, ``max_obj_dimension``]. The two common-area
    ratios quantify how much of one box must lie inside another to count as
    background (candidate inside stored) or growth (stored inside candidate).
    """

    threshold_step_size: float = 0.05
    num_same_iterations_to_stop: int = 0
    min_obj_dimension: int = 10
    max_obj_dimension: int = 400
    common_area_to_consider_background: float = 0.9
    common_area_to_consider_growing: float = 0.9
    connectivity: Connectivity = Connectivity.EIGHT
    label_width: int = 16
    ccl_algorithm: CclAlgorithm = CclAlgorithm.TWO_PASS_UNION_FIND

    def __post_init__(self) -> None:
        if not 0 < self.threshold_step_size <= 1:
            raise ValueError(
                f"threshold_step_size must lie in (0, 1], got {self.threshold_step_size}"
            )
        if not 0 <= self.num_same_iterations_to_stop <= 255:
            raise ValueError(
                f"num_same_iterations_to_stop must lie in [0, 255], "
                f"got {self.num_same_iterations_to_stop}"
            )
        if self.min_obj_dimension < 0 or self.max_obj_dimension < 0:
            raise ValueError("object dimensions must be non-negative")
        if self.min_obj_dimension > self.max_obj_dimension:
            raise ValueError(
                f"min_obj_dimension {self.min_obj_dimension} exceeds "
                f"max_obj_dimension {self.max_obj_dimension}"
            )
        for name in ("common_area_to_consider_background", "common_area_to_consider_growing"):
            v = getattr(self, name)
            if not 0 <= v <= 1:
                raise ValueError(f"{name} must lie in [0, 1], got {v}")
        object.__setattr__(self, "connectivity", Connectivity(self.connectivity))
        if self.label_width not in (16, 32):
            raise ValueError(f"label_width must be 16 or 32, got {self.label_width}")
        if not isinstance(self.ccl_algorithm, CclAlgorithm):
            object.__setattr__(self, "ccl_algorithm", CclAlgorithm(self.ccl_algorithm))


@dataclass(frozen=True)
class DetectedObject:
    """One segmented object: integer center, disparity value, bounding box."""

    center: tuple[int, int]
    disparity: int
    bbox: Rect

    def __post_init__(self) -> None:
        if not self.bbox.contains_point(*self.center):
            raise ValueError(f"center {self.center} lies outside bbox {self.bbox}")


class UpdateKind(enum.Enum):
    DISCARDED_BACKGROUND = "discarded-background"
    ADDED = "added"
    DISCARDED_MERGE = "discarded-merge"
    GREW = "grew"
    DISCARDED_AMBIGUOUS = "discarded-ambiguous"


@dataclass(frozen=True)
class UpdateOutcome:
    """Decision for one candidate; ``target_index`` is set exactly for GREW."""

    kind: UpdateKind
    target_index: int | None = None

    def __post_init__(self) -> None:
        if (self.kind is UpdateKind.GREW) != (self.target_index is not None):
            raise ValueError("target_index must be set iff kind is GREW")


def intersect(a: Rect, b: Rect) -> Rect | None:
    """Intersection rectangle, or None when no pixel is shared."""
    x0 = max(a.x, b.x)
    y0 = max(a.y, b.y)
    x1 = min(a.x + a.w, b.x + b.w)
    y1 = min(a.y + a.h, b.y + b.h)
    if x1 <= x0 or y1 <= y0:
        return None
    return Rect(x0, y0, x1 - x0, y1 - y0)


def containment_ratio(inner: Rect, outer: Rect) -> float:
    """Fraction of ``inner``'s area covered by ``outer``; 0.0 when disjoint."""
    common = intersect(inner, outer)
    if common is None:
        return 0.0
    return common.area / inner.area


def classify_candidate(
    candidate: ComponentStats,
    stored: Sequence[DetectedObject],
    params: SegmentationParams,
) -> UpdateOutcome:
    """Decide a candidate's fate against the stored objects.

    Rules are evaluated in a fixed order, first match wins:

    1. mostly inside some stored box -> background, discard;
    2. disjoint from every stored box -> add;
    3. covers the centers of two or more stored objects -> merge, discard;
    4. some stored object is mostly inside the candidate and its center is
       covered -> grow that object (first match in insertion order);
    5. otherwise the overlap is ambiguous and the candidate is discarded:
       the stored object was found at a higher threshold and keeps priority.
    """
    box = candidate.bbox
    for obj in stored:
        if containment_ratio(box, obj.bbox) >= params.common_area_to_consider_background:
            return UpdateOutcome(UpdateKind.DISCARDED_BACKGROUND)
    if all(intersect(box, obj.bbox) is None for obj in stored):
        return UpdateOutcome(UpdateKind.ADDED)
    covered = sum(1 for obj in stored if box.contains_point(*obj.center))
    if covered >= 2:
        return UpdateOutcome(UpdateKind.DISCARDED_MERGE)
    for idx, obj in enumerate(stored):
        if containment_ratio(
            obj.bbox, box
        ) >= params.common_area_to_consider_growing and box.contains_point(*obj.center):
            return UpdateOutcome(UpdateKind.GREW, target_index=idx)
    return UpdateOutcome(UpdateKind.DISCARDED_AMBIGUOUS)


def threshold_schedule(min_value: int, max_value: int, step_fraction: float) -> list[int]:
    """Descending integer cutoffs; at step k pixels with value > cutoff[k] are kept.

    Sweep positions are max - k*step with step = step_fraction * (max - min),
    for k = 1, 2, ... while the position stays strictly above min. Arithmetic
    is exact (rational), so the schedule is reproducible and the resulting
    masks are invariant under positive integer affine intensity maps.
    """
    if not 0 < step_fraction <= 1:
        raise ValueError(f"step fraction must lie in (0, 1], got {step_fraction}")
    if max_value <= min_value:
        return []
    step = Fraction(step_fraction) * (max_value - min_value)
    cutoffs = []
    k = 1
    while True:
        t = max_value - k * step
        if t <= min_value:
            break
        cutoffs.append(math.floor(t))
        k += 1
    return cutoffs


def parallel_sweep_available(params: SegmentationParams) -> bool:
    """Whether the per-threshold labeling passes may run concurrently.

    Only a full sweep (stop count 0) has a threshold set that is known up
    front; with early stopping the schedule depends on intermediate results.
    """
    return params.num_same_iterations_to_stop == 0


def _round_half_up(v: float) -> int:
    return math.floor(v + 0.5)


def _as_object(candidate: ComponentStats) -> DetectedObject:
    cx, cy = candidate.centroid
    return DetectedObject(
        center=(_round_half_up(cx), _round_half_up(cy)),
        disparity=0,
        bbox=candidate.bbox,
    )


def _effective_max_dimension(params: SegmentationParams, img: GrayImage) -> int:
    # a box as large as the frame is scenery, not an object
    return min(params.max_obj_dimension, min(img.width, img.height) - 1)


def _fold_step(
    components: Sequence[ComponentStats],
    stored: list[DetectedObject],
    params: SegmentationParams,
    max_dim: int,
) -> bool:
    """Classify one step's candidates in label order; returns True if anything changed."""
    changed = False
    lo = params.min_obj_dimension
    for comp in components:
        box = comp.bbox
        if not (lo <= box.w <= max_dim and lo <= box.h <= max_dim):
            continue
        outcome = classify_candidate(comp, stored, params)
        if outcome.kind is UpdateKind.ADDED:
            stored.append(_as_object(comp))
            changed = True
        elif outcome.kind is UpdateKind.GREW:
            stored[outcome.target_index] = _as_object(comp)
            changed = True
    return changed


def segment(
    img: GrayImage,
    params: SegmentationParams | None = None,
    *,
    parallel: bool = False,
) -> list[DetectedObject]:
    """Segment ``img`` into objects, sorted by decreasing disparity.

    With ``parallel=True`` and a full sweep (see
    :func:`parallel_sweep_available`) the per-threshold labeling runs on a
    thread pool; candidate classification stays sequential in descending
    threshold order, so the result is identical to the serial path. When
    early stopping is configured the flag is ignored.

    Ties in the final ordering are broken by larger box area, then by the
    (y, x) of the box origin.
    """
    if params is None:
        params = SegmentationParams()
    lo, hi = min_max(img)
    if lo == hi:
        return []
    cutoffs = threshold_schedule(lo, hi, params.threshold_step_size)
    max_dim = _effective_max_dimension(params, img)
    stored: list[DetectedObject] = []

    def components_at(cutoff: int) -> list[ComponentStats]:
        return components_with_stats(
            binarize(img, cutoff),
            params.connectivity,
            params.label_width,
            params.ccl_algorithm,
        )

    if parallel and parallel_sweep_available(params):
        with ThreadPoolExecutor() as pool:
            per_step = list(pool.map(components_at, cutoffs))
        for components in per_step:
            _fold_step(components, stored, params, max_dim)
    else:
        unchanged = 0
        for cutoff in cutoffs:
            changed = _fold_step(components_at(cutoff), stored, params, max_dim)
            unchanged = 0 if changed else unchanged + 1
            if params.num_same_iterations_to_stop and (
                unchanged >= params.num_same_iterations_to_stop
            ):
                break

    final = [replace(obj, disparity=max_in_rect(img, obj.bbox)) for obj in stored]
    final.sort(key=lambda o: (-o.disparity, -o.bbox.area, o.bbox.y, o.bbox.x))
    return final
