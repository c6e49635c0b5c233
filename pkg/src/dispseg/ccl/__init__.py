"""Binary connected-component labeling with per-component statistics.

Two interchangeable kernels implement the two-pass union-find labeling: a
Cython extension compiled at install time and a pure numpy fallback. The
compiled one is preferred when present; set ``DISPSEG_PURE=1`` before
import, or call :func:`set_backend`, to force the fallback. Both produce
bit-identical results.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass

import numpy as np

from ..imgcore import BinaryImage, Rect

__all__ = [
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
]


class Connectivity(enum.IntEnum):
    """Whether diagonal neighbors count as connected."""

    FOUR = 4
    EIGHT = 8


class CclAlgorithm(enum.Enum):
    """Labeling algorithm selector; a single variant is implemented."""

    TWO_PASS_UNION_FIND = "two-pass-union-find"


class LabelOverflowError(Exception):
    """Component count does not fit the requested label width."""


@dataclass(frozen=True, eq=False)
class LabelImage:
    """Per-pixel component labels; 0 is background, labels are contiguous 1..n."""

    width: int
    height: int
    label_width: int
    n_components: int
    data: np.ndarray

    def __post_init__(self) -> None:
        if self.label_width not in (16, 32):
            raise ValueError(f"label_width must be 16 or 32, got {self.label_width}")
        arr = np.asarray(self.data)
        want = np.uint16 if self.label_width == 16 else np.int32
        if arr.dtype != want or arr.shape != (self.height, self.width):
            raise ValueError("label data does not match declared shape/dtype")
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabelImage):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and self.label_width == other.label_width
            and self.n_components == other.n_components
            and np.array_equal(self.data, other.data)
        )


@dataclass(frozen=True)
class ComponentStats:
    """Bounding box, pixel count and mass centroid of one labeled component."""

    label: int
    bbox: Rect
    area: int
    centroid: tuple[float, float]


_LABEL_LIMIT = {16: (1 << 16) - 1, 32: (1 << 31) - 1}
_LABEL_DTYPE = {16: np.uint16, 32: np.int32}

_BACKENDS = {}

from . import _twopass_py  # noqa: E402

_BACKENDS["python"] = _twopass_py.label_and_stats
try:
    from . import _twopass_ext

    _BACKENDS["ext"] = _twopass_ext.label_and_stats
except ImportError:
    pass

_active = "python" if os.environ.get("DISPSEG_PURE") or "ext" not in _BACKENDS else "ext"


def available_backends() -> tuple[str, ...]:
    return tuple(sorted(_BACKENDS))


def active_backend() -> str:
    return _active


def set_backend(name: str) -> None:
    """Select the labeling kernel: 'ext', 'python', or 'auto'."""
    global _active
    if name == "auto":
        name = "ext" if "ext" in _BACKENDS else "python"
    if name not in _BACKENDS:
        raise ValueError(f"unknown backend {name!r}, available: {available_backends()}")
    _active = name


def _coerce_algorithm(algorithm) -> CclAlgorithm:
    if isinstance(algorithm, str):
        try:
            return CclAlgorithm(algorithm)
        except ValueError:
            raise ValueError(f"unknown CCL algorithm {algorithm!r}") from None
    if not isinstance(algorithm, CclAlgorithm):
        raise ValueError(f"unknown CCL algorithm {algorithm!r}")
    return algorithm


def _run_kernel(bin_img: BinaryImage, connectivity, label_width: int):
    conn = Connectivity(connectivity)
    if label_width not in (16, 32):
        raise ValueError(f"label_width must be 16 or 32, got {label_width}")
    if bin_img.width * bin_img.height > _LABEL_LIMIT[32]:
        raise ValueError("image too large for 32-bit internal labels")
    out = _BACKENDS[_active](bin_img.data, int(conn))
    n = out[1]
    if n > _LABEL_LIMIT[label_width]:
        raise LabelOverflowError(
            f"{n} components exceed {label_width}-bit labels; use label_width=32"
        )
    return out


def label_components(
    bin_img: BinaryImage,
    connectivity: Connectivity = Connectivity.EIGHT,
    label_width: int = 16,
    algorithm: CclAlgorithm = CclAlgorithm.TWO_PASS_UNION_FIND,
) -> LabelImage:
    """Label connected foreground regions.

    Labels are assigned in raster-scan first-encounter order: the component
    whose first pixel comes earliest gets label 1, and so on.
    """
    _coerce_algorithm(algorithm)
    labels, n, *_ = _run_kernel(bin_img, connectivity, label_width)
    return LabelImage(
        width=bin_img.width,
        height=bin_img.height,
        label_width=label_width,
        n_components=n,
        data=labels.astype(_LABEL_DTYPE[label_width]),
    )


def components_with_stats(
    bin_img: BinaryImage,
    connectivity: Connectivity = Connectivity.EIGHT,
    label_width: int = 16,
    algorithm: CclAlgorithm = CclAlgorithm.TWO_PASS_UNION_FIND,
) -> list[ComponentStats]:
    """Per-component bounding box, area and centroid, ordered by label."""
    _coerce_algorithm(algorithm)
    _, n, area, minx, miny, maxx, maxy, sumx, sumy = _run_kernel(
        bin_img, connectivity, label_width
    )
    out = []
    for lbl in range(1, n + 1):
        a = int(area[lbl])
        x0, y0 = int(minx[lbl]), int(miny[lbl])
        bbox = Rect(x0, y0, int(maxx[lbl]) - x0 + 1, int(maxy[lbl]) - y0 + 1)
        centroid = (int(sumx[lbl]) / a, int(sumy[lbl]) / a)
        out.append(ComponentStats(label=lbl, bbox=bbox, area=a, centroid=centroid))
    return out
