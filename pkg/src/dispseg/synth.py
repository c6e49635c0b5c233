"""Deterministic synthetic scenes for tests and demos."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from .imgcore import GrayImage, Rect

__all__ = [
    "FilledRect",
    "FilledCircle",
    "Shape",
    "SceneSpec",
    "render",
    "three_rects_scene",
    "three_circles_scene",
]


@dataclass(frozen=True)
class FilledRect:
    rect: Rect
    value: int


@dataclass(frozen=True)
class FilledCircle:
    """Closed disk: pixel (px, py) belongs iff (px-cx)^2 + (py-cy)^2 <= radius^2."""

    center: tuple[int, int]
    radius: int
    value: int

    def __post_init__(self) -> None:
        if self.radius < 1:
            raise ValueError(f"radius must be at least 1, got {self.radius}")


Shape = Union[FilledRect, FilledCircle]


@dataclass(frozen=True)
class SceneSpec:
    """Shapes painted over a zero background, in list order (later wins)."""

    width: int
    height: int
    depth: int = 8
    shapes: tuple[Shape, ...] = ()


def _check_value(value: int, depth: int) -> None:
    if not 0 <= value < 1 << depth:
        raise ValueError(f"shape value {value} outside [0, 2^{depth})")


def render(spec: SceneSpec) -> GrayImage:
    """Paint the scene; raises ValueError for out-of-bounds shapes."""
    dtype = np.uint8 if spec.depth == 8 else np.uint16
    canvas = np.zeros((spec.height, spec.width), dtype=dtype)
    for shape in spec.shapes:
        if isinstance(shape, FilledRect):
            r = shape.rect
            if r.x + r.w > spec.width or r.y + r.h > spec.height:
                raise ValueError(f"rect {r} exceeds scene bounds")
            _check_value(shape.value, spec.depth)
            canvas[r.y : r.y + r.h, r.x : r.x + r.w] = shape.value
        elif isinstance(shape, FilledCircle):
            cx, cy = shape.center
            rad = shape.radius
            if cx - rad < 0 or cy - rad < 0 or cx + rad >= spec.width or cy + rad >= spec.height:
                raise ValueError(f"circle at {shape.center} radius {rad} exceeds scene bounds")
            _check_value(shape.value, spec.depth)
            ys, xs = np.ogrid[cy - rad : cy + rad + 1, cx - rad : cx + rad + 1]
            disk = (xs - cx) ** 2 + (ys - cy) ** 2 <= rad * rad
            view = canvas[cy - rad : cy + rad + 1, cx - rad : cx + rad + 1]
            view[disk] = shape.value
        else:
            raise ValueError(f"unknown shape {shape!r}")
    return GrayImage(width=spec.width, height=spec.height, depth=spec.depth, data=canvas)


def three_rects_scene() -> tuple[SceneSpec, int]:
    """Three bright rectangles of distinct values plus one zero-valued rectangle.

    The zero rectangle mimics a failed-disparity region; it sits at the
    global minimum, is never foreground under the strict-greater threshold,
    and must not be reported. Expected object count: 3.
    """
    spec = SceneSpec(
        width=320,
        height=240,
        depth=8,
        shapes=(
            FilledRect(Rect(20, 20, 60, 40), 200),
            FilledRect(Rect(150, 60, 90, 70), 150),
            FilledRect(Rect(40, 140, 110, 60), 100),
            FilledRect(Rect(210, 170, 60, 40), 0),
        ),
    )
    return spec, 3


def three_circles_scene() -> tuple[SceneSpec, int]:
    """Three filled circles of distinct values. Expected object count: 3."""
    spec = SceneSpec(
        width=320,
        height=240,
        depth=8,
        shapes=(
            FilledCircle((60, 60), 25, 220),
            FilledCircle((170, 90), 30, 160),
            FilledCircle((90, 180), 20, 90),
        ),
    )
    return spec, 3
