"""Image containers, intensity-range and threshold primitives, and PGM file I/O.

All containers copy their pixel buffer on construction and mark it read-only,
so instances are immutable values that can be shared across threads.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Union

import numpy as np

__all__ = [
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
]

PathLike = Union[str, os.PathLike]

_WHITESPACE = b" \t\n\r\x0b\x0c"


class PgmError(Exception):
    """Base class for PGM format failures."""


class PgmHeaderError(PgmError):
    """Magic number, dimensions or structure of the header is invalid."""


class PgmMaxvalError(PgmError):
    """Header maxval is zero or exceeds 65535."""


class PgmDataError(PgmError):
    """Pixel payload is truncated or contains out-of-range samples."""


def _frozen_copy(arr: np.ndarray) -> np.ndarray:
    out = np.ascontiguousarray(arr).copy()
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class GrayImage:
    """Single-channel intensity image, 8 or 16 bits per pixel.

    ``data`` is a read-only ``(height, width)`` row-major array, dtype uint8
    for depth 8 and uint16 for depth 16.
    """

    width: int
    height: int
    depth: int
    data: np.ndarray

    def __post_init__(self) -> None:
        if self.depth not in (8, 16):
            raise ValueError(f"depth must be 8 or 16, got {self.depth}")
        if self.width < 1 or self.height < 1:
            raise ValueError("image dimensions must be positive")
        arr = np.asarray(self.data)
        if not np.issubdtype(arr.dtype, np.integer):
            raise ValueError(f"pixel data must be integer, got dtype {arr.dtype}")
        if arr.shape != (self.height, self.width):
            raise ValueError(
                f"data shape {arr.shape} does not match (height, width)="
                f"({self.height}, {self.width})"
            )
        if int(arr.min()) < 0 or int(arr.max()) >= 1 << self.depth:
            raise ValueError(f"pixel values must lie in [0, 2^{self.depth})")
        want = np.uint8 if self.depth == 8 else np.uint16
        object.__setattr__(self, "data", _frozen_copy(arr.astype(want)))

    @classmethod
    def from_array(cls, arr: np.ndarray, depth: int | None = None) -> "GrayImage":
        """Wrap a 2D integer array; depth inferred from dtype/values if omitted."""
        arr = np.asarray(arr)
        if arr.ndim != 2:
            raise ValueError("expected a 2D array")
        if depth is None:
            if arr.dtype == np.uint8:
                depth = 8
            elif arr.dtype == np.uint16:
                depth = 16
            else:
                depth = 8 if int(arr.max(initial=0)) <= 255 else 16
        h, w = arr.shape
        return cls(width=w, height=h, depth=depth, data=arr)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and self.depth == other.depth
            and np.array_equal(self.data, other.data)
        )


@dataclass(frozen=True, eq=False)
class BinaryImage:
    """A {0 = background, 1 = foreground} mask with the same layout as GrayImage."""

    width: int
    height: int
    data: np.ndarray

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError("image dimensions must be positive")
        arr = np.asarray(self.data)
        if arr.shape != (self.height, self.width):
            raise ValueError(
                f"data shape {arr.shape} does not match (height, width)="
                f"({self.height}, {self.width})"
            )
        if int(arr.max(initial=0)) > 1 or int(arr.min(initial=0)) < 0:
            raise ValueError("binary image values must be 0 or 1")
        object.__setattr__(self, "data", _frozen_copy(arr.astype(np.uint8)))

    @property
    def foreground_count(self) -> int:
        return int(np.count_nonzero(self.data))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryImage):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and np.array_equal(self.data, other.data)
        )


@dataclass(frozen=True)
class Rect:
    """Axis-aligned pixel rectangle, half-open: x <= px < x+w, y <= py < y+h.

    Coordinates are plain Python ints, so x+w / y+h arithmetic cannot
    overflow for any image size.
    """

    x: int
    y: int
    w: int
    h: int

    def __post_init__(self) -> None:
        if self.x < 0 or self.y < 0:
            raise ValueError(f"rect origin must be non-negative, got ({self.x}, {self.y})")
        if self.w < 1 or self.h < 1:
            raise ValueError(f"rect sides must be at least 1, got {self.w}x{self.h}")

    @property
    def area(self) -> int:
        return self.w * self.h

    def contains_point(self, px: int, py: int) -> bool:
        return self.x <= px < self.x + self.w and self.y <= py < self.y + self.h


def min_max(img: GrayImage) -> tuple[int, int]:
    """Minimum and maximum intensity over all pixels."""
    return int(img.data.min()), int(img.data.max())


def binarize(img: GrayImage, threshold: float) -> BinaryImage:
    """Mask where a pixel is foreground iff its value is strictly greater than ``threshold``."""
    mask = (img.data > threshold).astype(np.uint8)
    return BinaryImage(width=img.width, height=img.height, data=mask)


def max_in_rect(img: GrayImage, r: Rect) -> int:
    """Maximum intensity inside ``r``; raises ValueError if ``r`` leaves the image."""
    if r.x + r.w > img.width or r.y + r.h > img.height:
        raise ValueError(f"rect {r} exceeds image bounds {img.width}x{img.height}")
    return int(img.data[r.y : r.y + r.h, r.x : r.x + r.w].max())


def _tokens(blob: bytes) -> Iterator[tuple[bytes, int]]:
    """Yield (token, end_offset) pairs, skipping whitespace and '#' comments."""
    i, n = 0, len(blob)
    while i < n:
        c = blob[i : i + 1]
        if c in _WHITESPACE:
            i += 1
            continue
        if c == b"#":
            j = blob.find(b"\n", i)
            i = n if j < 0 else j + 1
            continue
        j = i
        while j < n and blob[j : j + 1] not in _WHITESPACE:
            j += 1
        yield blob[i:j], j
        i = j


def load_pgm(path: PathLike) -> GrayImage:
    """Read a P2 (ASCII) or P5 (binary) PGM file.

    Depth is 8 when maxval <= 255, else 16. P5 two-byte samples are
    big-endian, per the format.
    """
    blob = Path(path).read_bytes()
    tokens = _tokens(blob)
    header: list[bytes] = []
    end = 0
    try:
        for _ in range(4):
            tok, end = next(tokens)
            header.append(tok)
    except StopIteration:
        raise PgmHeaderError("incomplete PGM header") from None

    magic = header[0]
    if magic not in (b"P2", b"P5"):
        raise PgmHeaderError(f"unsupported magic {magic!r}, expected P2 or P5")
    try:
        width, height, maxval = (int(t) for t in header[1:])
    except ValueError:
        raise PgmHeaderError("non-numeric field in PGM header") from None
    if width < 1 or height < 1:
        raise PgmHeaderError(f"dimensions must be positive, got {width}x{height}")
    if maxval < 1 or maxval > 65535:
        raise PgmMaxvalError(f"maxval {maxval} outside [1, 65535]")

    depth = 8 if maxval <= 255 else 16
    count = width * height

    if magic == b"P2":
        values = []
        for tok, _ in tokens:
            try:
                v = int(tok)
            except ValueError:
                raise PgmDataError(f"non-numeric sample {tok!r}") from None
            values.append(v)
            if len(values) == count:
                break
        if len(values) < count:
            raise PgmDataError(f"expected {count} samples, found {len(values)}")
        arr = np.array(values, dtype=np.int64).reshape(height, width)
        if int(arr.max()) > maxval or int(arr.min()) < 0:
            raise PgmDataError(f"sample outside [0, {maxval}]")
    else:
        if end >= len(blob) or blob[end : end + 1] not in _WHITESPACE:
            raise PgmHeaderError("missing whitespace between header and raster")
        payload = blob[end + 1 :]
        itemsize = 1 if depth == 8 else 2
        need = count * itemsize
        if len(payload) < need:
            raise PgmDataError(f"expected {need} raster bytes, found {len(payload)}")
        dtype = np.uint8 if depth == 8 else np.dtype(">u2")
        arr = np.frombuffer(payload[:need], dtype=dtype).reshape(height, width)
        if int(arr.max()) > maxval:
            raise PgmDataError(f"sample outside [0, {maxval}]")
        arr = arr.astype(np.uint16) if depth == 16 else arr

    return GrayImage(width=width, height=height, depth=depth, data=arr)


def save_pgm(img: GrayImage, path: PathLike) -> None:
    """Write ``img`` as binary P5 with maxval 255 (depth 8) or 65535 (depth 16)."""
    maxval = 255 if img.depth == 8 else 65535
    header = f"P5\n{img.width} {img.height}\n{maxval}\n".encode("ascii")
    if img.depth == 8:
        payload = img.data.tobytes()
    else:
        payload = img.data.astype(">u2").tobytes()
    Path(path).write_bytes(header + payload)
