"""Command-line frontend: load a PGM, segment it, emit JSON and an annotated PPM.

Exit codes: 0 success (even with zero objects), 1 bad arguments or
out-of-domain parameter, 2 input I/O or format error, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

import numpy as np

from . import __version__
from .ccl import CclAlgorithm, active_backend
from .imgcore import GrayImage, PgmError, load_pgm
from .segmenter import DetectedObject, SegmentationParams, segment

__all__ = ["build_parser", "run", "main", "write_json", "write_annotated", "render_annotated"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

_RED = (255, 0, 0)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dispseg",
        description="Segment a grayscale (disparity-style) PGM image into "
        "bounding-boxed objects sorted by decreasing disparity.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--input", required=True, help="input PGM file (P2 or P5)")
    p.add_argument("--json-out", help="write the object list as JSON to this path")
    p.add_argument("--annotated-out", help="write a P6 PPM with red boxes to this path")
    p.add_argument(
        "--threshold-step",
        type=float,
        default=0.05,
        help="sweep step as a fraction of the intensity range (default 0.05)",
    )
    p.add_argument(
        "--stop-iterations",
        type=int,
        default=0,
        help="stop after this many unchanged sweep steps; 0 sweeps the full range",
    )
    p.add_argument("--min-dim", type=int, default=10, help="minimal object side in pixels")
    p.add_argument("--max-dim", type=int, default=400, help="maximal object side in pixels")
    p.add_argument(
        "--bg-ratio",
        type=float,
        default=0.9,
        help="containment ratio above which a candidate inside a stored object is background",
    )
    p.add_argument(
        "--grow-ratio",
        type=float,
        default=0.9,
        help="containment ratio above which a stored object inside a candidate grows",
    )
    p.add_argument("--connectivity", type=int, choices=(4, 8), default=8)
    p.add_argument("--label-bits", type=int, choices=(16, 32), default=16)
    p.add_argument(
        "--ccl-algo",
        choices=[a.value for a in CclAlgorithm],
        default=CclAlgorithm.TWO_PASS_UNION_FIND.value,
    )
    p.add_argument("-v", "--verbose", action="count", default=0)
    return p


def write_json(objects: Sequence[DetectedObject], path) -> None:
    """Write the object list, preserving order, as a small JSON document."""
    doc = {
        "objects": [
            {
                "center": [obj.center[0], obj.center[1]],
                "disparity": obj.disparity,
                "bbox": {"x": obj.bbox.x, "y": obj.bbox.y, "w": obj.bbox.w, "h": obj.bbox.h},
            }
            for obj in objects
        ]
    }
    Path(path).write_text(json.dumps(doc), encoding="utf-8")


def _to_gray8(img: GrayImage) -> np.ndarray:
    if img.depth == 8:
        return img.data
    top = int(img.data.max())
    if top == 0:
        return np.zeros_like(img.data, dtype=np.uint8)
    # integer linear tone-map by the image maximum
    return (img.data.astype(np.uint32) * 255 // top).astype(np.uint8)


def render_annotated(img: GrayImage, objects: Sequence[DetectedObject]) -> np.ndarray:
    """RGB replica of the input with a 1-pixel red border on each bounding box."""
    gray = _to_gray8(img)
    rgb = np.stack([gray, gray, gray], axis=-1)
    for obj in objects:
        b = obj.bbox
        x1, y1 = b.x + b.w - 1, b.y + b.h - 1
        rgb[b.y, b.x : x1 + 1] = _RED
        rgb[y1, b.x : x1 + 1] = _RED
        rgb[b.y : y1 + 1, b.x] = _RED
        rgb[b.y : y1 + 1, x1] = _RED
    return rgb


def write_annotated(img: GrayImage, objects: Sequence[DetectedObject], path) -> None:
    """Write the annotated visualization as binary P6 PPM."""
    rgb = render_annotated(img, objects)
    header = f"P6\n{img.width} {img.height}\n255\n".encode("ascii")
    Path(path).write_bytes(header + rgb.tobytes())


def _params_from(args: argparse.Namespace) -> SegmentationParams:
    return SegmentationParams(
        threshold_step_size=args.threshold_step,
        num_same_iterations_to_stop=args.stop_iterations,
        min_obj_dimension=args.min_dim,
        max_obj_dimension=args.max_dim,
        common_area_to_consider_background=args.bg_ratio,
        common_area_to_consider_growing=args.grow_ratio,
        connectivity=args.connectivity,
        label_width=args.label_bits,
        ccl_algorithm=args.ccl_algo,
    )


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 0 for --help/--version
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    try:
        params = _params_from(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        img = load_pgm(args.input)
    except (OSError, PgmError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    started = time.perf_counter()
    try:
        objects = segment(img, params)
        if args.json_out:
            write_json(objects, args.json_out)
        if args.annotated_out:
            write_annotated(img, objects, args.annotated_out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # e.g. label overflow with 16-bit labels
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    elapsed = time.perf_counter() - started

    if args.verbose:
        print(f"input: {args.input} ({img.width}x{img.height}, {img.depth}-bit)")
        print(f"ccl backend: {active_backend()}")
        print(f"elapsed: {elapsed:.3f}s")
    print(f"objects: {len(objects)}")
    for i, obj in enumerate(objects, 1):
        b = obj.bbox
        print(
            f"  {i}: center=({obj.center[0]},{obj.center[1]}) "
            f"disparity={obj.disparity} bbox=(x={b.x},y={b.y},w={b.w},h={b.h})"
        )
    return EXIT_OK


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))
