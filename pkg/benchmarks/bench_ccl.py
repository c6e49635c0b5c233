"""Benchmark the compiled labeling kernel against the pure-python fallback.

Times the raw kernel on random masks of several densities and the full
segmentation pipeline on a synthetic scene, printing one row per case.

    python benchmarks/bench_ccl.py [--size 640x480] [--repeats 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

import dispseg.ccl as ccl
from dispseg import SegmentationParams, render, segment, three_rects_scene
from dispseg.ccl import _twopass_py

try:
    from dispseg.ccl import _twopass_ext
except ImportError:
    _twopass_ext = None


def best_of(repeats: int, fn, *args) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def bench_kernels(h: int, w: int, repeats: int) -> None:
    rng = np.random.default_rng(42)
    print(f"\nkernel label_and_stats on {w}x{h} masks (best of {repeats}):")
    print(f"{'case':<28}{'python':>12}{'ext':>12}{'speedup':>10}")
    for density in (0.1, 0.5, 0.9):
        mask = (rng.random((h, w)) < density).astype(np.uint8)
        for conn in (4, 8):
            label = f"density {density:.1f}, {conn}-conn"
            t_py = best_of(repeats, _twopass_py.label_and_stats, mask, conn)
            if _twopass_ext is None:
                print(f"{label:<28}{t_py * 1e3:>10.2f}ms{'n/a':>12}{'':>10}")
                continue
            t_ext = best_of(repeats, _twopass_ext.label_and_stats, mask, conn)
            print(
                f"{label:<28}{t_py * 1e3:>10.2f}ms{t_ext * 1e3:>10.2f}ms"
                f"{t_py / t_ext:>9.1f}x"
            )


def bench_pipeline(repeats: int) -> None:
    img = render(three_rects_scene()[0])
    params = SegmentationParams()
    print(f"\nfull segment() on the {img.width}x{img.height} rectangle scene:")
    print(f"{'backend':<28}{'time':>12}")
    rows = []
    for name in ("python", "ext"):
        if name not in ccl.available_backends():
            continue
        ccl.set_backend(name)
        rows.append((name, best_of(repeats, segment, img, params)))
    ccl.set_backend("auto")
    for name, t in rows:
        print(f"{name:<28}{t * 1e3:>10.2f}ms")
    if len(rows) == 2:
        print(f"{'speedup':<28}{rows[0][1] / rows[1][1]:>11.1f}x")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", default="640x480", help="mask size as WxH")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    w, h = (int(v) for v in args.size.lower().split("x"))

    print(f"available backends: {', '.join(ccl.available_backends())}")
    if _twopass_ext is None:
        print("compiled kernel not built; timing the pure-python kernel only")
    bench_kernels(h, w, args.repeats)
    bench_pipeline(args.repeats)


if __name__ == "__main__":
    main()
