"""imgcore: containers, thresholding, PGM round-trips and error kinds."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dispseg import (
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
from conftest import make_gray


class TestContainers:
    def test_gray_image_rejects_bad_depth(self):
        with pytest.raises(ValueError):
            GrayImage(width=1, height=1, depth=12, data=np.zeros((1, 1), np.uint8))

    def test_gray_image_rejects_shape_mismatch(self):
        with pytest.raises(ValueError):
            GrayImage(width=3, height=2, depth=8, data=np.zeros((3, 2), np.uint8))

    def test_gray_image_rejects_out_of_range_values(self):
        with pytest.raises(ValueError):
            GrayImage(width=2, height=1, depth=8, data=np.array([[0, 300]]))

    def test_gray_image_is_immutable(self):
        img = make_gray([[1, 2], [3, 4]])
        with pytest.raises(ValueError):
            img.data[0, 0] = 9

    def test_gray_image_copies_input(self):
        src = np.array([[5]], dtype=np.uint8)
        img = GrayImage(width=1, height=1, depth=8, data=src)
        src[0, 0] = 7
        assert img.data[0, 0] == 5

    def test_from_array_infers_depth(self):
        assert make_gray(np.zeros((2, 2), np.uint8)).depth == 8
        assert make_gray(np.zeros((2, 2), np.uint16)).depth == 16
        assert make_gray([[0, 4000]]).depth == 16

    def test_rect_validation(self):
        with pytest.raises(ValueError):
            Rect(-1, 0, 2, 2)
        with pytest.raises(ValueError):
            Rect(0, 0, 0, 2)
        assert Rect(1, 2, 3, 4).area == 12

    def test_rect_contains_point_half_open(self):
        r = Rect(2, 3, 4, 5)
        assert r.contains_point(2, 3)
        assert r.contains_point(5, 7)
        assert not r.contains_point(6, 3)
        assert not r.contains_point(2, 8)


class TestMinMax:
    def test_uniform_image(self):
        assert min_max(make_gray(np.full((4, 4), 7))) == (7, 7)

    def test_extremes(self):
        assert min_max(make_gray([[0, 255], [10, 20]])) == (0, 255)

    def test_random_vs_scan(self, rng):
        arr = rng.integers(0, 256, size=(64, 64))
        img = make_gray(arr)
        lo = min(int(v) for v in arr.ravel())
        hi = max(int(v) for v in arr.ravel())
        assert min_max(img) == (lo, hi)

    def test_values_present(self, rng):
        arr = rng.integers(0, 65536, size=(16, 16))
        lo, hi = min_max(make_gray(arr, depth=16))
        flat = set(int(v) for v in arr.ravel())
        assert lo in flat and hi in flat


class TestBinarize:
    def test_strict_greater(self):
        img = make_gray([[3, 5, 7]])
        assert binarize(img, 5.0).data.tolist() == [[0, 0, 1]]

    def test_threshold_at_or_above_max_gives_background(self):
        img = make_gray([[3, 5, 7]])
        assert binarize(img, 7).foreground_count == 0
        assert binarize(img, 200).foreground_count == 0

    def test_threshold_below_min_gives_foreground(self):
        img = make_gray([[3, 5, 7]])
        assert binarize(img, 2.5).foreground_count == 3

    @settings(max_examples=40, deadline=None)
    @given(data=st.data())
    def test_foreground_count_monotone_in_threshold(self, data):
        values = data.draw(
            st.lists(st.integers(0, 255), min_size=4, max_size=64).map(
                lambda v: v + [0] * ((4 - len(v) % 4) % 4)
            )
        )
        arr = np.array(values, dtype=np.uint8).reshape(4, -1)
        img = make_gray(arr)
        counts = [binarize(img, t).foreground_count for t in range(-1, 256)]
        assert all(a >= b for a, b in zip(counts, counts[1:]))

    def test_affine_invariance_of_masks(self, rng):
        arr = rng.integers(0, 60, size=(16, 16))
        img = make_gray(arr, depth=8)
        for a, b in ((2, 0), (2, 10), (4, 3)):
            scaled = make_gray(arr * a + b, depth=8)
            for t in range(-1, 61):
                want = binarize(img, t).data
                got = binarize(scaled, a * t + b).data
                assert np.array_equal(want, got)


class TestMaxInRect:
    def test_single_pixel(self):
        img = make_gray([[1, 2], [3, 4]])
        assert max_in_rect(img, Rect(1, 0, 1, 1)) == 2

    def test_full_image_matches_min_max(self, rng):
        arr = rng.integers(0, 256, size=(8, 12))
        img = make_gray(arr)
        assert max_in_rect(img, Rect(0, 0, 12, 8)) == min_max(img)[1]

    def test_random_rects_vs_scan(self, rng):
        arr = rng.integers(0, 256, size=(32, 48))
        img = make_gray(arr)
        for _ in range(50):
            w = int(rng.integers(1, 49))
            h = int(rng.integers(1, 33))
            x = int(rng.integers(0, 49 - w))
            y = int(rng.integers(0, 33 - h))
            want = max(int(arr[yy, xx]) for yy in range(y, y + h) for xx in range(x, x + w))
            assert max_in_rect(img, Rect(x, y, w, h)) == want

    def test_out_of_bounds_rect(self):
        img = make_gray([[1, 2], [3, 4]])
        with pytest.raises(ValueError):
            max_in_rect(img, Rect(1, 1, 2, 1))


class TestPgm:
    def test_parse_p2(self, tmp_path):
        path = tmp_path / "a.pgm"
        path.write_text("P2 2 1 255\n0 255\n")
        img = load_pgm(path)
        assert (img.width, img.height, img.depth) == (2, 1, 8)
        assert img.data.tolist() == [[0, 255]]

    def test_parse_p2_with_comments(self, tmp_path):
        path = tmp_path / "a.pgm"
        path.write_text("P2\n# a comment\n2 2\n# another\n15\n1 2\n3 4\n")
        assert load_pgm(path).data.tolist() == [[1, 2], [3, 4]]

    def test_p5_16bit_samples_are_big_endian(self, tmp_path):
        path = tmp_path / "a.pgm"
        path.write_bytes(b"P5\n1 1\n65535\n\x01\x00")
        img = load_pgm(path)
        assert img.depth == 16
        assert img.data[0, 0] == 256

    def test_save_writes_exact_p5(self, tmp_path):
        path = tmp_path / "a.pgm"
        save_pgm(make_gray([[0]]), path)
        assert path.read_bytes() == b"P5\n1 1\n255\n\x00"

    def test_save_16bit_uses_65535(self, tmp_path):
        path = tmp_path / "a.pgm"
        save_pgm(make_gray(np.array([[300]]), depth=16), path)
        assert path.read_bytes().startswith(b"P5\n1 1\n65535\n")

    def test_round_trip_random_images(self, rng, tmp_path):
        for i in range(50):
            depth = 8 if i % 2 == 0 else 16
            w = int(rng.integers(1, 24))
            h = int(rng.integers(1, 24))
            arr = rng.integers(0, 1 << depth, size=(h, w))
            img = make_gray(arr, depth=depth)
            path = tmp_path / f"rt{i}.pgm"
            save_pgm(img, path)
            assert load_pgm(path) == img

    def test_missing_file_is_io_error(self, tmp_path):
        with pytest.raises(OSError):
            load_pgm(tmp_path / "nope.pgm")

    def test_bad_magic(self, tmp_path):
        path = tmp_path / "a.pgm"
        path.write_bytes(b"P7\n1 1\n255\n\x00")
        with pytest.raises(PgmHeaderError):
            load_pgm(path)

    def test_non_numeric_header(self, tmp_path):
        path = tmp_path / "a.pgm"
        path.write_bytes(b"P5\nx 1\n255\n\x00")
        with pytest.raises(PgmHeaderError):
            load_pgm(path)

    def test_incomplete_header(self, tmp_path):
        path = tmp_path / "a.pgm"
        path.write_bytes(b"P5\n1 1")
        with pytest.raises(PgmHeaderError):
            load_pgm(path)

    @pytest.mark.parametrize("maxval", [0, 65536, 100000])
    def test_bad_maxval(self, tmp_path, maxval):
        path = tmp_path / "a.pgm"
        path.write_bytes(f"P5\n1 1\n{maxval}\n".encode() + b"\x00\x00\x00")
        with pytest.raises(PgmMaxvalError):
            load_pgm(path)

    def test_truncated_p5(self, tmp_path):
        path = tmp_path / "a.pgm"
        path.write_bytes(b"P5\n2 2\n255\n\x00\x01")
        with pytest.raises(PgmDataError):
            load_pgm(path)

    def test_truncated_p2(self, tmp_path):
        path = tmp_path / "a.pgm"
        path.write_text("P2 2 2 255\n1 2 3")
        with pytest.raises(PgmDataError):
            load_pgm(path)

    def test_p2_sample_above_maxval(self, tmp_path):
        path = tmp_path / "a.pgm"
        path.write_text("P2 2 1 100\n5 200\n")
        with pytest.raises(PgmDataError):
            load_pgm(path)

    def test_error_kinds_are_distinct(self):
        kinds = {PgmHeaderError, PgmMaxvalError, PgmDataError}
        assert len(kinds) == 3
        assert all(issubclass(k, PgmError) for k in kinds)
