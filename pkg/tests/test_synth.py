"""synth: painting semantics, bounds, and the built-in scenes."""

import numpy as np
import pytest

from dispseg import (
    FilledCircle,
    FilledRect,
    Rect,
    SceneSpec,
    render,
    three_circles_scene,
    three_rects_scene,
)


class TestRender:
    def test_empty_scene_is_zero(self):
        img = render(SceneSpec(width=6, height=4))
        assert not img.data.any()
        assert (img.width, img.height, img.depth) == (6, 4, 8)

    def test_rect_paints_exact_pixel_count(self):
        spec = SceneSpec(width=8, height=8, shapes=(FilledRect(Rect(2, 2, 3, 3), 200),))
        img = render(spec)
        assert int((img.data == 200).sum()) == 9
        assert int((img.data == 0).sum()) == 64 - 9

    def test_radius_one_circle_is_a_plus(self):
        spec = SceneSpec(width=9, height=9, shapes=(FilledCircle((4, 4), 1, 50),))
        img = render(spec)
        want = {(4, 3), (3, 4), (4, 4), (5, 4), (4, 5)}
        got = {(int(x), int(y)) for y, x in zip(*np.nonzero(img.data))}
        assert got == want

    def test_circle_membership_matches_inequality(self):
        cx, cy, rad = 10, 8, 5
        spec = SceneSpec(width=20, height=20, shapes=(FilledCircle((cx, cy), rad, 9),))
        img = render(spec)
        for y in range(20):
            for x in range(20):
                inside = (x - cx) ** 2 + (y - cy) ** 2 <= rad * rad
                assert (img.data[y, x] == 9) == inside

    def test_later_shapes_overwrite_earlier(self):
        spec = SceneSpec(
            width=8,
            height=8,
            shapes=(FilledRect(Rect(0, 0, 8, 8), 10), FilledRect(Rect(2, 2, 2, 2), 7)),
        )
        img = render(spec)
        assert img.data[3, 3] == 7
        assert img.data[0, 0] == 10

    def test_deterministic(self):
        spec = three_circles_scene()[0]
        assert render(spec) == render(spec)

    def test_rect_out_of_bounds(self):
        spec = SceneSpec(width=8, height=8, shapes=(FilledRect(Rect(6, 6, 4, 4), 1),))
        with pytest.raises(ValueError):
            render(spec)

    def test_circle_out_of_bounds(self):
        spec = SceneSpec(width=8, height=8, shapes=(FilledCircle((7, 4), 2, 1),))
        with pytest.raises(ValueError):
            render(spec)

    def test_value_out_of_depth(self):
        spec = SceneSpec(width=4, height=4, shapes=(FilledRect(Rect(0, 0, 2, 2), 300),))
        with pytest.raises(ValueError):
            render(spec)

    def test_16bit_scene(self):
        spec = SceneSpec(width=4, height=4, depth=16, shapes=(FilledRect(Rect(0, 0, 2, 2), 40000),))
        img = render(spec)
        assert img.depth == 16
        assert img.data[0, 0] == 40000


class TestBuiltinScenes:
    def test_rects_scene_geometry(self):
        spec, expected = three_rects_scene()
        assert expected == 3
        values = [s.value for s in spec.shapes]
        assert len(set(values)) == 4 and 0 in values
        bright = [s for s in spec.shapes if s.value > 0]
        assert len(bright) == 3
        for s in bright:
            assert s.rect.w >= 10 and s.rect.h >= 10

    def test_circles_scene_geometry(self):
        spec, expected = three_circles_scene()
        assert expected == 3
        assert len({s.value for s in spec.shapes}) == 3
        for s in spec.shapes:
            assert 2 * s.radius >= 10
