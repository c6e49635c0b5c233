import numpy as np
import pytest

from dispseg import BinaryImage, GrayImage


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240817)


def make_gray(arr, depth=None) -> GrayImage:
    return GrayImage.from_array(np.asarray(arr), depth=depth)


def make_binary(arr) -> BinaryImage:
    arr = np.asarray(arr, dtype=np.uint8)
    h, w = arr.shape
    return BinaryImage(width=w, height=h, data=arr)
