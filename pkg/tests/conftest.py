import numpy as np
import pytest
from hypothesis import strategies as st

import shearadon as sh


def random_image(rng, n=None, lo=0, hi=255) -> sh.Image:
    if n is None:
        n = int(rng.integers(2, 33))
    return sh.Image(rng.integers(lo, hi + 1, size=(n, n), dtype=np.int64))


def disk_line_image(n=64, radius=20, disk_value=200, line_value=255) -> sh.Image:
    """Centered disk plus a 45-degree diagonal line of bright pixels."""
    ctr = (n - 1) / 2.0
    ax = np.arange(n)
    dist2 = (ax[:, None] - ctr) ** 2 + (ax[None, :] - ctr) ** 2
    px = np.where(dist2 <= radius * radius, disk_value, 0).astype(np.int64)
    px[ax, ax] = line_value
    return sh.Image(px)


def image_strategy(min_side=2, max_side=12):
    def build(n):
        return st.lists(
            st.lists(st.integers(0, 255), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        ).map(sh.Image)

    return st.integers(min_side, max_side).flatmap(build)


@pytest.fixture
def rng():
    return np.random.default_rng(0xC0FFEE)


@pytest.fixture
def img3():
    return sh.Image([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
