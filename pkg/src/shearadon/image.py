"""Square 8-bit grayscale images and the two octant preprocessing steps."""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class Image:
    """An n-by-n raster of intensities in [0, 255].

    Accepts any nested sequence or integer array; the stored grid is a
    read-only contiguous uint8 copy.
    """

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.pixels)
        if arr.ndim != 2:
            raise ValueError(f"image must be 2-D, got {arr.ndim} dimensions")
        h, w = arr.shape
        if h != w:
            raise ValueError(f"image must be square, got {h}x{w}")
        if h < 2:
            raise ValueError(f"image side must be >= 2, got {h}")
        if arr.dtype.kind not in "iu":
            raise ValueError(f"pixel intensities must be integers, got dtype {arr.dtype}")
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise ValueError("pixel intensities must lie in [0, 255]")
        arr = np.ascontiguousarray(arr, dtype=np.uint8)
        arr.setflags(write=False)
        object.__setattr__(self, "pixels", arr)

    @property
    def n(self) -> int:
        return self.pixels.shape[0]

    def total_mass(self) -> int:
        return int(self.pixels.sum(dtype=np.int64))


def mirror_h(img: Image) -> Image:
    """Flip left/right: pixel (r, c) moves to (r, n-1-c). An involution."""
    return Image(img.pixels[:, ::-1])


def transpose(img: Image) -> Image:
    """Swap rows and columns: pixel (r, c) moves to (c, r). An involution."""
    return Image(img.pixels.T)
