"""Exact fractional-weight discrete Radon transform.

Quality reference for the approximate octant projections. Every pixel is
split into four quarter-mass subpixels at (+-1/4, +-1/4) of its center;
each subpixel center is projected onto the rho axis of the requested
angle and its mass is split linearly between the two nearest bins.

Coordinate frame: origin at the image center ((n-1)/2, (n-1)/2), x to
the right (columns), y downward (rows), rho measured along
(cos theta, sin theta) with theta in degrees. The rho grid has unit
spacing, an odd bin count, and one guard bin per side beyond the image
diagonal, so no subpixel ever spills off the grid.
"""

import math
from dataclasses import dataclass

import numpy as np

from .image import Image
from .kernels import active as _kern


@dataclass(frozen=True, eq=False)
class ExactSinogram:
    """P angles by R unit-spaced rho bins of real-valued projection mass."""

    angles_deg: np.ndarray
    rho_centers: np.ndarray
    values: np.ndarray
    op_count: int


def rho_axis(n: int) -> np.ndarray:
    """Unit-spaced rho bin centers, symmetric about 0, for an n-by-n image.

    R = 2*ceil(n*sqrt(2)/2) + 3 centers: the image diagonal plus one
    guard bin on each side.
    """
    if n < 2:
        raise ValueError(f"image side must be >= 2, got {n}")
    m = math.ceil(n * math.sqrt(2.0) / 2.0)
    return np.arange(-(m + 1), m + 2, dtype=np.float64)


def op_count_estimate(n: int, p: int) -> int:
    """Subpixel projections needed for p angles of an n-by-n image: 4*p*n^2."""
    if n < 2:
        raise ValueError(f"image side must be >= 2, got {n}")
    if p < 1:
        raise ValueError(f"angle count must be >= 1, got {p}")
    return 4 * p * n * n


def exact_radon(img: Image, angles_deg) -> ExactSinogram:
    """Project an image at the given angles (degrees, each in [0, 180)).

    Returns an ExactSinogram whose op_count records the number of
    subpixel projection operations actually performed, which equals
    op_count_estimate(n, len(angles_deg)).
    """
    angles = np.asarray(angles_deg, dtype=np.float64).ravel()
    if angles.size == 0:
        raise ValueError("at least one projection angle is required")
    if np.any(angles < 0.0) or np.any(angles >= 180.0):
        raise ValueError("angles must lie in [0, 180) degrees")
    centers = rho_axis(img.n)
    values, ops = _kern.exact_project(
        img.pixels, np.radians(angles), float(centers[0]), len(centers)
    )
    values.setflags(write=False)
    return ExactSinogram(
        angles_deg=angles,
        rho_centers=centers,
        values=values,
        op_count=int(ops),
    )
