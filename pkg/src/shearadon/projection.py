"""Octant projections of the approximate discrete Radon transform.

One octant covers slopes 0 through 1 (angle indices k = 0..n-1, slope
t_k = k/(n-1)). The other three octants reuse the same computation after
mirroring and/or transposing the input. Bins are indexed canonically:
pixel (d, c) lands in bin c + s[d][k], so shifts move content toward
higher bin indices.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .image import Image, mirror_h, transpose
from .kernels import active as _kern
from .shifts import ShiftTable, build_shift_table


class Octant(Enum):
    """One 45-degree band of projection directions."""

    DEG0TO45 = "deg0to45"
    DEG45TO90 = "deg45to90"
    DEG90TO135 = "deg90to135"
    DEG135TO180 = "deg135to180"

    @property
    def preprocessing(self) -> str:
        """Input transform applied before the native 0-45 computation."""
        return _PREPROCESSING[self]


_PREPROCESSING = {
    Octant.DEG0TO45: "identity",
    Octant.DEG45TO90: "transpose",
    Octant.DEG90TO135: "mirror_h+transpose",
    Octant.DEG135TO180: "mirror_h",
}


@dataclass(frozen=True, eq=False)
class OctantSinogram:
    """n projection rows of 2n-1 integer bins for one octant.

    slopes[k] and angles_deg[k] describe the native line family
    (t_k = k/(n-1), atan(t_k) in degrees) before any octant remapping.
    """

    octant: Octant
    n: int
    rows: np.ndarray
    slopes: np.ndarray
    angles_deg: np.ndarray
    preprocessing: str


def slope_metadata(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-angle-index slopes t_k = k/(n-1) and their angles in degrees."""
    slopes = np.arange(n, dtype=np.float64) / (n - 1)
    angles = np.degrees(np.arctan(slopes))
    return slopes, angles


def _check_pair(img: Image, table: ShiftTable) -> None:
    if table.n != img.n:
        raise ValueError(f"shift table built for n={table.n}, image has n={img.n}")


def shear_project_octant(img: Image, table: ShiftTable, k: int) -> np.ndarray:
    """Project one angle index by shifting rows and summing columns.

    Row d is moved right by table.s[d][k] bins; the 2n-1 bin totals are
    returned as int64. Total bin mass always equals the image mass.
    """
    _check_pair(img, table)
    if not 0 <= k < img.n:
        raise ValueError(f"angle index {k} out of range [0, {img.n})")
    shifts = np.ascontiguousarray(table.s[:, k])
    return _kern.project_one_angle(img.pixels, shifts)


def discrete_line_project(img: Image, table: ShiftTable, k: int) -> np.ndarray:
    """Walk each discrete line pixel by pixel and sum what it crosses.

    Independent check on shear_project_octant: the line feeding bin b
    starts at pixel (0, b) and steps straight down or down-left as the
    cumulative shift increments. No row shifting is involved.
    """
    _check_pair(img, table)
    n = img.n
    if not 0 <= k < n:
        raise ValueError(f"angle index {k} out of range [0, {n})")
    col = table.s[:, k].tolist()
    px = img.pixels.tolist()
    bins = np.zeros(2 * n - 1, dtype=np.int64)
    for b in range(2 * n - 1):
        total = 0
        c = b
        for d in range(n):
            if d:
                c -= col[d] - col[d - 1]
            if 0 <= c < n:
                total += px[d][c]
        bins[b] = total
    return bins


def project_octant(img: Image, table: ShiftTable | None = None) -> np.ndarray:
    """All n projection rows of the 0-45 octant as an (n, 2n-1) int64 grid."""
    if table is None:
        table = build_shift_table(img.n)
    _check_pair(img, table)
    return _kern.project_all_angles(img.pixels, np.ascontiguousarray(table.s))


def full_approx_radon(img: Image) -> dict[Octant, OctantSinogram]:
    """Compute all four octants of the approximate transform.

    The 0-45 band uses the image as-is; 135-180 mirrors it horizontally;
    45-90 transposes it; 90-135 mirrors the transpose.
    """
    n = img.n
    table = build_shift_table(n)
    slopes, angles = slope_metadata(n)
    inputs = {
        Octant.DEG0TO45: img,
        Octant.DEG45TO90: transpose(img),
        Octant.DEG90TO135: mirror_h(transpose(img)),
        Octant.DEG135TO180: mirror_h(img),
    }
    out = {}
    for octant, prepared in inputs.items():
        rows = project_octant(prepared, table)
        rows.setflags(write=False)
        out[octant] = OctantSinogram(
            octant=octant,
            n=n,
            rows=rows,
            slopes=slopes,
            angles_deg=angles,
            preprocessing=octant.preprocessing,
        )
    return out
