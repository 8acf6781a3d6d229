"""Numpy implementations of the hot projection kernels.

Same contracts as the compiled extension in ``_kernels.pyx``; this module
is the fallback used when the extension has not been built.
"""

import math

import numpy as np

BACKEND_NAME = "python"


def project_one_angle(pixels: np.ndarray, shifts: np.ndarray) -> np.ndarray:
    """Accumulate the n shifted rows of an n-by-n uint8 grid into 2n-1 bins."""
    n = pixels.shape[0]
    out = np.zeros(2 * n - 1, dtype=np.int64)
    for d in range(n):
        s = int(shifts[d])
        out[s : s + n] += pixels[d]
    return out


def project_all_angles(pixels: np.ndarray, table: np.ndarray) -> np.ndarray:
    """Row-shift projections for every angle index; table is the (n, n) shift grid."""
    n = pixels.shape[0]
    out = np.zeros((n, 2 * n - 1), dtype=np.int64)
    for k in range(n):
        col = table[:, k]
        row_out = out[k]
        for d in range(n):
            s = int(col[d])
            row_out[s : s + n] += pixels[d]
    return out


# subpixel centers at (+-1/4, +-1/4) of the pixel center, fixed order
_QX = (-0.25, -0.25, 0.25, 0.25)
_QY = (-0.25, 0.25, -0.25, 0.25)


def exact_project(
    pixels: np.ndarray,
    angles_rad: np.ndarray,
    rho_origin: float,
    r_count: int,
) -> tuple[np.ndarray, int]:
    """Fractional-weight projection of 4 subpixels per pixel per angle.

    Returns the (P, R) float64 grid and the number of subpixel projection
    operations actually performed.
    """
    n = pixels.shape[0]
    p = len(angles_rad)
    ctr = 0.5 * (n - 1)
    x = np.arange(n, dtype=np.float64) - ctr
    y = np.arange(n, dtype=np.float64) - ctr
    quarter = pixels.astype(np.float64) * 0.25
    out = np.zeros((p, r_count), dtype=np.float64)
    ops = 0
    for a in range(p):
        co = math.cos(float(angles_rad[a]))
        si = math.sin(float(angles_rad[a]))
        base = x[None, :] * co + y[:, None] * si
        qoff = np.array([qx * co + qy * si for qx, qy in zip(_QX, _QY)])
        # positions laid out (row, col, quadrant) to keep one deterministic
        # accumulation order per angle
        pos = base[:, :, None] + qoff[None, None, :] - rho_origin
        i0 = np.floor(pos).astype(np.int64)
        frac = pos - i0
        mass = quarter[:, :, None]
        idx = np.stack([i0, i0 + 1], axis=-1).ravel()
        wts = np.stack([mass * (1.0 - frac), mass * frac], axis=-1).ravel()
        np.add.at(out[a], idx, wts)
        ops += pos.size
    return out, ops
