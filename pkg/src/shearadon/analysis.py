"""Numeric comparison of approximate octant rows against the exact transform.

Geometry note. Let alpha = atan(t_k) for slope t_k = k/(n-1). Each octant
row corresponds to one exact projection angle, found by tracking where
the preprocessing steps send the native 0-45 line family:

    octant        exact angle (deg)        bin axis vs exact rho axis
    0-45          alpha                    same direction
    45-90         90 - alpha               same direction
    90-135        90 + alpha               reversed
    135-180       180 - alpha (mod 180)    reversed only at alpha = 0

A "reversed" row runs against the exact rho axis and is flipped before
alignment. Both facts follow from the canonical bin convention
(bin = column + shift) and the center-origin exact frame; the disk
fixture comparison in the test suite pins them empirically.

Alignment itself is an integer-lag search: the approximate row is laid
onto the exact row's bin grid at every lag in [-max_lag, max_lag] with
zero fill where it does not cover the grid, and the lag with the highest
Pearson correlation wins.
"""

import math
from dataclasses import dataclass

import numpy as np

from .exact import ExactSinogram
from .image import Image
from .projection import Octant, OctantSinogram


class UndefinedCorrelationError(ValueError):
    """Raised when correlation is requested for constant input."""


def rmse(a, b) -> float:
    """Root mean squared difference of two equal-length vectors."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.ndim != 1 or b.ndim != 1:
        raise ValueError("rmse expects 1-D vectors")
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape[0]} vs {b.shape[0]}")
    if a.size == 0:
        raise ValueError("rmse of empty vectors is undefined")
    return float(np.sqrt(np.mean((a - b) ** 2)))


def pearson(a, b) -> float:
    """Pearson correlation coefficient, in [-1, 1]."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("pearson expects equal-length 1-D vectors")
    if a.size < 2:
        raise ValueError("pearson needs at least 2 samples")
    da = a - a.mean()
    db = b - b.mean()
    na = float(np.sqrt(np.sum(da * da)))
    nb = float(np.sqrt(np.sum(db * db)))
    if na == 0.0 or nb == 0.0:
        raise UndefinedCorrelationError("correlation undefined for constant input")
    r = float(np.sum(da * db) / (na * nb))
    return max(-1.0, min(1.0, r))


def _overlay(approx: np.ndarray, length: int, lag: int) -> np.ndarray:
    """Place approx onto a grid of the given length, offset by lag, zero fill."""
    out = np.zeros(length, dtype=np.float64)
    lo = max(0, lag)
    hi = min(length, lag + approx.shape[0])
    if hi > lo:
        out[lo:hi] = approx[lo - lag : hi - lag]
    return out


def align_and_compare(
    approx_row, exact_row, max_lag: int
) -> tuple[int, float, float, float]:
    """Best integer-lag alignment of an approximate row to an exact row.

    Scans lags in [-max_lag, max_lag], overlaying the approximate row on
    the exact row's grid with zero-padded overhang. The winning lag
    maximizes Pearson correlation; among correlation ties (to 1e-12) the
    smaller rmse wins, then the smaller |lag|, then the negative lag.

    Returns (lag, rmse, max_abs_diff, pearson) at the winning lag.
    """
    approx = np.asarray(approx_row, dtype=np.float64).ravel()
    exact = np.asarray(exact_row, dtype=np.float64).ravel()
    if approx.size == 0 or exact.size == 0:
        raise ValueError("rows must be non-empty")
    if max_lag < 0:
        raise ValueError(f"max_lag must be >= 0, got {max_lag}")
    best = None
    for lag in range(-max_lag, max_lag + 1):
        laid = _overlay(approx, exact.shape[0], lag)
        try:
            r = pearson(laid, exact)
        except UndefinedCorrelationError:
            continue
        e = rmse(laid, exact)
        key = (-round(r, 12), round(e, 12), abs(lag), lag > 0)
        if best is None or key < best[0]:
            diff = float(np.max(np.abs(laid - exact)))
            best = (key, (lag, e, diff, r))
    if best is None:
        raise UndefinedCorrelationError(
            "correlation undefined at every lag (constant rows)"
        )
    return best[1]


def exact_angle_for(octant: Octant, slope: float) -> tuple[float, bool]:
    """Exact projection angle for one octant row, plus its axis orientation.

    Returns (theta_deg in [0, 180), reversed); reversed means the row's
    bin axis runs against the exact rho axis.
    """
    alpha = math.degrees(math.atan(slope))
    raw = {
        Octant.DEG0TO45: alpha,
        Octant.DEG45TO90: 90.0 - alpha,
        Octant.DEG90TO135: 270.0 + alpha,
        Octant.DEG135TO180: 180.0 - alpha,
    }[octant]
    raw = raw % 360.0
    return raw % 180.0, raw >= 180.0


def equivalent_angles(octant: Octant, slopes) -> np.ndarray:
    """Exact angles (degrees, [0, 180)) for every row of an octant."""
    return np.array([exact_angle_for(octant, float(t))[0] for t in slopes])


@dataclass(frozen=True)
class AngleComparison:
    """Alignment metrics for one octant row against its exact counterpart."""

    k: int
    slope: float
    angle_deg: float
    lag: int
    rmse: float
    max_abs_diff: float
    pearson: float


@dataclass(frozen=True, eq=False)
class CompareReport:
    """Per-angle comparison records for one octant plus the mean correlation."""

    octant: Octant
    records: tuple[AngleComparison, ...]
    mean_pearson: float


def compare_octant(
    img: Image, octant: OctantSinogram, exact: ExactSinogram, max_lag: int | None = None
) -> CompareReport:
    """Align and score every octant row against the exact sinogram.

    The exact sinogram must have been computed at the octant's
    equivalent angles, in row order. max_lag defaults to the image side.
    """
    if octant.n != img.n:
        raise ValueError(f"octant built for n={octant.n}, image has n={img.n}")
    if max_lag is None:
        max_lag = img.n
    wanted = equivalent_angles(octant.octant, octant.slopes)
    got = np.asarray(exact.angles_deg, dtype=np.float64)
    if got.shape != wanted.shape or not np.allclose(got, wanted, atol=1e-9):
        raise ValueError("exact sinogram angles do not match the octant's angles")
    records = []
    for k in range(octant.n):
        _, reversed_axis = exact_angle_for(octant.octant, float(octant.slopes[k]))
        row = octant.rows[k][::-1] if reversed_axis else octant.rows[k]
        lag, e, diff, r = align_and_compare(row, exact.values[k], max_lag=max_lag)
        records.append(
            AngleComparison(
                k=k,
                slope=float(octant.slopes[k]),
                angle_deg=float(wanted[k]),
                lag=lag,
                rmse=e,
                max_abs_diff=diff,
                pearson=r,
            )
        )
    mean_r = float(np.mean([rec.pearson for rec in records]))
    return CompareReport(
        octant=octant.octant, records=tuple(records), mean_pearson=mean_r
    )
