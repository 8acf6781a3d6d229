"""Cumulative row shifts realizing the discrete projection lines.

The projection at angle index k (slope t_k = k/(n-1)) is computed by
shifting row d right by a whole number of pixels and summing columns.
The shift is the rounded ideal offset d*t_k, with the half tie broken
upward, so consecutive angle indices never differ by more than one
pixel per row. That unit-increment property is what lets a single
shift-by-one multiplexer per pipeline stage realize every line.
"""

from dataclasses import dataclass

import numpy as np


def total_shift(d: int, k: int, n: int) -> int:
    """Cumulative shift of row d at angle index k for an n-by-n image.

    Parameters
    ----------
    d : int
        Row offset from the top, 0 <= d < n.
    k : int
        Angle index, 0 <= k < n. Slope is k/(n-1).
    n : int
        Image side, n >= 2.

    Returns
    -------
    int
        round-half-up(d*k/(n-1)), which lies in [0, d]. Zero for k=0
        and exactly d for k=n-1.
    """
    if n < 2:
        raise ValueError(f"image side must be >= 2, got {n}")
    if not 0 <= d < n:
        raise ValueError(f"row offset {d} out of range [0, {n})")
    if not 0 <= k < n:
        raise ValueError(f"angle index {k} out of range [0, {n})")
    # floor(d*k/(n-1) + 1/2) in exact integer arithmetic
    return (2 * d * k + (n - 1)) // (2 * (n - 1))


@dataclass(frozen=True, eq=False)
class ShiftTable:
    """Shift grid s[d][k] = total_shift(d, k, n), read-only int64."""

    n: int
    s: np.ndarray


def build_shift_table(n: int) -> ShiftTable:
    """Tabulate total_shift for every (row offset, angle index) pair.

    Parameters
    ----------
    n : int
        Image side, n >= 2.

    Returns
    -------
    ShiftTable
        Table whose column k=0 is all zeros, whose column k=n-1 equals
        the row offsets, whose columns step by 0 or 1, and whose rows
        are nondecreasing down the image.
    """
    if n < 2:
        raise ValueError(f"image side must be >= 2, got {n}")
    d = np.arange(n, dtype=np.int64)[:, None]
    k = np.arange(n, dtype=np.int64)[None, :]
    s = (2 * d * k + (n - 1)) // (2 * (n - 1))
    s.setflags(write=False)
    return ShiftTable(n=n, s=s)
