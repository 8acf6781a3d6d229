import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import disk_line_image
from shearadon import (
    Image,
    Octant,
    UndefinedCorrelationError,
    align_and_compare,
    compare_octant,
    equivalent_angles,
    exact_angle_for,
    exact_radon,
    full_approx_radon,
    pearson,
    rmse,
)
from shearadon.exact import ExactSinogram


def test_rmse_examples():
    assert rmse([1, 2, 3], [1, 2, 3]) == 0.0
    assert rmse([0, 0], [3, 4]) == pytest.approx(math.sqrt(12.5))
    assert rmse([1], [4]) == 3.0


def test_rmse_errors():
    with pytest.raises(ValueError):
        rmse([1, 2], [1])
    with pytest.raises(ValueError):
        rmse([], [])


def test_pearson_examples():
    assert pearson([1, 2, 4], [1, 2, 4]) == 1.0
    assert pearson([1, 2, 4], [-1, -2, -4]) == -1.0
    assert pearson([1, 2, 3], [2, 4, 6]) == pytest.approx(1.0)


def test_pearson_errors():
    with pytest.raises(UndefinedCorrelationError):
        pearson([5, 5, 5], [5, 5, 5])
    with pytest.raises(UndefinedCorrelationError):
        pearson([5, 5, 5], [1, 2, 3])
    with pytest.raises(ValueError):
        pearson([1], [2])
    with pytest.raises(ValueError):
        pearson([1, 2], [1, 2, 3])


@given(
    st.lists(st.floats(-100, 100), min_size=2, max_size=12),
    st.floats(0.1, 50),
    st.floats(-20, 20),
)
def test_pearson_affine_invariance(xs, scale, offset):
    assume(max(xs) - min(xs) > 1e-6)
    ys = [scale * v + offset for v in xs]
    base = [float(i % 3) for i in range(len(xs))]
    assume(max(base) - min(base) > 0)
    assert pearson(xs, base) == pytest.approx(pearson(ys, base), abs=1e-9)


@given(st.lists(st.floats(-50, 50), min_size=1, max_size=10), st.lists(st.floats(-50, 50), min_size=1, max_size=10))
def test_rmse_symmetry(a, b):
    assume(len(a) == len(b))
    assert rmse(a, b) == pytest.approx(rmse(b, a))


def test_align_identical_rows():
    row = [1, 5, 2, 8, 3]
    lag, e, diff, r = align_and_compare(row, row, max_lag=3)
    assert (lag, e, diff) == (0, 0.0, 0.0)
    assert r == pytest.approx(1.0)


def test_align_constructed_shift():
    row = np.array([0, 3, 9, 4, 1, 0, 0])
    exact = np.zeros_like(row)
    exact[2:] = row[:-2]
    lag, e, _, r = align_and_compare(row, exact, max_lag=4)
    assert lag == 2
    assert e == 0.0
    assert r == pytest.approx(1.0)


def test_align_rejects_degenerate_inputs():
    with pytest.raises(UndefinedCorrelationError):
        align_and_compare([3, 3, 3], [1, 1, 1], max_lag=2)
    with pytest.raises(ValueError):
        align_and_compare([], [1, 2], max_lag=1)
    with pytest.raises(ValueError):
        align_and_compare([1, 2], [1, 2], max_lag=-1)


@settings(max_examples=60)
@given(
    st.lists(st.integers(0, 50), min_size=3, max_size=12),
    st.integers(-4, 4),
)
def test_align_recovers_constructed_lag(xs, lag):
    arr = np.array(xs, dtype=np.int64)
    shifted = np.zeros_like(arr)
    if lag >= 0:
        if lag < len(arr):
            shifted[lag:] = arr[: len(arr) - lag]
    else:
        shifted[:lag] = arr[-lag:]
    assume(shifted.max() > shifted.min())
    got_lag, e, diff, r = align_and_compare(arr, shifted, max_lag=6)
    # the constructed lag reproduces `shifted` exactly, so the winner must
    # reach rmse 0 too, at a lag no farther from zero
    assert e == 0.0
    assert diff == 0.0
    assert r == pytest.approx(1.0)
    assert abs(got_lag) <= abs(lag)


ANGLE_CASES = [
    (Octant.DEG0TO45, 0.0, 0.0, False),
    (Octant.DEG0TO45, 1.0, 45.0, False),
    (Octant.DEG45TO90, 0.0, 90.0, False),
    (Octant.DEG45TO90, 1.0, 45.0, False),
    (Octant.DEG90TO135, 0.0, 90.0, True),
    (Octant.DEG90TO135, 1.0, 135.0, True),
    (Octant.DEG135TO180, 0.0, 0.0, True),
    (Octant.DEG135TO180, 1.0, 135.0, False),
]


@pytest.mark.parametrize("octant, slope, theta, reversed_axis", ANGLE_CASES)
def test_equivalent_angle_table(octant, slope, theta, reversed_axis):
    got_theta, got_rev = exact_angle_for(octant, slope)
    assert got_theta == pytest.approx(theta)
    assert got_rev == reversed_axis


def test_equivalent_angles_bands():
    slopes = np.linspace(0.0, 1.0, 9)
    bands = {
        Octant.DEG0TO45: (0.0, 45.0),
        Octant.DEG45TO90: (45.0, 90.0),
        Octant.DEG90TO135: (90.0, 135.0),
        Octant.DEG135TO180: (0.0, 180.0),
    }
    for octant, (lo, hi) in bands.items():
        angles = equivalent_angles(octant, slopes)
        assert np.all(angles >= lo - 1e-12)
        assert np.all(angles <= hi + 1e-12)


def _synthetic_exact_from(sino):
    """Exact sinogram that replays the octant's own rows in exact orientation."""
    values = []
    for k in range(sino.n):
        _, rev = exact_angle_for(sino.octant, float(sino.slopes[k]))
        row = sino.rows[k][::-1] if rev else sino.rows[k]
        values.append(row.astype(np.float64))
    return ExactSinogram(
        angles_deg=equivalent_angles(sino.octant, sino.slopes),
        rho_centers=np.arange(2 * sino.n - 1, dtype=np.float64),
        values=np.array(values),
        op_count=0,
    )


def test_compare_octant_self_test(img3):
    sinos = full_approx_radon(img3)
    for octant, sino in sinos.items():
        report = compare_octant(img3, sino, _synthetic_exact_from(sino))
        assert len(report.records) == 3
        for rec in report.records:
            assert rec.lag == 0
            assert rec.rmse == 0.0
            assert rec.pearson == pytest.approx(1.0)
        assert report.mean_pearson == pytest.approx(1.0)


def test_compare_octant_rejects_wrong_angles(img3):
    sinos = full_approx_radon(img3)
    sino = sinos[Octant.DEG0TO45]
    exact = exact_radon(img3, [1.0, 2.0, 3.0])
    with pytest.raises(ValueError):
        compare_octant(img3, sino, exact)


def test_compare_octant_delta_image():
    n = 8
    px = np.zeros((n, n), dtype=np.int64)
    px[5, 2] = 150
    img = Image(px)
    for octant, sino in full_approx_radon(img).items():
        exact = exact_radon(img, equivalent_angles(octant, sino.slopes))
        report = compare_octant(img, sino, exact)
        assert len(report.records) == n
        for rec in report.records:
            assert rec.pearson > 0.0


def test_delta_spike_lands_where_exact_projects():
    n = 16
    r0, c0 = 3, 11
    px = np.zeros((n, n), dtype=np.int64)
    px[r0, c0] = 200
    img = Image(px)
    x0, y0 = c0 - (n - 1) / 2.0, r0 - (n - 1) / 2.0
    for octant, sino in full_approx_radon(img).items():
        exact = exact_radon(img, equivalent_angles(octant, sino.slopes))
        origin = float(exact.rho_centers[0])
        report = compare_octant(img, sino, exact)
        for k, rec in enumerate(report.records):
            _, rev = exact_angle_for(octant, float(sino.slopes[k]))
            row = sino.rows[k][::-1] if rev else sino.rows[k]
            spike = int(np.argmax(row))
            th = math.radians(rec.angle_deg)
            ideal = (x0 * math.cos(th) + y0 * math.sin(th)) - origin
            assert abs(spike + rec.lag - ideal) <= 0.75


def test_disk_correlation_is_high():
    img = disk_line_image(n=32, radius=10)
    sino = full_approx_radon(img)[Octant.DEG0TO45]
    exact = exact_radon(img, equivalent_angles(Octant.DEG0TO45, sino.slopes))
    report = compare_octant(img, sino, exact)
    assert report.mean_pearson > 0.9
