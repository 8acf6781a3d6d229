import numpy as np
import pytest
from hypothesis import given, settings

from conftest import image_strategy, random_image
from shearadon import (
    Image,
    PipelineConfig,
    build_shift_table,
    line_eq_calc,
    shear_project_octant,
    sim_new,
    sim_run,
    sim_step,
)

EXPECTED_TRACE_N3 = [
    (2, 1, 0, 0),
    (3, 1, 1, 1),
    (3, 2, 0, 0),
    (4, 1, 2, 1),
    (4, 2, 1, 0),
    (5, 2, 2, 1),
]


def test_config_sizing():
    cfg = PipelineConfig(4)
    assert cfg.lane_count == 7
    assert cfg.acc_bits == 10
    assert PipelineConfig(6).acc_bits == 11
    assert PipelineConfig(2).acc_bits == 9


def test_config_rejects_small_n():
    with pytest.raises(ValueError):
        PipelineConfig(1)


def test_line_eq_calc_boundary_rows():
    n = 8
    for j in range(1, n):
        assert line_eq_calc(j, 0, n) == 0
        assert line_eq_calc(j, n - 1, n) == 1


def test_line_eq_calc_n3_middle_row():
    assert line_eq_calc(1, 1, 3) == 1
    assert line_eq_calc(2, 1, 3) == 0


def test_line_eq_calc_rejects_bad_stage():
    with pytest.raises(ValueError):
        line_eq_calc(0, 1, 4)
    with pytest.raises(ValueError):
        line_eq_calc(4, 1, 4)


def test_sim_new_empty_state():
    img = Image(np.arange(16).reshape(4, 4))
    state = sim_new(img, PipelineConfig(4))
    assert state.cycle == 0
    assert state.stage_words == [None] * 4
    assert state.acc.shape == (4, 7)
    assert not state.acc.any()
    assert state.ready == [None] * 4


def test_sim_new_rejects_mismatch():
    with pytest.raises(ValueError):
        sim_new(Image([[1, 2], [3, 4]]), PipelineConfig(3))


def test_zero_image_keeps_accumulators_zero():
    img = Image(np.zeros((4, 4), dtype=np.int64))
    state = sim_new(img, PipelineConfig(4))
    for _ in range(2 * 4):
        sim_step(state)
        assert not state.acc.any()
    assert state.ready == [5, 6, 7, 8]


def test_three_by_three_run(img3):
    sino, trace = sim_run(img3)
    assert sino.rows.tolist() == [
        [12, 15, 18, 0, 0],
        [1, 13, 16, 15, 0],
        [1, 6, 15, 14, 9],
    ]
    assert sorted(trace) == sorted(EXPECTED_TRACE_N3)
    assert len(trace) == 3 * 2


def test_ready_schedule_n3(img3):
    state = sim_new(img3, PipelineConfig(3))
    while not state.finished:
        sim_step(state)
    assert state.ready == [4, 5, 6]
    assert state.cycle == 6


@pytest.mark.parametrize("n", [2, 4, 8, 16, 32, 64])
def test_latency_law(n, rng):
    img = random_image(rng, n=n)
    state = sim_new(img, PipelineConfig(n))
    while not state.finished:
        sim_step(state)
    assert state.ready == [n + 1 + k for k in range(n)]
    assert state.cycle == 2 * n


@settings(max_examples=30, deadline=None)
@given(image_strategy(max_side=9))
def test_matches_shear_projection(img):
    sino, _ = sim_run(img)
    table = build_shift_table(img.n)
    for k in range(img.n):
        assert np.array_equal(sino.rows[k], shear_project_octant(img, table, k))


def test_trace_complete_and_consistent(rng):
    img = random_image(rng, n=7)
    _, trace = sim_run(img)
    assert len(trace) == 7 * 6
    seen = {(t.stage, t.row) for t in trace}
    assert seen == {(j, d) for j in range(1, 7) for d in range(7)}
    for t in trace:
        assert t.shift_bit == line_eq_calc(t.stage, t.row, 7)
        assert t.cycle == t.row + 1 + t.stage


def test_runs_are_deterministic(rng):
    img = random_image(rng, n=6)
    sino1, trace1 = sim_run(img)
    sino2, trace2 = sim_run(img)
    assert np.array_equal(sino1.rows, sino2.rows)
    assert trace1 == trace2


def test_stepping_past_completion_is_inert(img3):
    state = sim_new(img3, PipelineConfig(3))
    for _ in range(6):
        sim_step(state)
    acc = state.acc.copy()
    ready = list(state.ready)
    trace_len = len(state.trace)
    sim_step(state)
    assert state.cycle == 7
    assert np.array_equal(state.acc, acc)
    assert state.ready == ready
    assert len(state.trace) == trace_len


def test_delta_image_single_lane(rng):
    n = 6
    px = np.zeros((n, n), dtype=np.int64)
    px[4, 2] = 200
    sino, _ = sim_run(Image(px))
    for k in range(n):
        assert np.count_nonzero(sino.rows[k]) == 1


def test_overflow_guard_is_armed(img3):
    state = sim_new(img3, PipelineConfig(3))
    sim_step(state)  # row 0 now sits in stage 1
    state.acc[0, :] = 2**state.cfg.acc_bits - 1
    with pytest.raises(OverflowError):
        sim_step(state)


@pytest.mark.parametrize("n", [2, 3, 8, 32])
def test_worst_case_image_never_overflows(n):
    img = Image(np.full((n, n), 255, dtype=np.int64))
    state = sim_new(img, PipelineConfig(n))
    bound = 2**state.cfg.acc_bits
    while not state.finished:
        sim_step(state)
        assert int(state.acc.max()) < bound
