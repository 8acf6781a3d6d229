"""Cycle-accurate model of the row-pipelined projection architecture.

The datapath is a chain of N row-word registers. Image rows enter at
stage 1, one per clock, top row first, with the row offset riding along
in a side register. A row leaving stage j is added lane-wise into
accumulator j-1 and then passes the stage-j multiplexer, which either
forwards it unchanged or shifts it by one lane (toward higher bin index,
zero fill at lane 0) as the line-equation calculator dictates. After the
N fill clocks, accumulator 0 completes on clock N+1 and each subsequent
angle completes one clock later, for 2N clocks in total.

Row words are 2N-1 lanes wide. Accumulator lanes carry
8 + ceil(log2 N) bits, wide enough that N additions of 8-bit pixels can
never overflow; the adder model checks that bound on every write.
"""

import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .image import Image
from .projection import Octant, OctantSinogram, slope_metadata
from .shifts import total_shift


class TraceEntry(NamedTuple):
    """One multiplexer decision: which stage shifted which row on which clock."""

    cycle: int
    stage: int
    row: int
    shift_bit: int


@dataclass(frozen=True)
class PipelineConfig:
    """Datapath sizing derived from the image side."""

    n: int
    pixel_bits: int = 8
    lane_count: int = field(init=False)
    acc_bits: int = field(init=False)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"image side must be >= 2, got {self.n}")
        object.__setattr__(self, "lane_count", 2 * self.n - 1)
        object.__setattr__(
            self, "acc_bits", self.pixel_bits + math.ceil(math.log2(self.n))
        )
        if self.n * (2**self.pixel_bits - 1) >= 2**self.acc_bits:
            raise ValueError("accumulator lanes too narrow for worst-case input")


def line_eq_calc(j: int, d: int, n: int) -> int:
    """Shift-or-pass control bit for stage j acting on row offset d.

    The bit is the per-stage increment of the cumulative shift schedule,
    so it is always 0 or 1. Row 0 never shifts; row n-1 shifts at every
    stage.
    """
    if not 1 <= j <= n - 1:
        raise ValueError(f"stage index {j} out of range [1, {n - 1}]")
    return total_shift(d, j, n) - total_shift(d, j - 1, n)


class PipelineState:
    """Registers, accumulators and bookkeeping for one simulation run.

    Single-caller: step() mutates in place. Distinct instances are
    independent.
    """

    def __init__(self, img: Image, cfg: PipelineConfig):
        if cfg.n != img.n:
            raise ValueError(f"config built for n={cfg.n}, image has n={img.n}")
        self.cfg = cfg
        self.cycle = 0
        n = cfg.n
        self._pending = img.pixels.astype(np.int64)
        self._next_row = 0
        # stage_words[i] models the register of stage i+1; None = empty slot
        self.stage_words: list[np.ndarray | None] = [None] * n
        self.row_num_regs: list[int | None] = [None] * n
        self.acc = np.zeros((n, cfg.lane_count), dtype=np.int64)
        self._acc_rows = [0] * n
        self.ready: list[int | None] = [None] * n
        self.trace: list[TraceEntry] = []

    @property
    def finished(self) -> bool:
        return all(r is not None for r in self.ready)

    def _accumulate(self, k: int, word: np.ndarray) -> None:
        self.acc[k] += word
        if int(self.acc[k].max()) >= 2**self.cfg.acc_bits:
            raise OverflowError(
                f"accumulator {k} lane exceeded {self.cfg.acc_bits} bits"
            )
        self._acc_rows[k] += 1


def sim_new(img: Image, cfg: PipelineConfig) -> PipelineState:
    """Fresh state at cycle 0: empty stages, zero accumulators."""
    return PipelineState(img, cfg)


def sim_step(state: PipelineState) -> PipelineState:
    """Advance one clock. Stepping a finished run only increments the cycle."""
    n = state.cfg.n
    clock = state.cycle + 1
    # rows advance in lockstep; draining from the last stage down lets the
    # moves happen in place
    for i in range(n - 1, -1, -1):
        word = state.stage_words[i]
        if word is None:
            continue
        d = state.row_num_regs[i]
        state.stage_words[i] = None
        state.row_num_regs[i] = None
        j = i + 1  # 1-based stage number
        state._accumulate(j - 1, word)
        if state._acc_rows[j - 1] == n and state.ready[j - 1] is None:
            state.ready[j - 1] = clock
        if j < n:
            bit = line_eq_calc(j, d, n)
            state.trace.append(TraceEntry(clock, j, d, bit))
            if bit:
                shifted = np.zeros_like(word)
                shifted[1:] = word[:-1]
                word = shifted
            state.stage_words[i + 1] = word
            state.row_num_regs[i + 1] = d
    if state._next_row < n:
        word = np.zeros(state.cfg.lane_count, dtype=np.int64)
        word[:n] = state._pending[state._next_row]
        state.stage_words[0] = word
        state.row_num_regs[0] = state._next_row
        state._next_row += 1
    state.cycle = clock
    return state


def sim_run(img: Image) -> tuple[OctantSinogram, list[TraceEntry]]:
    """Run the pipeline to completion on one image.

    Returns the 0-45 octant sinogram read out of the accumulators in
    canonical bin order, plus the full multiplexer trace.
    """
    cfg = PipelineConfig(img.n)
    state = sim_new(img, cfg)
    while not state.finished:
        sim_step(state)
    rows = state.acc.copy()
    rows.setflags(write=False)
    slopes, angles = slope_metadata(img.n)
    sino = OctantSinogram(
        octant=Octant.DEG0TO45,
        n=img.n,
        rows=rows,
        slopes=slopes,
        angles_deg=angles,
        preprocessing=Octant.DEG0TO45.preprocessing,
    )
    return sino, list(state.trace)
