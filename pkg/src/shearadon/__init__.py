"""Shear-based approximate discrete Radon transform.

Projections are computed by shifting image rows whole pixels and summing
columns, one 45-degree octant natively and the other three via mirror
and transpose preprocessing. The package also carries an exact
fractional-weight reference transform, a cycle-accurate simulation of a
row-pipelined hardware datapath computing the same projections in 2N
clocks, alignment metrics comparing the two transforms, and PGM/CSV/CLI
plumbing.
"""

from .analysis import (
    AngleComparison,
    CompareReport,
    UndefinedCorrelationError,
    align_and_compare,
    compare_octant,
    equivalent_angles,
    exact_angle_for,
    pearson,
    rmse,
)
from .exact import ExactSinogram, exact_radon, op_count_estimate, rho_axis
from .image import Image, mirror_h, transpose
from .kernels import backend_name
from .pgm import PgmParseError, read_pgm, write_pgm
from .pipeline import (
    PipelineConfig,
    PipelineState,
    TraceEntry,
    line_eq_calc,
    sim_new,
    sim_run,
    sim_step,
)
from .projection import (
    Octant,
    OctantSinogram,
    discrete_line_project,
    full_approx_radon,
    project_octant,
    shear_project_octant,
)
from .shifts import ShiftTable, build_shift_table, total_shift
from .sinocsv import (
    read_octant_sinogram_csv,
    read_trace_csv,
    write_compare_csv,
    write_sinogram_csv,
    write_trace_csv,
)

__version__ = "0.1.0"

__all__ = [
    "AngleComparison",
    "CompareReport",
    "ExactSinogram",
    "Image",
    "Octant",
    "OctantSinogram",
    "PgmParseError",
    "PipelineConfig",
    "PipelineState",
    "ShiftTable",
    "TraceEntry",
    "UndefinedCorrelationError",
    "align_and_compare",
    "backend_name",
    "build_shift_table",
    "compare_octant",
    "discrete_line_project",
    "equivalent_angles",
    "exact_angle_for",
    "exact_radon",
    "full_approx_radon",
    "line_eq_calc",
    "mirror_h",
    "op_count_estimate",
    "pearson",
    "project_octant",
    "read_octant_sinogram_csv",
    "read_pgm",
    "read_trace_csv",
    "rho_axis",
    "rmse",
    "shear_project_octant",
    "sim_new",
    "sim_run",
    "sim_step",
    "total_shift",
    "transpose",
    "write_compare_csv",
    "write_pgm",
    "write_sinogram_csv",
    "write_trace_csv",
    "__version__",
]
