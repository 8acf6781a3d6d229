"""CSV serialization for sinograms, pipeline traces and compare reports.

Integers are printed exactly; reals carry 9 significant digits and
always include a decimal point so the columns stay visibly typed.
"""

import csv
import io

import numpy as np

from .analysis import CompareReport
from .exact import ExactSinogram
from .pipeline import TraceEntry
from .projection import OctantSinogram


def fmt_real(x: float) -> str:
    s = f"{float(x):.9g}"
    if s.lstrip("+-").isdigit():
        s += ".0"
    return s


def write_sinogram_csv(sino) -> bytes:
    """Serialize an OctantSinogram or ExactSinogram, one row per angle."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if isinstance(sino, OctantSinogram):
        bins = sino.rows.shape[1]
        w.writerow(["k", "slope", "angle_deg"] + [f"b{i}" for i in range(bins)])
        for k in range(sino.n):
            w.writerow(
                [k, fmt_real(sino.slopes[k]), fmt_real(sino.angles_deg[k])]
                + [int(v) for v in sino.rows[k]]
            )
    elif isinstance(sino, ExactSinogram):
        bins = sino.values.shape[1]
        w.writerow(["angle_deg"] + [f"r{i}" for i in range(bins)])
        for i, angle in enumerate(sino.angles_deg):
            w.writerow([fmt_real(angle)] + [fmt_real(v) for v in sino.values[i]])
    else:
        raise TypeError(f"cannot serialize {type(sino).__name__}")
    return buf.getvalue().encode("ascii")


def read_octant_sinogram_csv(data: bytes):
    """Parse an octant CSV back into (ks, slopes, angles_deg, bins).

    Bins round-trip exactly; slope and angle columns come back as the
    printed 9-significant-digit values.
    """
    text = data.decode("ascii")
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header[:3] != ["k", "slope", "angle_deg"]:
        raise ValueError(f"not an octant sinogram CSV (header {header[:3]})")
    ks, slopes, angles, rows = [], [], [], []
    for rec in reader:
        ks.append(int(rec[0]))
        slopes.append(float(rec[1]))
        angles.append(float(rec[2]))
        rows.append([int(v) for v in rec[3:]])
    return (
        np.array(ks, dtype=np.int64),
        np.array(slopes, dtype=np.float64),
        np.array(angles, dtype=np.float64),
        np.array(rows, dtype=np.int64),
    )


def write_trace_csv(trace) -> bytes:
    """Serialize multiplexer decisions sorted by cycle, then stage."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["cycle", "stage", "row", "shift_bit"])
    for entry in sorted(trace, key=lambda t: (t.cycle, t.stage)):
        w.writerow([entry.cycle, entry.stage, entry.row, entry.shift_bit])
    return buf.getvalue().encode("ascii")


def read_trace_csv(data: bytes) -> list[TraceEntry]:
    text = data.decode("ascii")
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != ["cycle", "stage", "row", "shift_bit"]:
        raise ValueError(f"not a trace CSV (header {header})")
    return [TraceEntry(*(int(v) for v in rec)) for rec in reader]


def write_compare_csv(reports) -> bytes:
    """Serialize one or more CompareReports into a single record table."""
    if isinstance(reports, CompareReport):
        reports = [reports]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(
        ["octant", "k", "slope", "angle_deg", "lag", "rmse", "max_abs_diff", "pearson"]
    )
    for report in reports:
        for rec in report.records:
            w.writerow(
                [
                    report.octant.value,
                    rec.k,
                    fmt_real(rec.slope),
                    fmt_real(rec.angle_deg),
                    rec.lag,
                    fmt_real(rec.rmse),
                    fmt_real(rec.max_abs_diff),
                    fmt_real(rec.pearson),
                ]
            )
    return buf.getvalue().encode("ascii")
