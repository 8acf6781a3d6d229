"""Command-line surface tying the transform, simulator and comparison together."""

import argparse
import os
import sys
import tempfile
from pathlib import Path

import numpy as np

from .analysis import compare_octant, equivalent_angles
from .exact import exact_radon
from .image import Image
from .pgm import read_pgm, write_pgm
from .pipeline import sim_run
from .projection import Octant, full_approx_radon
from .sinocsv import write_compare_csv, write_sinogram_csv, write_trace_csv

_OCTANTS = {o.value: o for o in Octant}


def _write_atomic(path: Path, data: bytes) -> None:
    # whole-file atomic: write a sibling temp file, then rename over the target
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".")
    try:
        umask = os.umask(0)
        os.umask(umask)
        os.fchmod(fd, 0o666 & ~umask)
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _load_image(args) -> Image:
    data = Path(args.input).read_bytes()
    return read_pgm(data, pad_to_square=args.pad)


def _selected_octants(args) -> list[Octant]:
    if args.octant is None:
        return list(Octant)
    return [_OCTANTS[args.octant]]


def _parse_angles(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"bad --angles list: {text!r}") from None


def _cmd_approx(args) -> int:
    img = _load_image(args)
    outdir = Path(args.output)
    sinos = full_approx_radon(img)
    for octant in _selected_octants(args):
        sino = sinos[octant]
        _write_atomic(outdir / f"sinogram_{octant.value}.csv", write_sinogram_csv(sino))
        if args.render:
            _write_atomic(outdir / f"sinogram_{octant.value}.pgm", write_pgm(sino.rows))
    return 0


def _cmd_exact(args) -> int:
    img = _load_image(args)
    if args.angles is None:
        angles = [float(a) for a in range(180)]
    else:
        angles = _parse_angles(args.angles)
    sino = exact_radon(img, angles)
    _write_atomic(Path(args.output), write_sinogram_csv(sino))
    return 0


def _cmd_simulate(args) -> int:
    img = _load_image(args)
    sino, trace = sim_run(img)
    outdir = Path(args.output)
    _write_atomic(outdir / "sinogram_deg0to45.csv", write_sinogram_csv(sino))
    _write_atomic(outdir / "trace.csv", write_trace_csv(trace))
    n = img.n
    print(f"theta_k_ready = {n + 1}+k, total_cycles = {2 * n}")
    return 0


def _cmd_trace(args) -> int:
    img = _load_image(args)
    _, trace = sim_run(img)
    _write_atomic(Path(args.output), write_trace_csv(trace))
    return 0


def _cmd_compare(args) -> int:
    img = _load_image(args)
    sinos = full_approx_radon(img)
    reports = []
    for octant in _selected_octants(args):
        sino = sinos[octant]
        exact = exact_radon(img, equivalent_angles(octant, sino.slopes))
        reports.append(compare_octant(img, sino, exact, max_lag=args.max_lag))
    _write_atomic(Path(args.output), write_compare_csv(reports))
    mean = float(np.mean([r.pearson for rep in reports for r in rep.records]))
    print(f"mean_pearson = {mean:.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shearadon",
        description="Approximate discrete Radon transform: shear projections, "
        "an exact reference, and a cycle-accurate pipeline simulation.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, output_help):
        p.add_argument("input", help="input PGM image (P2 or P5, maxval <= 255)")
        p.add_argument("-o", "--output", required=True, help=output_help)
        p.add_argument(
            "--pad",
            action="store_true",
            help="zero-pad a non-square input to a square on the right/bottom",
        )

    p = sub.add_parser("approx", help="four-octant approximate sinogram CSVs")
    common(p, "output directory for the octant CSVs")
    p.add_argument("--octant", choices=sorted(_OCTANTS), help="emit only this octant")
    p.add_argument("--render", action="store_true", help="also write normalized PGM renders")
    p.set_defaults(fn=_cmd_approx)

    p = sub.add_parser("exact", help="exact fractional-weight sinogram CSV")
    common(p, "output CSV path")
    p.add_argument("--angles", help="comma-separated degrees in [0,180); default 0..179")
    p.set_defaults(fn=_cmd_exact)

    p = sub.add_parser("simulate", help="run the pipeline model, emit sinogram + trace")
    common(p, "output directory for sinogram and trace CSVs")
    p.set_defaults(fn=_cmd_simulate)

    p = sub.add_parser("trace", help="emit only the pipeline multiplexer trace CSV")
    common(p, "output CSV path")
    p.set_defaults(fn=_cmd_trace)

    p = sub.add_parser("compare", help="score approximate octants against the exact transform")
    common(p, "output CSV path for the comparison report")
    p.add_argument("--octant", choices=sorted(_OCTANTS), help="compare only this octant")
    p.add_argument("--max-lag", type=int, default=None, help="alignment lag bound (default: image side)")
    p.set_defaults(fn=_cmd_compare)
    return parser


def run_cli(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (ValueError, OSError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))
