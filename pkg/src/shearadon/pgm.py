"""PGM (netpbm grayscale) codec: P2 and P5 in, P5 out, maxval up to 255."""

import numpy as np

from .image import Image

_WHITESPACE = b" \t\r\n\x0b\x0c"


class PgmParseError(ValueError):
    """Malformed or unsupported PGM input."""


def _scan_token(data: bytes, pos: int) -> tuple[bytes, int]:
    n = len(data)
    while pos < n:
        ch = data[pos]
        if ch in _WHITESPACE:
            pos += 1
        elif ch == ord("#"):
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
        else:
            break
    if pos >= n:
        raise PgmParseError("truncated header")
    start = pos
    while pos < n and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
        pos += 1
    return data[start:pos], pos


def _scan_int(data: bytes, pos: int, name: str) -> tuple[int, int]:
    token, pos = _scan_token(data, pos)
    try:
        return int(token), pos
    except ValueError:
        raise PgmParseError(f"header field {name} is not an integer: {token!r}") from None


def read_pgm(data: bytes, pad_to_square: bool = False) -> Image:
    """Decode P2 (ASCII) or P5 (binary) PGM bytes into an Image.

    Non-square input is rejected unless pad_to_square is set, in which
    case the raster is zero-padded on the right and bottom to
    max(width, height).
    """
    data = bytes(data)
    magic = data[:2]
    if magic not in (b"P2", b"P5"):
        raise PgmParseError(f"not a P2/P5 PGM (magic {magic!r})")
    pos = 2
    width, pos = _scan_int(data, pos, "width")
    height, pos = _scan_int(data, pos, "height")
    maxval, pos = _scan_int(data, pos, "maxval")
    if width <= 1 or height <= 1:
        raise PgmParseError(f"dimensions must be >= 2, got {width}x{height}")
    if maxval > 255:
        raise PgmParseError(f"unsupported maxval {maxval} (must be <= 255)")
    if maxval < 1:
        raise PgmParseError(f"invalid maxval {maxval}")

    count = width * height
    if magic == b"P5":
        if pos >= len(data) or data[pos] not in _WHITESPACE:
            raise PgmParseError("missing whitespace before binary payload")
        pos += 1
        payload = data[pos : pos + count]
        if len(payload) < count:
            raise PgmParseError(
                f"truncated payload: expected {count} bytes, got {len(payload)}"
            )
        samples = np.frombuffer(payload, dtype=np.uint8).astype(np.int64)
    else:
        values = []
        while len(values) < count:
            try:
                token, pos = _scan_token(data, pos)
            except PgmParseError:
                raise PgmParseError(
                    f"truncated payload: expected {count} samples, got {len(values)}"
                ) from None
            try:
                values.append(int(token))
            except ValueError:
                raise PgmParseError(f"bad sample value {token!r}") from None
        samples = np.array(values, dtype=np.int64)
    if samples.min() < 0 or samples.max() > maxval:
        raise PgmParseError(f"sample out of range [0, {maxval}]")

    grid = samples.reshape(height, width)
    if width != height:
        if not pad_to_square:
            raise PgmParseError(
                f"image is {width}x{height}, not square (pad-to-square not requested)"
            )
        side = max(width, height)
        padded = np.zeros((side, side), dtype=np.int64)
        padded[:height, :width] = grid
        grid = padded
    return Image(grid)


def write_pgm(obj) -> bytes:
    """Encode an Image, or render any 2-D numeric grid, as binary P5 bytes.

    Grids are min-max normalized onto [0, 255]; an all-constant grid
    renders as all zeros.
    """
    if isinstance(obj, Image):
        raster = obj.pixels
    else:
        grid = np.asarray(obj, dtype=np.float64)
        if grid.ndim != 2:
            raise ValueError("grid must be 2-D")
        lo = float(grid.min())
        hi = float(grid.max())
        if hi == lo:
            raster = np.zeros(grid.shape, dtype=np.uint8)
        else:
            raster = np.rint((grid - lo) * (255.0 / (hi - lo))).astype(np.uint8)
    h, w = raster.shape
    return b"P5\n%d %d\n255\n" % (w, h) + raster.tobytes()
