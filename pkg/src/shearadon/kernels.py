"""Backend selection for the hot kernels.

Importing this module picks the compiled extension when it was built and
the numpy implementation otherwise. Both expose the same functions;
``active`` is whichever one won.
"""

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

active = _compiled if _compiled is not None else _kernels_py


def backend_name() -> str:
    """Name of the kernel backend in use: 'compiled' or 'python'."""
    return active.BACKEND_NAME


def available_backends() -> dict:
    """All importable kernel modules keyed by backend name."""
    out = {"python": _kernels_py}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out
