"""Backend selection for the hot loops.

The numba backend is used when numba imports; set ``TOCODES_NUMBA=0`` to force
the pure-numpy fallback.  Both backends stay importable for benchmarks and
tests via :func:`get_backend`.
"""

import os
from types import ModuleType

from . import numpy_impl

try:
    from . import numba_impl
except ImportError:  # pragma: no cover - numba is an optional extra
    numba_impl = None

_want_numba = os.environ.get("TOCODES_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")

BACKEND = "numba" if (_want_numba and numba_impl is not None) else "numpy"


def get_backend(name: str | None = None) -> ModuleType:
    name = name or BACKEND
    if name == "numba":
        if numba_impl is None:
            raise RuntimeError("numba backend requested but numba is not installed")
        return numba_impl
    if name == "numpy":
        return numpy_impl
    raise ValueError(f"unknown backend {name!r}")


def available_backends() -> list[str]:
    return ["numpy"] + (["numba"] if numba_impl is not None else [])


kernels = get_backend()
