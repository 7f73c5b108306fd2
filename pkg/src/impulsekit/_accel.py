"""Backend selection for the sliding-window kernels.

numba is used when importable unless ``IMPULSEKIT_DISABLE_NUMBA`` is set to a
truthy value, in which case every kernel runs on its pure-numpy path.
``set_backend``/``use_backend`` switch at runtime (tests and the benchmark use
this to run both paths in one process).
"""

from __future__ import annotations

import contextlib
import os

ENV_FLAG = "IMPULSEKIT_DISABLE_NUMBA"

_disabled = os.environ.get(ENV_FLAG, "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _disabled:
        raise ImportError(f"numba disabled by {ENV_FLAG}")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda fn: fn


BACKENDS = ("numba", "numpy") if HAVE_NUMBA else ("numpy",)
_active = BACKENDS[0]


def get_backend() -> str:
    return _active


def set_backend(name: str) -> None:
    global _active
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name not in BACKENDS:
        raise RuntimeError("numba backend requested but numba is unavailable or disabled")
    _active = name


@contextlib.contextmanager
def use_backend(name: str):
    previous = _active
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)
