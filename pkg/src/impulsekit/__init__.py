"""Impulse-noise injection, order-statistic filters and SNR scoring for grayscale images."""

__version__ = "0.1.0"

from ._accel import get_backend, set_backend, use_backend
from .filters import (
    FilterKind,
    FilterSpec,
    adaptive_median,
    apply_filter,
    contra_harmonic,
    max_filter,
    mean_filter,
    min_filter,
    static_median,
)
from .image import BorderPolicy, Image, load_pgm, read_pgm, save_pgm, window_at, write_pgm
from .metrics import DiffMode, ImageStats, compute_stats, diff_image
from .noise import NoiseSpec, impulse_pdf, inject

__all__ = [
    "__version__",
    "BorderPolicy",
    "DiffMode",
    "FilterKind",
    "FilterSpec",
    "Image",
    "ImageStats",
    "NoiseSpec",
    "adaptive_median",
    "apply_filter",
    "compute_stats",
    "contra_harmonic",
    "diff_image",
    "get_backend",
    "impulse_pdf",
    "inject",
    "load_pgm",
    "max_filter",
    "mean_filter",
    "min_filter",
    "read_pgm",
    "save_pgm",
    "set_backend",
    "static_median",
    "use_backend",
    "window_at",
    "write_pgm",
]
