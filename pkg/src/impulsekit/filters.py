"""Noise-reduction filters over :class:`~impulsekit.image.Image`.

All filters are pure: they read an immutable image and return a new one.
Floating-point outputs are rounded half-up and clamped to ``[0, 255]``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .image import BorderPolicy, Image, pad

__all__ = [
    "CHM_EPSILON",
    "FilterKind",
    "FilterSpec",
    "min_filter",
    "max_filter",
    "mean_filter",
    "contra_harmonic",
    "static_median",
    "adaptive_median",
    "apply_filter",
]

# Zero intensities are raised to this floor before powering, which keeps
# negative orders finite while a dark pixel still dominates the denominator.
CHM_EPSILON = 1e-6 * 255


class FilterKind(enum.Enum):
    MIN = "min"
    MAX = "max"
    CONTRA_HARMONIC = "chm"
    STATIC_MEDIAN = "median"
    ADAPTIVE_MEDIAN = "amf"
    MEAN = "mean"

    @classmethod
    def parse(cls, value: "FilterKind | str") -> "FilterKind":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        aliases = {
            "contraharmonic": cls.CONTRA_HARMONIC,
            "contra_harmonic": cls.CONTRA_HARMONIC,
            "smf": cls.STATIC_MEDIAN,
            "static_median": cls.STATIC_MEDIAN,
            "adaptive_median": cls.ADAPTIVE_MEDIAN,
        }
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown filter kind {value!r}") from None


def _check_window(window, name="window", minimum=1):
    if isinstance(window, bool) or int(window) != window or window < minimum or window % 2 == 0:
        raise ValueError(f"{name} must be an odd integer >= {minimum}, got {window!r}")
    return int(window)


def _check_q(q):
    if isinstance(q, bool) or not isinstance(q, (int, float, np.floating, np.integer)) or not math.isfinite(q):
        raise ValueError(f"q must be a finite real, got {q!r}")
    return float(q)


@dataclass(frozen=True)
class FilterSpec:
    """One filter configuration.

    ``window`` is the fixed window for min/max/mean/median/CHM and the
    starting window for the adaptive median; ``q`` only matters for the
    contra-harmonic mean and ``s_max`` only for the adaptive median.
    """

    kind: FilterKind
    window: int = 3
    q: float = 0.0
    s_max: int = 5
    border: BorderPolicy = field(default=BorderPolicy.REPLICATE)

    def __post_init__(self):
        object.__setattr__(self, "kind", FilterKind.parse(self.kind))
        object.__setattr__(self, "border", BorderPolicy.parse(self.border))
        object.__setattr__(self, "window", _check_window(self.window, minimum=3))
        object.__setattr__(self, "q", _check_q(self.q))
        if self.kind is FilterKind.ADAPTIVE_MEDIAN:
            s_max = _check_window(self.s_max, "s_max", minimum=3)
            if s_max < self.window:
                raise ValueError(f"s_max ({s_max}) must be >= window ({self.window})")
            object.__setattr__(self, "s_max", s_max)

    def apply(self, img: Image) -> Image:
        return apply_filter(img, self)

    def to_config(self) -> dict:
        return {
            "kind": self.kind.value,
            "window": self.window,
            "q": self.q,
            "s_max": self.s_max,
            "border": self.border.value,
        }

    @classmethod
    def from_config(cls, config: dict) -> "FilterSpec":
        return cls(
            kind=config["kind"],
            window=int(config.get("window", 3)),
            q=float(config.get("q", 0.0)),
            s_max=int(config.get("s_max", 5)),
            border=config.get("border", BorderPolicy.REPLICATE.value),
        )


def _order_stat(img, window, border, kind):
    window = _check_window(window)
    padded = pad(img, window // 2, border)
    return Image(kernels.order_stat(padded, img.height, img.width, window, kind))


def min_filter(img: Image, window: int = 3, border=BorderPolicy.REPLICATE) -> Image:
    return _order_stat(img, window, border, kernels.MIN)


def max_filter(img: Image, window: int = 3, border=BorderPolicy.REPLICATE) -> Image:
    return _order_stat(img, window, border, kernels.MAX)


def static_median(img: Image, window: int = 3, border=BorderPolicy.REPLICATE) -> Image:
    return _order_stat(img, window, border, kernels.MEDIAN)


def mean_filter(img: Image, window: int = 3, border=BorderPolicy.REPLICATE) -> Image:
    """Arithmetic mean of each window, rounded half-up in exact integer arithmetic."""
    window = _check_window(window)
    padded = pad(img, window // 2, border)
    sums = kernels.box_sum(padded, img.height, img.width, window)
    n = window * window
    return Image((2 * sums + n) // (2 * n))


def _power_tables(q: float) -> tuple[np.ndarray, np.ndarray]:
    # intensities are normalised to (0, 1] so moderate |q| stays in range
    base = np.maximum(np.arange(256, dtype=np.float64), CHM_EPSILON) / 255.0
    with np.errstate(over="ignore", under="ignore"):
        num = base ** (q + 1.0)
        den = base ** q
    ok = np.isfinite(num).all() and np.isfinite(den).all() and (den > 0).all()
    if not ok:
        raise ValueError(f"|q| = {abs(q)} is too large to evaluate in double precision")
    return num, den


def contra_harmonic(img: Image, window: int = 3, q: float = 0.0,
                    border=BorderPolicy.REPLICATE) -> Image:
    """Contra-harmonic mean ``sum(g**(q+1)) / sum(g**q)`` over each window.

    Positive ``q`` suppresses dark (pepper) impulses, negative ``q`` bright
    (salt) ones; ``q == 0`` reduces to the arithmetic mean. Intensities are
    floored at :data:`CHM_EPSILON` before powering.
    """
    window = _check_window(window)
    q = _check_q(q)
    num, den = _power_tables(q)
    padded = pad(img, window // 2, border)
    ratio = kernels.power_ratio(padded, img.height, img.width, window, num, den)
    out = np.floor(ratio * 255.0 + 0.5)
    return Image(np.clip(out, 0, 255).astype(np.uint8))


def adaptive_median(img: Image, s_max: int = 5, border=BorderPolicy.REPLICATE,
                    window: int = 3) -> Image:
    """Two-stage adaptive median filter.

    Each pixel starts with a ``window`` x ``window`` neighbourhood. If the
    window median is strictly between the window extremes, the pixel is kept
    when it is itself strictly between them and replaced by the median
    otherwise. If not, the window grows by 2, and once it would exceed
    ``s_max`` the median of the largest window is emitted.
    """
    window = _check_window(window, minimum=3)
    s_max = _check_window(s_max, "s_max", minimum=3)
    if s_max < window:
        raise ValueError(f"s_max ({s_max}) must be >= window ({window})")
    padded = pad(img, s_max // 2, border)
    return Image(kernels.adaptive_median(padded, img.height, img.width, window, s_max))


def apply_filter(img: Image, spec: FilterSpec) -> Image:
    kind = spec.kind
    if kind is FilterKind.MIN:
        return min_filter(img, spec.window, spec.border)
    if kind is FilterKind.MAX:
        return max_filter(img, spec.window, spec.border)
    if kind is FilterKind.STATIC_MEDIAN:
        return static_median(img, spec.window, spec.border)
    if kind is FilterKind.MEAN:
        return mean_filter(img, spec.window, spec.border)
    if kind is FilterKind.CONTRA_HARMONIC:
        return contra_harmonic(img, spec.window, spec.q, spec.border)
    return adaptive_median(img, spec.s_max, spec.border, spec.window)
