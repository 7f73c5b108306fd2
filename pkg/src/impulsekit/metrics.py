"""Image statistics (mean / std / SNR) and difference images."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .image import Image

__all__ = ["ImageStats", "DiffMode", "compute_stats", "diff_image"]


@dataclass(frozen=True)
class ImageStats:
    """Mean, population standard deviation and SNR = mean / std.

    ``snr`` is ``None`` for a constant image (std == 0); callers render that
    as ``n/a`` instead of an infinity.
    """

    mean: float
    std_dev: float
    snr: Optional[float]

    @property
    def degenerate(self) -> bool:
        return self.snr is None

    def formatted(self) -> tuple[str, str, str]:
        snr = "n/a" if self.snr is None else f"{self.snr:.1f}"
        return f"{self.mean:.1f}", f"{self.std_dev:.1f}", snr

    def to_dict(self) -> dict:
        return {"mean": self.mean, "std_dev": self.std_dev, "snr": self.snr}


def compute_stats(img: Image) -> ImageStats:
    px = img.pixels.astype(np.float64)
    mean = float(px.mean())
    std = float(np.sqrt(((px - mean) ** 2).mean()))
    if std == 0.0:
        return ImageStats(mean, 0.0, None)
    return ImageStats(mean, std, mean / std)


class DiffMode(enum.Enum):
    SATURATING_SUBTRACT = "saturating"
    ABSOLUTE_DIFFERENCE = "absolute"

    @classmethod
    def parse(cls, value: "DiffMode | str") -> "DiffMode":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower()
        aliases = {"sub": cls.SATURATING_SUBTRACT, "subtract": cls.SATURATING_SUBTRACT,
                   "abs": cls.ABSOLUTE_DIFFERENCE}
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown diff mode {value!r}") from None


def diff_image(x: Image, y: Image, mode: DiffMode | str = DiffMode.SATURATING_SUBTRACT) -> Image:
    """Pixelwise ``max(x - y, 0)`` or ``|x - y|``."""
    mode = DiffMode.parse(mode)
    if x.shape != y.shape:
        raise ValueError(f"dimension mismatch: {x.width}x{x.height} vs {y.width}x{y.height}")
    d = x.pixels.astype(np.int16) - y.pixels.astype(np.int16)
    if mode is DiffMode.SATURATING_SUBTRACT:
        d = np.maximum(d, 0)
    else:
        d = np.abs(d)
    return Image(d.astype(np.uint8))
