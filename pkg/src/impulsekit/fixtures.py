"""Deterministic synthetic test scene.

A stand-in for a circuit-board photograph: a soft horizontal gradient with
fine texture, mid-gray rectangles, thin dark "pins" and small bright "pads".
All randomness comes from the pinned stream in :mod:`impulsekit.noise`, so
the scene is identical on every platform and numpy version.
"""

from __future__ import annotations

import numpy as np

from .image import Image
from .noise import uniform_draws

__all__ = ["synthetic_board", "gradient"]


class _Stream:
    def __init__(self, seed: int, n: int = 4096):
        self._u = uniform_draws(seed, n)
        self._i = 0

    def uniform(self, n: int) -> np.ndarray:
        out = self._u[self._i:self._i + n]
        self._i += n
        return out

    def integers(self, low: int, high: int) -> int:
        """Integer in [low, high)."""
        return low + int(self.uniform(1)[0] * (high - low))


def synthetic_board(width: int = 256, height: int = 256, *, base: float = 142.0,
                    slope: float = 27.0, texture: int = 10, seed: int = 20240) -> Image:
    """Build the reference scene.

    With the defaults the clean image has mean ~156, std ~15.6 and
    SNR ~10, close to the baseline statistics of the photograph the filter
    comparison was originally run on.
    """
    if width < 8 or height < 8:
        raise ValueError("synthetic_board needs at least 8x8 pixels")
    y, x = np.mgrid[0:height, 0:width].astype(np.float64)
    img = base + slope * x / (width - 1) + 2.0 * np.sin(x / 3.0) * np.cos(y / 4.2)

    fine = uniform_draws(seed ^ 0x5EED, width * height).reshape(height, width)
    img += np.floor(fine * (2 * texture + 1)) - texture

    rs = _Stream(seed)
    sx, sy = width / 256.0, height / 256.0
    for _ in range(5):
        rw = max(2, int(rs.integers(10, 25) * sx))
        rh = max(2, int(rs.integers(10, 25) * sy))
        x0, y0 = rs.integers(0, width - rw), rs.integers(0, height - rh)
        img[y0:y0 + rh, x0:x0 + rw] = 125
    for _ in range(10):
        pl = max(2, int(19 * sy))
        x0, y0 = rs.integers(0, width - 1), rs.integers(0, height - pl)
        img[y0:y0 + pl, x0:x0 + 1] = 90
    for _ in range(30):
        x0, y0 = rs.integers(0, width - 6), rs.integers(0, height - 6)
        img[y0:y0 + 6, x0:x0 + 6] = 240
    return Image(np.clip(np.rint(img), 0, 255).astype(np.uint8))


def gradient(width: int = 32, height: int = 32, low: int = 40, high: int = 215) -> Image:
    """Smooth diagonal ramp from ``low`` to ``high``."""
    y, x = np.mgrid[0:height, 0:width].astype(np.float64)
    t = (x + y) / max(1, width + height - 2)
    return Image(np.rint(low + (high - low) * t).astype(np.uint8))
