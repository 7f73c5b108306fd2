"""Bipolar impulse (salt-and-pepper) noise.

Sampling contract, relied on for reproducible experiments:

* generator: ``numpy.random.PCG64(seed)`` (seeded through ``SeedSequence``),
  consumed with ``random_raw`` so no ``Generator`` method semantics are
  involved;
* one 64-bit word per pixel, pixels visited row-major;
* ``u = (word >> 11) * 2**-53`` which lies in ``[0, 1)``;
* ``u < p_a`` gives the dark level ``a``, ``p_a <= u < p_a + p_b`` gives the
  light level ``b``, anything else keeps the original pixel.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .image import Image

__all__ = ["NoiseSpec", "PRNG_ID", "impulse_pdf", "inject", "impulse_mask", "uniform_draws"]

PRNG_ID = "numpy.PCG64/SeedSequence raw64 u=(w>>11)*2^-53"

_U64_MAX = 2**64 - 1


@dataclass(frozen=True)
class NoiseSpec:
    """Parameters of the impulse PDF plus the RNG seed.

    ``p_a`` is the probability of the dark level ``a`` (pepper) and ``p_b``
    that of the light level ``b`` (salt).
    """

    p_a: float = 0.0
    p_b: float = 0.0
    a: int = 0
    b: int = 255
    seed: int = 0

    def __post_init__(self):
        for name in ("p_a", "p_b"):
            p = getattr(self, name)
            if not (isinstance(p, (int, float)) and math.isfinite(p) and 0.0 <= p <= 1.0):
                raise ValueError(f"{name} must be a probability in [0, 1], got {p!r}")
        if self.p_a + self.p_b > 1.0:
            raise ValueError(f"p_a + p_b must not exceed 1, got {self.p_a + self.p_b}")
        for name in ("a", "b"):
            v = getattr(self, name)
            if int(v) != v or not 0 <= v <= 255:
                raise ValueError(f"{name} must be an intensity in [0, 255], got {v!r}")
        if not self.a < self.b:
            raise ValueError(f"dark level a must be below light level b, got a={self.a}, b={self.b}")
        if int(self.seed) != self.seed or not 0 <= self.seed <= _U64_MAX:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")

    @classmethod
    def salt(cls, p: float = 0.1, seed: int = 0) -> "NoiseSpec":
        return cls(p_a=0.0, p_b=p, seed=seed)

    @classmethod
    def pepper(cls, p: float = 0.1, seed: int = 0) -> "NoiseSpec":
        return cls(p_a=p, p_b=0.0, seed=seed)

    @classmethod
    def salt_and_pepper(cls, p: float = 0.1, seed: int = 0) -> "NoiseSpec":
        return cls(p_a=p, p_b=p, seed=seed)

    @property
    def unipolar(self) -> bool:
        return self.p_a == 0.0 or self.p_b == 0.0

    def to_config(self) -> dict:
        return asdict(self)

    @classmethod
    def from_config(cls, config: dict) -> "NoiseSpec":
        return cls(
            p_a=float(config["p_a"]),
            p_b=float(config["p_b"]),
            a=int(config.get("a", 0)),
            b=int(config.get("b", 255)),
            seed=int(config.get("seed", 0)),
        )


def impulse_pdf(z: int, spec: NoiseSpec) -> float:
    """Probability mass the impulse model assigns to intensity ``z``."""
    if not 0 <= z <= 255:
        raise ValueError(f"intensity must lie in [0, 255], got {z}")
    if z == spec.a:
        return spec.p_a
    if z == spec.b:
        return spec.p_b
    return 0.0


def uniform_draws(seed: int, n: int) -> np.ndarray:
    """The first ``n`` uniform variates of the pinned stream for ``seed``."""
    words = np.random.PCG64(seed).random_raw(n)
    return (words >> np.uint64(11)).astype(np.float64) * (1.0 / 9007199254740992.0)


def impulse_mask(shape: tuple[int, int], spec: NoiseSpec) -> np.ndarray:
    """Per-pixel outcome codes: 0 untouched, 1 dark impulse, 2 light impulse."""
    h, w = shape
    u = uniform_draws(spec.seed, h * w).reshape(h, w)
    mask = np.zeros((h, w), dtype=np.uint8)
    mask[u < spec.p_a] = 1
    mask[(u >= spec.p_a) & (u < spec.p_a + spec.p_b)] = 2
    return mask


def inject(img: Image, spec: NoiseSpec) -> Image:
    """Corrupt ``img`` with impulse noise drawn deterministically from ``spec.seed``."""
    mask = impulse_mask(img.shape, spec)
    out = img.pixels.copy()
    out[mask == 1] = spec.a
    out[mask == 2] = spec.b
    return Image(out)
