"""Grayscale image container, PGM codec and neighbourhood access."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = [
    "Image",
    "BorderPolicy",
    "PGMError",
    "BadMagic",
    "BadHeader",
    "BadDimension",
    "MaxvalUnsupported",
    "TruncatedData",
    "PixelOutOfRange",
    "load_pgm",
    "save_pgm",
    "read_pgm",
    "write_pgm",
    "window_at",
    "pad",
]


class BorderPolicy(enum.Enum):
    """How window positions outside the image are filled."""

    ZERO_PAD = "zero"
    REPLICATE = "replicate"

    @classmethod
    def parse(cls, value: "BorderPolicy | str") -> "BorderPolicy":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("-", "").replace("_", "")
        aliases = {"zero": cls.ZERO_PAD, "zeropad": cls.ZERO_PAD,
                   "replicate": cls.REPLICATE, "edge": cls.REPLICATE}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown border policy {value!r}") from None


@dataclass(frozen=True, eq=False)
class Image:
    """Immutable 8-bit grayscale raster.

    ``pixels`` is a read-only ``(height, width)`` uint8 array in row-major
    order. Construction copies the input, so callers cannot mutate an
    Image through an alias.
    """

    pixels: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.pixels)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-D array, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"image dimensions must be positive, got {arr.shape}")
        if arr.dtype != np.uint8:
            if arr.dtype.kind not in "iub":
                raise TypeError(f"pixel dtype must be integral, got {arr.dtype}")
            if arr.size and (arr.min() < 0 or arr.max() > 255):
                raise ValueError("pixel intensities must lie in [0, 255]")
        arr = np.array(arr, dtype=np.uint8, order="C", copy=True)
        arr.flags.writeable = False
        object.__setattr__(self, "pixels", arr)

    @classmethod
    def from_pixels(cls, width: int, height: int, pixels: Sequence[int]) -> "Image":
        if width < 1 or height < 1:
            raise ValueError(f"image dimensions must be positive, got {width}x{height}")
        flat = np.asarray(pixels)
        if flat.size != width * height:
            raise ValueError(
                f"expected {width * height} pixels for {width}x{height}, got {flat.size}"
            )
        return cls(flat.reshape(height, width))

    @classmethod
    def full(cls, width: int, height: int, value: int) -> "Image":
        return cls(np.full((height, width), value, dtype=np.int64))

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def shape(self) -> tuple[int, int]:
        return self.pixels.shape

    def flat(self) -> list[int]:
        return self.pixels.ravel().tolist()

    def __eq__(self, other):
        if not isinstance(other, Image):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.pixels, other.pixels)

    def __hash__(self):
        return hash((self.shape, self.pixels.tobytes()))

    def __repr__(self):
        return f"Image(width={self.width}, height={self.height})"


# --------------------------------------------------------------------------
# PGM


class PGMError(ValueError):
    """Malformed PGM data; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class BadMagic(PGMError):
    pass


class BadHeader(PGMError):
    pass


class BadDimension(PGMError):
    pass


class MaxvalUnsupported(PGMError):
    pass


class TruncatedData(PGMError):
    pass


class PixelOutOfRange(PGMError):
    pass


_WHITESPACE = b" \t\n\r\v\f"


def _next_token(data: bytes, pos: int) -> tuple[bytes, int, int]:
    """Return (token, token_start, position after token), skipping comments."""
    n = len(data)
    while pos < n:
        c = data[pos:pos + 1]
        if c in _WHITESPACE:
            pos += 1
        elif c == b"#":
            while pos < n and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
        else:
            break
    start = pos
    while pos < n and data[pos:pos + 1] not in _WHITESPACE and data[pos:pos + 1] != b"#":
        pos += 1
    return data[start:pos], start, pos


def _header_int(data: bytes, pos: int, what: str) -> tuple[int, int, int]:
    tok, start, pos = _next_token(data, pos)
    if not tok:
        raise TruncatedData(f"header ended before {what}", start)
    try:
        value = int(tok.decode("ascii"))
    except (UnicodeDecodeError, ValueError):
        raise BadHeader(f"{what} is not an integer: {tok[:16]!r}", start) from None
    return value, start, pos


def load_pgm(data: bytes) -> Image:
    """Parse a binary (P5) or ASCII (P2) PGM with maxval 255."""
    data = bytes(data)
    magic = data[:2]
    if magic not in (b"P5", b"P2"):
        raise BadMagic(f"expected magic P5 or P2, got {magic!r}", 0)
    pos = 2
    if pos < len(data) and data[pos:pos + 1] not in _WHITESPACE and data[pos:pos + 1] != b"#":
        raise BadMagic("magic must be followed by whitespace", pos)

    width, wstart, pos = _header_int(data, pos, "width")
    height, hstart, pos = _header_int(data, pos, "height")
    if width <= 0:
        raise BadDimension(f"width must be positive, got {width}", wstart)
    if height <= 0:
        raise BadDimension(f"height must be positive, got {height}", hstart)
    maxval, mstart, pos = _header_int(data, pos, "maxval")
    if maxval != 255:
        raise MaxvalUnsupported(f"only maxval 255 is supported, got {maxval}", mstart)

    count = width * height
    if magic == b"P5":
        # exactly one whitespace byte separates maxval from the raster
        if pos >= len(data):
            raise TruncatedData(f"expected {count} pixel bytes, got 0", pos)
        pos += 1
        raster = data[pos:pos + count]
        if len(raster) < count:
            raise TruncatedData(
                f"expected {count} pixel bytes, got {len(raster)}", pos + len(raster)
            )
        arr = np.frombuffer(raster, dtype=np.uint8)
    else:
        values = []
        for _ in range(count):
            tok, start, pos = _next_token(data, pos)
            if not tok:
                raise TruncatedData(
                    f"expected {count} pixel values, got {len(values)}", start
                )
            try:
                v = int(tok.decode("ascii"))
            except (UnicodeDecodeError, ValueError):
                raise BadHeader(f"pixel value is not an integer: {tok[:16]!r}", start) from None
            if not 0 <= v <= 255:
                raise PixelOutOfRange(f"pixel value {v} exceeds maxval 255", start)
            values.append(v)
        arr = np.array(values, dtype=np.uint8)
    return Image(arr.reshape(height, width))


def save_pgm(img: Image, fmt: str = "P5") -> bytes:
    """Serialise ``img`` as P5 (binary) or P2 (ASCII) PGM."""
    fmt = fmt.upper()
    header = f"{fmt}\n{img.width} {img.height}\n255\n".encode("ascii")
    if fmt == "P5":
        return header + img.pixels.tobytes()
    if fmt == "P2":
        lines = [" ".join(map(str, row)) for row in img.pixels.tolist()]
        return header + ("\n".join(lines) + "\n").encode("ascii")
    raise ValueError(f"unknown PGM format {fmt!r}; expected P5 or P2")


def read_pgm(path) -> Image:
    with open(path, "rb") as fh:
        return load_pgm(fh.read())


def write_pgm(path, img: Image, fmt: str = "P5") -> None:
    with open(path, "wb") as fh:
        fh.write(save_pgm(img, fmt))


# --------------------------------------------------------------------------
# neighbourhoods


def _check_size(size: int, name: str = "size") -> int:
    if int(size) != size or size < 1 or size % 2 == 0:
        raise ValueError(f"{name} must be an odd positive integer, got {size}")
    return int(size)


def pad(img: Image, radius: int, border: BorderPolicy | str = BorderPolicy.REPLICATE) -> np.ndarray:
    """Return a writable uint8 copy of ``img`` grown by ``radius`` on every side."""
    border = BorderPolicy.parse(border)
    mode = "constant" if border is BorderPolicy.ZERO_PAD else "edge"
    return np.pad(img.pixels, radius, mode=mode)


def window_at(img: Image, x: int, y: int, size: int,
              policy: BorderPolicy | str = BorderPolicy.REPLICATE) -> tuple[int, ...]:
    """The ``size`` x ``size`` neighbourhood of column ``x``, row ``y``, row-major."""
    size = _check_size(size)
    policy = BorderPolicy.parse(policy)
    if not (0 <= x < img.width and 0 <= y < img.height):
        raise IndexError(f"center ({x}, {y}) outside {img.width}x{img.height} image")
    r = size // 2
    out = []
    for yy in range(y - r, y + r + 1):
        for xx in range(x - r, x + r + 1):
            inside = 0 <= xx < img.width and 0 <= yy < img.height
            if inside:
                out.append(int(img.pixels[yy, xx]))
            elif policy is BorderPolicy.ZERO_PAD:
                out.append(0)
            else:
                cy = min(max(yy, 0), img.height - 1)
                cx = min(max(xx, 0), img.width - 1)
                out.append(int(img.pixels[cy, cx]))
    return tuple(out)
