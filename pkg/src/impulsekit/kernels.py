"""Sliding-window kernels, each in a numba and a pure-numpy flavour.

Every kernel takes a *padded* uint8 array (padded by the window radius, or by
``s_max // 2`` for the adaptive median) plus the output height and width.
The numpy variants accumulate over window offsets in the same row-major
order as the numba loops, so both paths produce bitwise identical output.
"""

from __future__ import annotations

import numpy as np

from . import _accel
from ._accel import njit

MIN, MEDIAN, MAX = 0, 1, 2


# --------------------------------------------------------------------------
# numba


@njit(cache=True, nogil=True)
def _insertion_sort(buf, n):
    for i in range(1, n):
        v = buf[i]
        j = i - 1
        while j >= 0 and buf[j] > v:
            buf[j + 1] = buf[j]
            j -= 1
        buf[j + 1] = v


@njit(cache=True, nogil=True)
def _extremum_nb(padded, h, w, size, take_max):
    # offset-outer / pixel-inner so the inner loop vectorises
    out = np.empty((h, w), dtype=np.uint8)
    out[:, :] = 0 if take_max else 255
    for dy in range(size):
        for dx in range(size):
            for y in range(h):
                row = padded[y + dy]
                for x in range(w):
                    p = row[x + dx]
                    if take_max:
                        if p > out[y, x]:
                            out[y, x] = p
                    elif p < out[y, x]:
                        out[y, x] = p
    return out


@njit(cache=True, nogil=True)
def _median_nb(padded, h, w, size):
    """Running-histogram median: one column in, one column out per step."""
    out = np.empty((h, w), dtype=np.uint8)
    hist = np.zeros(256, dtype=np.int64)
    half = (size * size) // 2
    for y in range(h):
        hist[:] = 0
        for dy in range(size):
            for dx in range(size):
                hist[padded[y + dy, dx]] += 1
        m = 0
        below = 0  # number of window values < m
        while below + hist[m] <= half:
            below += hist[m]
            m += 1
        out[y, 0] = m
        for x in range(1, w):
            for dy in range(size):
                v = padded[y + dy, x - 1]
                hist[v] -= 1
                if v < m:
                    below -= 1
                v = padded[y + dy, x + size - 1]
                hist[v] += 1
                if v < m:
                    below += 1
            while below > half:
                m -= 1
                below -= hist[m]
            while below + hist[m] <= half:
                below += hist[m]
                m += 1
            out[y, x] = m
    return out


def _order_stat_nb(padded, h, w, size, kind):
    if kind == MEDIAN:
        return _median_nb(padded, h, w, size)
    return _extremum_nb(padded, h, w, size, kind == MAX)


@njit(cache=True, nogil=True)
def _box_sum_nb(padded, h, w, size):
    out = np.zeros((h, w), dtype=np.int64)
    for dy in range(size):
        for dx in range(size):
            for y in range(h):
                row = padded[y + dy]
                for x in range(w):
                    out[y, x] += row[x + dx]
    return out


@njit(cache=True, nogil=True)
def _power_ratio_nb(padded, h, w, size, num_table, den_table):
    out = np.empty((h, w), dtype=np.float64)
    for y in range(h):
        for x in range(w):
            num = 0.0
            den = 0.0
            for dy in range(size):
                for dx in range(size):
                    g = padded[y + dy, x + dx]
                    num += num_table[g]
                    den += den_table[g]
            out[y, x] = num / den
    return out


@njit(cache=True, nogil=True)
def _adaptive_median_nb(padded, h, w, start, s_max):
    out = np.empty((h, w), dtype=np.uint8)
    big = s_max // 2
    buf = np.empty(s_max * s_max, dtype=np.uint8)
    for y in range(h):
        for x in range(w):
            cy = y + big
            cx = x + big
            zxy = padded[cy, cx]
            zmed = zxy
            resolved = False
            size = start
            while size <= s_max:
                r = size // 2
                n = size * size
                k = 0
                for yy in range(cy - r, cy + r + 1):
                    for xx in range(cx - r, cx + r + 1):
                        buf[k] = padded[yy, xx]
                        k += 1
                _insertion_sort(buf, n)
                zmin = buf[0]
                zmed = buf[n // 2]
                zmax = buf[n - 1]
                if zmin < zmed and zmed < zmax:
                    if zmin < zxy and zxy < zmax:
                        out[y, x] = zxy
                    else:
                        out[y, x] = zmed
                    resolved = True
                    break
                size += 2
            if not resolved:
                out[y, x] = zmed
    return out


# --------------------------------------------------------------------------
# numpy


def _shifted(padded, h, w, size):
    for dy in range(size):
        for dx in range(size):
            yield padded[dy:dy + h, dx:dx + w]


def _order_stat_np(padded, h, w, size, kind):
    if kind == MIN:
        out = np.full((h, w), 255, dtype=np.uint8)
        for view in _shifted(padded, h, w, size):
            np.minimum(out, view, out=out)
        return out
    if kind == MAX:
        out = np.zeros((h, w), dtype=np.uint8)
        for view in _shifted(padded, h, w, size):
            np.maximum(out, view, out=out)
        return out
    windows = np.lib.stride_tricks.sliding_window_view(padded, (size, size))
    flat = windows.reshape(h, w, size * size)
    mid = (size * size) // 2
    return np.partition(flat, mid, axis=-1)[..., mid].astype(np.uint8)


def _box_sum_np(padded, h, w, size):
    out = np.zeros((h, w), dtype=np.int64)
    for view in _shifted(padded, h, w, size):
        out += view
    return out


def _power_ratio_np(padded, h, w, size, num_table, den_table):
    num = np.zeros((h, w), dtype=np.float64)
    den = np.zeros((h, w), dtype=np.float64)
    for view in _shifted(padded, h, w, size):
        num += num_table[view]
        den += den_table[view]
    return num / den


def _window_stats_np(padded, h, w, size, offset):
    """(min, median, max) of every ``size`` window; ``offset`` trims extra padding."""
    sub = padded[offset:offset + h + size - 1, offset:offset + w + size - 1]
    windows = np.lib.stride_tricks.sliding_window_view(sub, (size, size))
    ordered = np.sort(windows.reshape(h, w, size * size), axis=-1)
    n = size * size
    return ordered[..., 0], ordered[..., n // 2], ordered[..., n - 1]


def _adaptive_median_np(padded, h, w, start, s_max):
    big = s_max // 2
    center = padded[big:big + h, big:big + w]
    out = np.empty((h, w), dtype=np.uint8)
    pending = np.ones((h, w), dtype=bool)
    zmed = center
    for size in range(start, s_max + 1, 2):
        zmin, zmed, zmax = _window_stats_np(padded, h, w, size, big - size // 2)
        stage_b = pending & (zmin < zmed) & (zmed < zmax)
        keep = stage_b & (zmin < center) & (center < zmax)
        out[keep] = center[keep]
        swap = stage_b & ~keep
        out[swap] = zmed[swap]
        pending &= ~stage_b
        if not pending.any():
            return out
    out[pending] = zmed[pending]
    return out


# --------------------------------------------------------------------------
# dispatch


def _pick(numba_fn, numpy_fn):
    return numba_fn if _accel.get_backend() == "numba" else numpy_fn


def order_stat(padded, h, w, size, kind):
    return _pick(_order_stat_nb, _order_stat_np)(padded, h, w, size, kind)


def box_sum(padded, h, w, size):
    return _pick(_box_sum_nb, _box_sum_np)(padded, h, w, size)


def power_ratio(padded, h, w, size, num_table, den_table):
    return _pick(_power_ratio_nb, _power_ratio_np)(padded, h, w, size, num_table, den_table)


def adaptive_median(padded, h, w, start, s_max):
    return _pick(_adaptive_median_nb, _adaptive_median_np)(padded, h, w, start, s_max)
