"""Slow, obviously-correct reference implementations used as test oracles.

Deliberately share no code with the package kernels: plain lists, explicit
coordinate clamping, ``sorted`` and scalar float arithmetic.
"""

import math

EPS = 1e-6 * 255


def to_rows(img):
    return [list(map(int, row)) for row in img.pixels.tolist()]


def neighbourhood(rows, x, y, size, zero_pad=False):
    h, w = len(rows), len(rows[0])
    r = size // 2
    vals = []
    for yy in range(y - r, y + r + 1):
        for xx in range(x - r, x + r + 1):
            if 0 <= yy < h and 0 <= xx < w:
                vals.append(rows[yy][xx])
            elif zero_pad:
                vals.append(0)
            else:
                vals.append(rows[min(max(yy, 0), h - 1)][min(max(xx, 0), w - 1)])
    return vals


def _map(rows, size, fn, zero_pad=False):
    h, w = len(rows), len(rows[0])
    return [[fn(neighbourhood(rows, x, y, size, zero_pad)) for x in range(w)] for y in range(h)]


def brute_min(rows, size=3, zero_pad=False):
    return _map(rows, size, min, zero_pad)


def brute_max(rows, size=3, zero_pad=False):
    return _map(rows, size, max, zero_pad)


def brute_median(rows, size=3, zero_pad=False):
    return _map(rows, size, lambda v: sorted(v)[len(v) // 2], zero_pad)


def round_half_up(v):
    return min(255, max(0, math.floor(v + 0.5)))


def brute_mean(rows, size=3, zero_pad=False):
    return _map(rows, size, lambda v: round_half_up(sum(v) / len(v)), zero_pad)


def chm_value(window, q):
    g = [max(float(v), EPS) for v in window]
    return sum(x ** (q + 1) for x in g) / sum(x ** q for x in g)


def brute_chm(rows, size=3, q=0.0, zero_pad=False):
    return _map(rows, size, lambda v: round_half_up(chm_value(v, q)), zero_pad)


def straight_line_amf(rows, s_max=5, zero_pad=False):
    """Two-stage adaptive median, written out per pixel with no vectorisation."""
    h, w = len(rows), len(rows[0])
    out = [[0] * w for _ in range(h)]
    for y in range(h):
        for x in range(w):
            zxy = rows[y][x]
            size = 3
            while True:
                win = sorted(neighbourhood(rows, x, y, size, zero_pad))
                zmin, zmed, zmax = win[0], win[len(win) // 2], win[-1]
                a1 = zmed - zmin
                a2 = zmed - zmax
                if a1 > 0 and a2 < 0:
                    b1 = zxy - zmin
                    b2 = zxy - zmax
                    out[y][x] = zxy if (b1 > 0 and b2 < 0) else zmed
                    break
                size += 2
                if size > s_max:
                    out[y][x] = zmed
                    break
    return out
