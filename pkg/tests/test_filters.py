import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from impulsekit.filters import (
    CHM_EPSILON,
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
from impulsekit.fixtures import gradient
from impulsekit.image import BorderPolicy, Image
from impulsekit.noise import NoiseSpec, inject

BORDERS = [BorderPolicy.REPLICATE, BorderPolicy.ZERO_PAD]


def grid(img):
    return img.pixels.tolist()


# ---------------------------------------------------------------- min / max


def test_min_constant(backend):
    assert min_filter(Image.full(7, 5, 77)) == Image.full(7, 5, 77)


def test_min_single_dark_impulse(backend):
    img = Image.from_pixels(3, 3, [9, 9, 9, 9, 0, 9, 9, 9, 9])
    out = min_filter(img, 3, BorderPolicy.REPLICATE)
    assert out.pixels[1, 1] == 0
    assert (out.pixels <= img.pixels).all()


def test_max_constant(backend):
    assert max_filter(Image.full(4, 6, 13)) == Image.full(4, 6, 13)


def test_max_bright_impulse_dilates(backend):
    px = np.full((7, 7), 10)
    px[3, 3] = 255
    out = max_filter(Image(px)).pixels
    assert (out[2:5, 2:5] == 255).all()
    assert (out == 255).sum() == 9


@pytest.mark.parametrize("border", BORDERS)
@pytest.mark.parametrize("window", [3, 5])
def test_order_stats_match_brute_force(backend, rng, border, window):
    zero = border is BorderPolicy.ZERO_PAD
    for _ in range(8):
        img = Image(rng.integers(0, 256, size=(16, 16)))
        rows = oracles.to_rows(img)
        assert grid(min_filter(img, window, border)) == oracles.brute_min(rows, window, zero)
        assert grid(max_filter(img, window, border)) == oracles.brute_max(rows, window, zero)
        assert grid(static_median(img, window, border)) == oracles.brute_median(rows, window, zero)


# ---------------------------------------------------------------- median


def test_median_constant(backend):
    assert static_median(Image.full(5, 5, 200)) == Image.full(5, 5, 200)


def test_median_removes_isolated_impulse(backend):
    px = np.full((6, 6), 120)
    px[2, 3] = 255
    assert static_median(Image(px)) == Image.full(6, 6, 120)


# ---------------------------------------------------------------- contra-harmonic


def test_chm_q0_equals_mean(backend, rng):
    for _ in range(10):
        img = Image(rng.integers(0, 256, size=(12, 15)))
        assert contra_harmonic(img, 3, 0.0) == mean_filter(img, 3)


@pytest.mark.parametrize("q", [-1.5, -1.0, 0.0, 1.0, 2.0])
def test_chm_constant_image(backend, q):
    for c in (0, 1, 128, 255):
        assert contra_harmonic(Image.full(5, 4, c), 3, q) == Image.full(5, 4, c)


def test_chm_salt_window_with_dark_pixel(backend):
    window = [255] * 8 + [0]
    # oracle: sum(g^0) / sum(g^-1) with g floored at eps
    expected = oracles.round_half_up(9.0 / (8 / 255.0 + 1.0 / CHM_EPSILON))
    assert expected == 0
    assert oracles.round_half_up(oracles.chm_value(window, -1.0)) == expected
    out = contra_harmonic(Image.from_pixels(3, 3, window), 3, -1.0)
    assert out.pixels[1, 1] == expected
    assert out.pixels[1, 1] < 255


@pytest.mark.parametrize("q", [-1.0, 1.0, 2.0, -0.5])
def test_chm_matches_scalar_oracle(backend, rng, q):
    for _ in range(4):
        img = Image(rng.integers(0, 256, size=(10, 10)))
        assert grid(contra_harmonic(img, 3, q)) == oracles.brute_chm(oracles.to_rows(img), 3, q)


def test_chm_sign_of_q_targets_impulse_type(backend, rng):
    clean = Image(rng.integers(100, 160, size=(40, 40)))
    salty = inject(clean, NoiseSpec.salt(0.05, seed=2))
    peppery = inject(clean, NoiseSpec.pepper(0.05, seed=2))
    err = lambda a: np.abs(a.pixels.astype(int) - clean.pixels.astype(int)).mean()
    assert err(contra_harmonic(salty, 3, -1.0)) < err(contra_harmonic(salty, 3, 1.0))
    assert err(contra_harmonic(peppery, 3, 1.0)) < err(contra_harmonic(peppery, 3, -1.0))


def test_chm_rejects_bad_q():
    img = Image.full(3, 3, 1)
    for q in (float("nan"), float("inf")):
        with pytest.raises(ValueError):
            contra_harmonic(img, 3, q)
    with pytest.raises(ValueError):
        contra_harmonic(img, 3, 500.0)


def test_mean_filter_rounds_half_up():
    # replicate: left [0,0,1]x3 -> 1/3 -> 0, centre [0,1,2]x3 -> 1, right [1,2,2]x3 -> 5/3 -> 2
    img = Image.from_pixels(3, 1, [0, 1, 2])
    assert mean_filter(img).flat() == [0, 1, 2]
    assert mean_filter(img).flat() == oracles.brute_mean(oracles.to_rows(img))[0]


# ---------------------------------------------------------------- adaptive median


def test_amf_constant(backend):
    assert adaptive_median(Image.full(6, 6, 42), 5) == Image.full(6, 6, 42)


def test_amf_keeps_uncorrupted_interior_pixel(backend):
    img = Image.from_pixels(3, 3, [10, 20, 30, 40, 50, 60, 70, 80, 90])
    assert adaptive_median(img, 3).pixels[1, 1] == 50


def test_amf_replaces_impulse_with_median(backend):
    img = Image.from_pixels(3, 3, [10, 20, 30, 40, 255, 60, 70, 80, 90])
    assert adaptive_median(img, 3).pixels[1, 1] == 60


@pytest.mark.parametrize("border", BORDERS)
@pytest.mark.parametrize("s_max", [3, 5, 7])
def test_amf_matches_straight_line(backend, border, s_max):
    clean = gradient(32, 32)
    noisy = inject(clean, NoiseSpec.salt_and_pepper(0.1, seed=s_max))
    zero = border is BorderPolicy.ZERO_PAD
    expected = oracles.straight_line_amf(oracles.to_rows(noisy), s_max, zero)
    assert grid(adaptive_median(noisy, s_max, border)) == expected


def test_amf_random_images_match_straight_line(backend, rng):
    for _ in range(6):
        img = Image(rng.integers(0, 256, size=(11, 13)))
        assert grid(adaptive_median(img, 5)) == oracles.straight_line_amf(oracles.to_rows(img), 5)


@pytest.mark.parametrize("s_max", [4, 1, 2])
def test_amf_rejects_bad_s_max(s_max):
    with pytest.raises(ValueError):
        adaptive_median(Image.full(3, 3, 0), s_max)


# ---------------------------------------------------------------- validation, purity


@pytest.mark.parametrize("fn", [min_filter, max_filter, static_median, mean_filter])
def test_even_window_rejected(fn):
    with pytest.raises(ValueError):
        fn(Image.full(4, 4, 0), 4)


def test_filters_do_not_mutate_input(backend, rng):
    img = Image(rng.integers(0, 256, size=(9, 9)))
    before = img.pixels.copy()
    for kind in FilterKind:
        a = apply_filter(img, FilterSpec(kind, q=-1.0))
        b = apply_filter(img, FilterSpec(kind, q=-1.0))
        assert a == b
    assert np.array_equal(img.pixels, before)


def test_filter_spec_validation():
    with pytest.raises(ValueError):
        FilterSpec(FilterKind.MIN, window=4)
    with pytest.raises(ValueError):
        FilterSpec(FilterKind.MIN, window=1)
    with pytest.raises(ValueError):
        FilterSpec(FilterKind.ADAPTIVE_MEDIAN, window=5, s_max=3)
    with pytest.raises(ValueError):
        FilterSpec(FilterKind.CONTRA_HARMONIC, q=float("inf"))
    with pytest.raises(ValueError):
        FilterSpec("gaussian")


def test_filter_spec_config_round_trip():
    spec = FilterSpec(FilterKind.ADAPTIVE_MEDIAN, window=3, s_max=7, border=BorderPolicy.ZERO_PAD)
    cfg = spec.to_config()
    assert list(cfg) == ["kind", "window", "q", "s_max", "border"]
    assert FilterSpec.from_config(cfg) == spec


# ---------------------------------------------------------------- properties


small_images = st.integers(1, 9).flatmap(
    lambda w: st.integers(1, 9).flatmap(
        lambda h: st.lists(st.integers(0, 255), min_size=w * h, max_size=w * h).map(
            lambda px: Image.from_pixels(w, h, px)
        )
    )
)


@given(small_images)
@settings(max_examples=80, deadline=None)
def test_order_statistic_closure(img):
    rows = oracles.to_rows(img)
    for fn in (min_filter, max_filter, static_median):
        out = fn(img, 3)
        for y in range(img.height):
            for x in range(img.width):
                assert out.pixels[y, x] in oracles.neighbourhood(rows, x, y, 3)


@given(small_images)
@settings(max_examples=80, deadline=None)
def test_min_below_max(img):
    lo, hi = min_filter(img).pixels, max_filter(img).pixels
    assert (lo <= img.pixels).all() and (img.pixels <= hi).all()


@given(small_images, st.integers(0, 60), st.randoms(use_true_random=False))
@settings(max_examples=80, deadline=None)
def test_monotonicity(img, bump, rnd):
    bumps = np.array([rnd.randint(0, bump) for _ in range(img.pixels.size)]).reshape(img.shape)
    brighter = Image(np.minimum(img.pixels.astype(int) + bumps, 255))
    for fn in (min_filter, max_filter, static_median):
        assert (fn(img).pixels <= fn(brighter).pixels).all()


@pytest.mark.parametrize("fn", [min_filter, adaptive_median])
def test_zero_pad_darkens_border(backend, rng, fn):
    img = Image(rng.integers(200, 256, size=(20, 20)))
    zero = fn(img, border=BorderPolicy.ZERO_PAD).pixels
    rep = fn(img, border=BorderPolicy.REPLICATE).pixels
    assert zero[0].mean() < rep[0].mean()
    assert zero[1:-1, 1:-1].mean() <= rep[1:-1, 1:-1].mean()
