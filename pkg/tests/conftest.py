import numpy as np
import pytest

from impulsekit import _accel
from impulsekit.image import Image


@pytest.fixture(params=_accel.BACKENDS)
def backend(request):
    with _accel.use_backend(request.param):
        yield request.param


def random_image(rng, width, height, low=0, high=256):
    return Image(rng.integers(low, high, size=(height, width)))


@pytest.fixture
def rng():
    return np.random.default_rng(20240)


_ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record an acceptance result; the summary is printed at session end."""

    def record(number, title, ok, detail=""):
        _ACCEPTANCE[number] = (title, bool(ok), detail)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok, detail = _ACCEPTANCE[number]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {title} -- {detail}")
