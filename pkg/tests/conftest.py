import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from z4rm import _pykernels, kernels  # noqa: E402


@pytest.fixture(params=["compiled", "python"])
def backend(request, monkeypatch):
    """Run a test once per enumeration backend."""
    if request.param == "compiled":
        if kernels.BACKEND != "cython":
            pytest.skip("compiled kernel not built")
    else:
        monkeypatch.setattr(kernels, "lee_distribution", _pykernels.lee_distribution)
    return request.param


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
