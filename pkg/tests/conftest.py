import numpy as np
import pytest

from genpow.harness.generate import complex_gaussian, random_hermitian

ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def hermitian_samples(count, seed, dims=range(2, 9)):
    """Seeded Hermitian matrices cycling through ``dims``."""
    r = np.random.default_rng(seed)
    dims = list(dims)
    return [random_hermitian(r, dims[i % len(dims)]) for i in range(count)]


def general_samples(count, seed, dims=range(2, 9)):
    r = np.random.default_rng(seed)
    dims = list(dims)
    return [complex_gaussian(r, dims[i % len(dims)]) for i in range(count)]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
