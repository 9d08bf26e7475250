import numpy as np
import pytest

from pdmeans.linalg_core import random_pd

ACCEPTANCE_LINES: list[str] = []


def pd_pair(dim, seed, log_cond_max=6.0):
    return random_pd(dim, log_cond_max, seed), random_pd(dim, log_cond_max, seed + 1000)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def random_hermitian(rng, dim):
    z = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return 0.5 * (z + z.conj().T)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
