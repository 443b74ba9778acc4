import numpy as np
import pytest

# lines recorded by test_acceptance, echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def random_complex_amps(rng, n):
    a = rng.normal(size=(n, 4)) + 1j * rng.normal(size=(n, 4))
    return a / np.linalg.norm(a, axis=1, keepdims=True)


def random_real_amps(rng, n):
    a = np.abs(rng.normal(size=(n, 4)))
    return a / np.linalg.norm(a, axis=1, keepdims=True)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
