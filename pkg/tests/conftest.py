import random

import pytest

from circulant_codes import GeneratorVector, min_distance, weight_distribution
from circulant_codes.instances import BY_NAME

ACCEPTANCE_LINES = []


def record_criterion(number, label, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    line = f"[{status}] criterion {number}: {label}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session", autouse=True)
def compiled_kernels():
    # compile (or load cached) kernels once so timings measure enumeration only
    tiny = GeneratorVector.from_bits((0, 1, 0, 1))
    min_distance(tiny)
    weight_distribution(tiny)


@pytest.fixture
def inst():
    return lambda name: BY_NAME[name].alpha


def random_vector(rng, n):
    return GeneratorVector.from_bits((0,) + tuple(rng.randint(0, 1) for _ in range(n - 1)))


@pytest.fixture
def rng():
    return random.Random(20240517)
