import os
import random

import pytest
from hypothesis import HealthCheck, settings

from lambdapack.generators import gen_claw, gen_net, gen_prism
from lambdapack.graph import complete_graph

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def net():
    return gen_net()


@pytest.fixture
def prism():
    return gen_prism()


@pytest.fixture
def claw():
    return gen_claw()


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def rng():
    return random.Random(20240611)


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record one pass/fail line for an acceptance criterion."""
    def record(number, ok, detail):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
