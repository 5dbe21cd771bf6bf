import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mis_hitter.graph import GeneratorSpec, generate, parse_graph6  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def c5():
    return parse_graph6("Dhc")


@pytest.fixture
def petersen():
    return generate(GeneratorSpec("kneser", (5, 2)))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
