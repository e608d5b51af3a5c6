import random

import pytest

from cvect.superpoly import CHART_33
from cvect.expr import parse_field, parse_poly


@pytest.fixture
def rng():
    return random.Random(20240611)


def P(text, chart=CHART_33):
    return parse_poly(text, chart)


def P43(text):
    return parse_poly(text)


def V(text):
    return parse_field(text)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
