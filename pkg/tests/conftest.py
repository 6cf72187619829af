import sys
import random

import pytest

from ropebound.diagram import parse_pd

TREFOIL_PD = "PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]"
FIGURE8_PD = "PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]"
HOPF_PD = "PD[X[4,1,3,2], X[2,3,1,4]]"


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def trefoil():
    return parse_pd(TREFOIL_PD)


@pytest.fixture
def figure8():
    return parse_pd(FIGURE8_PD)


def pytest_terminal_summary(terminalreporter):
    mods = {id(m): m for m in list(sys.modules.values())}.values()
    lines = [l for m in mods for l in getattr(m, "ACCEPTANCE_LINES", ())]
    if lines:
        terminalreporter.section("acceptance")
        for line in lines:
            terminalreporter.write_line(line)
