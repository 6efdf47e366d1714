from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from dtcohom import ActionTable, DTMulticurve, DTPantsAction, theta_genus2

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def pants():
    return theta_genus2()


@pytest.fixture
def D():
    return DTMulticurve((1, 1, 0), (0, 0, 0))


@pytest.fixture
def action(pants, D):
    return DTPantsAction(pants, D)


@pytest.fixture
def s3():
    return ActionTable.from_cycles(3, {"a": [(1, 2)], "b": [(2, 3)]})


@pytest.fixture
def swap2():
    return ActionTable.from_cycles(2, {"a": [(1, 2)], "b": [(1, 2)]})


@st.composite
def genus2_multicurves(draw, bound=50):
    """Valid coordinates for the theta decomposition of genus 2: both pants
    see all three curves, so only the total m-sum parity matters."""
    m = draw(st.lists(st.integers(0, bound), min_size=3, max_size=3))
    if sum(m) % 2:
        m[draw(st.integers(0, 2))] += 1
    t = [
        draw(st.integers(-bound, bound)) if mk else draw(st.integers(0, bound))
        for mk in m
    ]
    return DTMulticurve(tuple(m), tuple(t))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
