import pytest

from ssg.fixtures import figure1_game, figure3_game

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def fig3():
    return figure3_game()


@pytest.fixture
def fig1():
    return figure1_game()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
