import pytest

from utimage.corpus import corpus

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def corpus3():
    """Seeded 200-polynomial corpus, degrees 2..6."""
    return corpus(200, (2, 6), seed=42)


@pytest.fixture(scope="session")
def corpus2():
    return corpus(100, (2, 6), seed=7)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
