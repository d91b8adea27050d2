import pytest

from arithdeg.ratmap import make_map

ACCEPTANCE_LINES: list = []


def record(criterion: int, passed: bool, detail: str) -> None:
    line = f"criterion {criterion}: {'PASS' if passed else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def fib_map():
    return make_map(["2*Y*Z", "X*Y", "Z^2"])


@pytest.fixture
def fib_inverse():
    return make_map(["4*Y*Z", "X^2", "2*X*Z"])


@pytest.fixture
def squaring():
    return make_map(["X^2", "Y^2", "Z^2"])


@pytest.fixture
def ramified():
    return make_map(["X^2", "Y*Z", "Z^2"])
