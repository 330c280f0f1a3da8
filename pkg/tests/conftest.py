import pytest

from darcais import arithfn

# Integer-valued by construction: g(n) = sum_{d | n} d * a_d makes the
# generating function prod (1 - q^d)^(-x a_d).
_A = [1, -1, 2, 0, 3, -2, 1, 1, -1, 2]


def divisor_weighted_table(length: int = 200) -> arithfn.ArithFn:
    a = [_A[(d - 1) % len(_A)] for d in range(1, length + 1)]
    return arithfn.table(
        [sum(d * a[d - 1] for d in range(1, n + 1) if n % d == 0) for n in range(1, length + 1)]
    )


@pytest.fixture
def custom_table():
    return divisor_weighted_table()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
