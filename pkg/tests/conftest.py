import pytest

from helpers import DATA
from maria import build_index, parse_msa


_acceptance_lines: list[str] = []


@pytest.fixture(scope="session")
def toy():
    return parse_msa((DATA / "toy.txt").read_text())


@pytest.fixture(scope="session")
def toy_index(toy):
    return build_index(toy)


@pytest.fixture
def report():
    """Record one pass/fail line for the acceptance summary."""

    def record(label: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}"
        if detail:
            line += f" ({detail})"
        _acceptance_lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
