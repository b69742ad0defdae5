from __future__ import annotations

import pytest

from golden_data import EX1_TEXT, build_a, build_b

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def set_a():
    return build_a()


@pytest.fixture
def set_b():
    return build_b()


@pytest.fixture
def ex1_path(tmp_path):
    path = tmp_path / "ex1.ins"
    path.write_text(EX1_TEXT, encoding="utf-8")
    return path


@pytest.fixture
def acceptance():
    """Recorder for one pass/fail line per acceptance criterion."""

    def record(line: str) -> None:
        _ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
