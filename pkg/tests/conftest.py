from pathlib import Path

import pytest

CASES = Path(__file__).resolve().parent.parent / "cases"

_criteria: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def cases_dir() -> Path:
    return CASES


@pytest.fixture
def record_criterion():
    """Acceptance tests report ``(number, passed, summary)``; the summary hook prints them."""

    def record(number: int, passed: bool, summary: str) -> None:
        _criteria[number] = (passed, summary)
        print(f"criterion {number}: {'PASS' if passed else 'FAIL'}: {summary}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        passed, summary = _criteria[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if passed else 'FAIL'}  {summary}")
