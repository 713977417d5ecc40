import pytest

_criteria: dict[int, str] = {}


class CriterionLog:
    """Records one pass/fail line per acceptance criterion."""

    def record(self, number: int, ok: bool, summary: str) -> bool:
        _criteria[number] = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {summary}"
        print(_criteria[number])
        return ok


@pytest.fixture
def criterion() -> CriterionLog:
    return CriterionLog()


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        terminalreporter.write_line(_criteria[number])
