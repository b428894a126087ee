import pytest

from truncbraid.report import Config, verify_all

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def default_report():
    return verify_all(Config(), timestamp="fixed")


@pytest.fixture
def record():
    """Collect one pass/fail line per acceptance criterion."""
    def _record(label: str, ok: bool, detail: str = ""):
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
