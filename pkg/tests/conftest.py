import pytest

from secdaec.registry import all_builtin, builtin

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(params=[s.name for s in all_builtin()])
def spec(request):
    return builtin(request.param)


@pytest.fixture
def record_criterion():
    def record(label: str, ok: bool, detail: str = ""):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  [{detail}]" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
