import pytest

_LINES = []


class CriterionRecorder:
    def __init__(self, number, title):
        self.number = number
        self.title = title

    def check(self, ok, detail=""):
        status = "PASS" if ok else "FAIL"
        _LINES.append(f"[{status}] criterion {self.number}: {self.title}" + (f" -- {detail}" if detail else ""))
        return ok

    def not_applicable(self, detail):
        _LINES.append(f"[N/A ] criterion {self.number}: {self.title} -- {detail}")


@pytest.fixture
def criterion():
    return CriterionRecorder


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
