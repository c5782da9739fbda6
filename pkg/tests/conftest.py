"""Shared pytest plumbing: surface the acceptance PASS lines in the
terminal summary, past output capture."""

REPORT_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if REPORT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in REPORT_LINES:
            terminalreporter.write_line(line)
