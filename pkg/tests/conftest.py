# acceptance lines, filled by test_acceptance.py and printed after the run
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=lambda k: (int(k.rstrip("s")), k)):
        terminalreporter.write_line(ACCEPTANCE[key])
