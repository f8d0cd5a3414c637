ACCEPTANCE_RESULTS: list[tuple[int, str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, ok, note in sorted(ACCEPTANCE_RESULTS):
        line = f"{'PASS' if ok else 'FAIL'} criterion {num:2d}: {title}"
        if note:
            line += f" [{note}]"
        terminalreporter.write_line(line)
